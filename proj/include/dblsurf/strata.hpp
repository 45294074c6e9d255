#pragma once

#include "dblsurf/triple_calculus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dblsurf {

/// dim |c| = h^0(O_F(c)) - 1.
Integer dim_linear_system(const SurfaceModel& F, const DivClass& c);

/// Dimension of the component of the flag scheme D_{z,xi} that dominates
/// H_xi: dim H_xi + z.
Integer dim_flag(const SurfaceModel& F, const Integer& z, const DivClass& xi);

enum class IrreducibilityKind { Irreducible, Components, Unknown };

struct Irreducibility {
  IrreducibilityKind kind = IrreducibilityKind::Unknown;
  Integer components = 0;  // set for Components
};

std::string to_string(IrreducibilityKind kind);

/// Unordered partitions of n into at most k parts.
Integer partitions_at_most(const Integer& n, const Integer& k);

Irreducibility irreducibility(const SurfaceModel& F, const Integer& z, const DivClass& xi, const DivClass& eta);

struct StratumReport {
  Integer z;
  DivClass xi;
  DivClass eta;
  Integer dim_Hxi;
  Integer dim_Dzxi;
  Integer dim_residual_system;  // dim H_{eta - xi}
  Integer dim_D_total;
  Integer fiber_dim;
  /// dim_D_total + fiber_dim; a genuine component dimension when on_V.
  Integer stratum_dim;
  /// h^1(O_R(Z+P-F)) = 0 for the generic triple; nullopt when undecided.
  std::optional<bool> on_V;
  Irreducibility irreducibility;
};

/// Stratum dimension of H_{z,xi,eta}, evaluated on the generic curve of
/// class xi with a balanced zero-cycle.
StratumReport stratum_dimension(const SurfaceModel& F, const Integer& z, const DivClass& xi, const DivClass& eta);

struct LiftingReport {
  bool lifts = false;
  CohomTable table;  // O_R(Z+P-F)
  DivClass dominated_class;
  Integer dominated_dim;  // dim H_xi, or nullopt-like 0 when not modeled
  bool dominated_dim_known = false;
};

/// True iff h^1(O_R(Z+P-F)) = 0 is decided; then a general deformation of R
/// inside |xi| lifts.
LiftingReport lifting_check(const Triple& T);

enum class SpecializationVerdict { NotSpecialization, DimensionObstruction, NoObstruction };
std::string to_string(SpecializationVerdict verdict);

/// Counts for thick 4-lines of genus g on 2Q against disjoint pairs of
/// double lines. Requires g <= -1.
struct ThickFourLineReport {
  Integer genus;
  Integer hom_dim_proj;     // thick 4-lines on a fixed line in P^3
  Integer on_X_codim;       // conditions to lie on X
  Integer fixed_L_dim;      // thick 4-lines on X with fixed support
  Integer total_dim;        // support varying in one ruling
  Integer double_line_pairs_dim;  // from stratum_dimension
  SpecializationVerdict verdict = SpecializationVerdict::NoObstruction;
};

ThickFourLineReport thick_four_line_analysis(const Integer& g);

/// Degeneration of the general {Z,P,P} on 2Q, P of type (a,b), 1 < a < b.
struct DegenerationReport {
  Integer a, b, z;
  DivClass rational_part;      // C = (1, b-a+1)
  DivClass intersection_part;  // E = (a-1, a-1)
  CohomTable rational_piece;   // O_C(Z+C-Q)
  CohomTable residual_piece;   // O_E(Z+C+E-Q), Z off E
  CohomTable total;            // O_{C u E}(Z+C+E-Q)
  bool holds = false;
  std::vector<std::string> log;
};

DegenerationReport general_ZPP_quadric(const Integer& a, const Integer& b, const Integer& z);

}  // namespace dblsurf
