#pragma once

#include "dblsurf/curve_cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dblsurf {

/// The triple {Z, R, P} of a curve C on X = 2F: R subset P effective divisors
/// on F and Z a zero-cycle on R.
class Triple {
 public:
  /// Validates R <= P componentwise, P effective, and Z against R.
  Triple(CurveSpec residual, DivClass divisorial, ZeroCycle zero_cycle);

  /// Triple with the generic curve of class xi and the generic zero-cycle of
  /// degree z on it.
  static Triple generic(const SurfaceModel& F, const Integer& z, const DivClass& xi, const DivClass& eta);

  const SurfaceModel& surface() const { return residual_.surface(); }
  const CurveSpec& residual() const { return residual_; }
  const DivClass& divisorial() const { return divisorial_; }
  const ZeroCycle& zero_cycle() const { return zero_cycle_; }
  const Integer& z() const { return zero_cycle_.degree; }

  /// P - F - hH, the twist whose cohomology on R decides existence.
  DivClass residual_twist(int hyperplanes = 0) const;

  std::string describe() const;

 private:
  CurveSpec residual_;
  DivClass divisorial_;
  ZeroCycle zero_cycle_;
};

/// p_a(C) = p_a(P) + p_a(R) + deg_R O_R(F) - deg Z - 1.
Integer triple_genus(const Triple& T);

/// deg C = deg R + deg P.
Integer triple_degree(const Triple& T);

/// Numerical data of one stratum: an empty xi means R is empty.
struct TripleNumerics {
  Integer z;
  DivClass xi;
  DivClass eta;
  friend bool operator==(const TripleNumerics&, const TripleNumerics&) = default;
};

/// All (z, xi, eta) with 0 <= xi <= eta, deg xi + deg eta = d and genus g.
/// Nonempty xi come first, then the strata with R empty; within each group
/// classes are in descending lexicographic order.
std::vector<TripleNumerics> enumerate_triples(const SurfaceModel& F, const Integer& d, const Integer& g);

/// deg Z + chi O_R(P - F); R must be nonempty.
Integer fiber_dimension(const Triple& T);

enum class Outcome { Exists, ExistsSpecial, NotExists, Inconclusive };
std::string to_string(Outcome outcome);

/// Which step of the existence cascade produced the verdict.
enum class CascadeBranch {
  InSurface,          // R empty, C inside F
  VanishingWithoutZ,  // h^1(O_R(P-F)) = 0
  Regularity,         // h^1(O_R(Z+P-F-H)) = 0
  Direct,             // h^1(O_R(Z+P-F)) = 0 and global generation
  SpecialTable,
  None,
};
std::string to_string(CascadeBranch branch);

enum class DimensionKind { Fiber, LinearSystem };

/// Per-criterion record; nullopt means the engines could not decide.
struct ExistenceConditions {
  std::optional<bool> h1_vanishes;                  // h^1(O_R(Z+P-F)) = 0
  std::optional<bool> globally_generated_surrogate;  // O_R(Z+P-F) generated
  std::optional<bool> regularity;                   // h^1(O_R(Z+P-F-H)) = 0
  std::optional<bool> vanishing_without_z;          // h^1(O_R(P-F)) = 0
};

struct ExistenceVerdict {
  Outcome outcome = Outcome::Inconclusive;
  CascadeBranch branch = CascadeBranch::None;
  std::optional<Integer> dimension;
  DimensionKind dimension_kind = DimensionKind::Fiber;
  std::string code;
  std::string anchor;
  bool generality_assumed = false;
  ExistenceConditions conditions;
  CohomTable twisted;  // O_R(Z+P-F)
  std::vector<std::string> failed_conditions;

  bool exists() const { return outcome == Outcome::Exists || outcome == Outcome::ExistsSpecial; }
};

ExistenceVerdict check_existence(const Triple& T);

}  // namespace dblsurf
