#include "dblsurf/strata.hpp"

#include "dblsurf/errors.hpp"

#include <algorithm>
#include <vector>

namespace dblsurf {

Integer dim_linear_system(const SurfaceModel& F, const DivClass& c) { return coh_F(F, c).h0 - 1; }

Integer dim_flag(const SurfaceModel& F, const Integer& z, const DivClass& xi) {
  if (!xi.is_effective_shaped()) throw DomainError("flag scheme needs an effective class, got " + xi.str());
  if (z < 0) throw DomainError("zero-cycle degree must be >= 0");
  return dim_linear_system(F, xi) + z;
}

std::string to_string(IrreducibilityKind kind) {
  switch (kind) {
    case IrreducibilityKind::Irreducible: return "Irreducible";
    case IrreducibilityKind::Components: return "Components";
    case IrreducibilityKind::Unknown: return "Unknown";
  }
  return "?";
}

Integer partitions_at_most(const Integer& n, const Integer& k) {
  if (n < 0 || k < 0) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  if (k == 1 || n <= 1) return 1;
  const long long size = to_machine(n, "partition size");
  if (size > 100000) throw DomainError("partition size too large: " + n.str());
  const long long parts = static_cast<long long>(std::min<Integer>(k, n));
  // Partitions into at most k parts = partitions with every part <= k.
  std::vector<Integer> count(static_cast<std::size_t>(size) + 1, 0);
  count[0] = 1;
  for (long long part = 1; part <= parts; ++part)
    for (long long total = part; total <= size; ++total) count[total] += count[total - part];
  return count[size];
}

Irreducibility irreducibility(const SurfaceModel& F, const Integer& z, const DivClass& xi, const DivClass& eta) {
  F.check_rank(xi);
  F.check_rank(eta);
  switch (F.kind()) {
    case SurfaceKind::DoublePlane: return {IrreducibilityKind::Irreducible, 0};
    case SurfaceKind::GeneralDoubling: return {IrreducibilityKind::Unknown, 0};
    case SurfaceKind::DoubleQuadric: break;
  }
  if (xi.is_zero() || (xi[0] > 0 && xi[1] > 0)) return {IrreducibilityKind::Irreducible, 0};
  if (xi[0] < 0 || xi[1] < 0) return {IrreducibilityKind::Unknown, 0};
  // Generic member: b disjoint lines; components follow how Z spreads over them.
  const Integer b = xi[0] == 0 ? xi[1] : xi[0];
  Integer count = partitions_at_most(z, b);
  if (count == 1) return {IrreducibilityKind::Irreducible, 0};
  return {IrreducibilityKind::Components, count};
}

StratumReport stratum_dimension(const SurfaceModel& F, const Integer& z, const DivClass& xi, const DivClass& eta) {
  F.require_lattice("stratum_dimension");
  F.check_rank(xi);
  F.check_rank(eta);
  if (!xi.is_effective_shaped() || !leq(xi, eta))
    throw DomainError("stratum needs 0 <= xi <= eta, got xi=" + xi.str() + " eta=" + eta.str());
  if (xi.is_zero() && z != 0) throw DomainError("an empty residual curve carries no zero-cycle");

  StratumReport r;
  r.z = z;
  r.xi = xi;
  r.eta = eta;
  r.dim_Hxi = xi.is_zero() ? Integer(0) : dim_linear_system(F, xi);
  r.dim_Dzxi = r.dim_Hxi + z;
  r.dim_residual_system = dim_linear_system(F, eta - xi);
  r.dim_D_total = r.dim_Dzxi + r.dim_residual_system;
  if (xi.is_zero()) {
    r.fiber_dim = 0;
    r.on_V = true;
  } else {
    Triple T = Triple::generic(F, z, xi, eta);
    r.fiber_dim = fiber_dimension(T);
    const CohomTable table = coh(T.residual(), T.residual_twist(), T.zero_cycle());
    if (table.h1) r.on_V = (*table.h1 == 0);
  }
  r.stratum_dim = r.dim_D_total + r.fiber_dim;
  r.irreducibility = irreducibility(F, z, xi, eta);
  return r;
}

LiftingReport lifting_check(const Triple& T) {
  LiftingReport r;
  r.dominated_class = T.residual().total_class();
  if (T.surface().has_lattice() && !T.residual().is_empty()) {
    r.dominated_dim = dim_linear_system(T.surface(), r.dominated_class);
    r.dominated_dim_known = true;
  }
  r.table = coh(T.residual(), T.residual_twist(), T.zero_cycle());
  r.lifts = r.table.h1_vanishes();
  return r;
}

std::string to_string(SpecializationVerdict verdict) {
  switch (verdict) {
    case SpecializationVerdict::NotSpecialization: return "NOT_SPECIALIZATION";
    case SpecializationVerdict::DimensionObstruction: return "DIMENSION_OBSTRUCTION";
    case SpecializationVerdict::NoObstruction: return "NO_OBSTRUCTION";
  }
  return "?";
}

ThickFourLineReport thick_four_line_analysis(const Integer& g) {
  if (g > -1) throw DomainError("thick 4-line counts need genus g <= -1, got " + g.str());
  const SurfaceModel Q = SurfaceModel::double_quadric();
  ThickFourLineReport r;
  r.genus = g;
  // Surjections I_{L^(2)} = O_L(-2)^3 -> O_L(-g-1): sections of O_L(1-g)^3,
  // taken up to scalars.
  r.hom_dim_proj = 3 * h0_p1(1 - g) - 1;
  // Sending the equation of X to zero is one section of O_L(3-g).
  r.on_X_codim = h0_p1(3 - g);
  r.fixed_L_dim = r.hom_dim_proj - r.on_X_codim;
  r.total_dim = r.fixed_L_dim + dim_linear_system(Q, DivClass{1, 0});
  r.double_line_pairs_dim = stratum_dimension(Q, 1 - g, DivClass{2, 0}, DivClass{2, 0}).stratum_dim;
  if (r.total_dim == r.double_line_pairs_dim)
    r.verdict = SpecializationVerdict::NotSpecialization;
  else if (r.total_dim > r.double_line_pairs_dim)
    r.verdict = SpecializationVerdict::DimensionObstruction;
  else
    r.verdict = SpecializationVerdict::NoObstruction;
  return r;
}

DegenerationReport general_ZPP_quadric(const Integer& a, const Integer& b, const Integer& z) {
  if (!(1 < a && a < b)) throw DomainError("degeneration needs 1 < a < b, got (" + a.str() + "," + b.str() + ")");
  if (z < 1) throw DomainError("degeneration needs deg Z > 0");
  const SurfaceModel Q = SurfaceModel::double_quadric();
  const DivClass twist = Q.ribbon_twist();

  DegenerationReport r;
  r.a = a;
  r.b = b;
  r.z = z;
  r.rational_part = DivClass(std::vector<Integer>{1, b - a + 1});
  r.intersection_part = DivClass(std::vector<Integer>{a - 1, a - 1});
  const CurveSpec C = CurveSpec::integral(Q, r.rational_part);
  const CurveSpec E = CurveSpec::integral(Q, r.intersection_part);
  const DivClass P = r.rational_part + r.intersection_part;

  r.rational_piece = coh_integral(C, r.rational_part - twist, ZeroCycle::of_degree(z));
  r.residual_piece = coh_integral(E, P - twist, ZeroCycle::none());
  r.total = coh_union(CurveSpec::union_of(C, E), P - twist, ZeroCycle::allocated({z, 0}));

  auto line = [](const char* what, const CohomTable& t) {
    return std::string(what) + ": h1 " + (t.h1 ? t.h1->str() : std::string("UNKNOWN")) + " via " + to_string(t.rule);
  };
  r.log.push_back("C = " + r.rational_part.str() + ", E = " + r.intersection_part.str() + ", C + E = " + P.str());
  r.log.push_back(line("O_C(Z+C-Q)", r.rational_piece));
  r.log.push_back(line("O_E(Z+C+E-Q)", r.residual_piece));
  r.log.push_back(line("O_{C u E}(Z+C+E-Q)", r.total));
  r.holds = r.rational_piece.h1_vanishes() && r.residual_piece.h1_vanishes() && r.total.h1_vanishes();
  r.log.push_back(r.holds ? "all three vanish: the general {Z,P,P} arises" : "a vanishing failed");
  return r;
}

}  // namespace dblsurf
