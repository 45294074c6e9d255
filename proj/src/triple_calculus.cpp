#include "dblsurf/triple_calculus.hpp"

#include "dblsurf/errors.hpp"
#include "dblsurf/special_cases.hpp"
#include "dblsurf/strata.hpp"

#include <algorithm>

namespace dblsurf {

Triple::Triple(CurveSpec residual, DivClass divisorial, ZeroCycle zero_cycle)
    : residual_(std::move(residual)), divisorial_(std::move(divisorial)) {
  const SurfaceModel& F = residual_.surface();
  F.check_rank(divisorial_);
  if (!divisorial_.is_effective_shaped()) throw DomainError("P must be effective, got " + divisorial_.str());
  if (!leq(residual_.total_class(), divisorial_))
    throw DomainError("R " + residual_.total_class().str() + " is not contained in P " + divisorial_.str());
  zero_cycle_ = normalize_zero_cycle(residual_, zero_cycle);
}

Triple Triple::generic(const SurfaceModel& F, const Integer& z, const DivClass& xi, const DivClass& eta) {
  CurveSpec R = generic_curve(F, xi);
  return Triple(R, eta, generic_zero_cycle(R, z));
}

DivClass Triple::residual_twist(int hyperplanes) const {
  const SurfaceModel& F = surface();
  if (F.has_lattice()) return divisorial_ - F.ribbon_twist() - Integer(hyperplanes) * F.hyperplane();
  // Degrees on L: P.L = m(2 - d), F.L = d, H.L = 1.
  LineRestriction line = line_restriction(F);
  return DivClass({divisorial_[0] * line.self_intersection - line.twist_degree -
                   Integer(hyperplanes) * line.hyperplane_degree});
}

std::string Triple::describe() const {
  return "{z=" + z().str() + ", R=" + residual_.describe() + ", P=" + divisorial_.str() + "}";
}

Integer triple_genus(const Triple& T) {
  const SurfaceModel& F = T.surface();
  const DivClass& xi = T.residual().total_class();
  return class_genus(F, T.divisorial()) + class_genus(F, xi) + degree_on(F, xi, F.ribbon_twist()) - T.z() - 1;
}

Integer triple_degree(const Triple& T) {
  const SurfaceModel& F = T.surface();
  return degree(F, T.divisorial()) + degree(F, T.residual().total_class());
}

std::vector<TripleNumerics> enumerate_triples(const SurfaceModel& F, const Integer& d, const Integer& g) {
  F.require_lattice("enumerate_triples");
  if (d < 1) throw DomainError("degree must be >= 1");
  const long long deg = to_machine(d, "degree");
  const DivClass zero = F.zero();

  std::vector<DivClass> effective;  // all effective classes of degree <= d
  if (F.kind() == SurfaceKind::DoublePlane) {
    for (long long e = 0; e <= deg; ++e) effective.push_back(DivClass{e});
  } else {
    for (long long a = 0; a <= deg; ++a)
      for (long long b = 0; a + b <= deg; ++b) effective.push_back(DivClass{a, b});
  }

  std::vector<TripleNumerics> with_residual, in_surface;
  for (const auto& eta : effective) {
    const Integer eta_deg = degree(F, eta);
    const Integer p_eta = class_genus(F, eta);
    if (eta_deg == d && p_eta == g) in_surface.push_back({0, zero, eta});
    for (const auto& xi : effective) {
      if (xi.is_zero() || !leq(xi, eta) || degree(F, xi) + eta_deg != d) continue;
      Integer z = p_eta + class_genus(F, xi) + intersect(F, xi, F.ribbon_twist()) - 1 - g;
      if (z >= 0) with_residual.push_back({z, xi, eta});
    }
  }
  auto descending = [](const TripleNumerics& a, const TripleNumerics& b) {
    if (a.xi != b.xi) return lex_less(b.xi, a.xi);
    return lex_less(b.eta, a.eta);
  };
  std::sort(with_residual.begin(), with_residual.end(), descending);
  std::sort(in_surface.begin(), in_surface.end(), descending);
  with_residual.insert(with_residual.end(), in_surface.begin(), in_surface.end());
  return with_residual;
}

Integer fiber_dimension(const Triple& T) {
  if (T.residual().is_empty()) throw DomainError("fiber dimension needs a nonempty residual curve");
  return T.z() + curve_chi(T.residual(), T.residual_twist(), ZeroCycle::none());
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Exists: return "Exists";
    case Outcome::ExistsSpecial: return "ExistsSpecial";
    case Outcome::NotExists: return "NotExists";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(CascadeBranch branch) {
  switch (branch) {
    case CascadeBranch::InSurface: return "IN_SURFACE";
    case CascadeBranch::VanishingWithoutZ: return "VANISHING_WITHOUT_Z";
    case CascadeBranch::Regularity: return "REGULARITY";
    case CascadeBranch::Direct: return "DIRECT";
    case CascadeBranch::SpecialTable: return "SPECIAL_TABLE";
    case CascadeBranch::None: return "NONE";
  }
  return "?";
}

namespace {

std::optional<bool> vanishes(const CohomTable& t) {
  if (!t.h1) return std::nullopt;
  return *t.h1 == 0;
}

bool degeneration_chain_holds(const Triple& T) {
  const DivClass& P = T.divisorial();
  const Integer a = std::min(P[0], P[1]);
  const Integer b = std::max(P[0], P[1]);
  return general_ZPP_quadric(a, b, T.z()).holds;
}

}  // namespace

ExistenceVerdict check_existence(const Triple& T) {
  ExistenceVerdict v;
  const CurveSpec& R = T.residual();
  const ZeroCycle& Z = T.zero_cycle();

  if (R.is_empty()) {
    v.outcome = Outcome::Exists;
    v.branch = CascadeBranch::InSurface;
    v.code = "IN_F";
    v.anchor = "R is empty exactly when C lies in F";
    v.dimension_kind = DimensionKind::LinearSystem;
    if (T.surface().has_lattice()) v.dimension = dim_linear_system(T.surface(), T.divisorial());
    v.twisted = CohomTable::exact(0, 0, CohomRule::EmptyCurve);
    v.conditions = {true, true, true, true};
    return v;
  }

  const DivClass twist = T.residual_twist();
  v.twisted = coh(R, twist, Z);
  ExistenceConditions& c = v.conditions;
  c.vanishing_without_z = vanishes(coh(R, twist, ZeroCycle::none()));
  c.regularity = vanishes(coh(R, T.residual_twist(1), Z));
  c.h1_vanishes = vanishes(v.twisted);
  c.globally_generated_surrogate = globally_generated(R, twist, Z);
  // Both practical conditions imply the vanishing; regularity also gives
  // global generation.
  if (c.vanishing_without_z == true || c.regularity == true) c.h1_vanishes = true;
  if (c.regularity == true) c.globally_generated_surrogate = true;

  auto exists = [&](CascadeBranch branch, const char* code, const char* anchor) {
    v.outcome = Outcome::Exists;
    v.branch = branch;
    v.code = code;
    v.anchor = anchor;
    v.dimension = fiber_dimension(T);
    return v;
  };

  if (c.vanishing_without_z == true)
    return exists(CascadeBranch::VanishingWithoutZ, "H1_VANISHES_WITHOUT_Z",
                  "h1(O_R(P-F)) = 0, so the conditions hold for every Z");
  if (c.regularity == true)
    return exists(CascadeBranch::Regularity, "REGULARITY", "h1(O_R(Z+P-F-H)) = 0, Castelnuovo-Mumford regularity");
  if (c.h1_vanishes == true && c.globally_generated_surrogate == true)
    return exists(CascadeBranch::Direct, "DIRECT", "h1(O_R(Z+P-F)) = 0 and O_R(Z+P-F) is generated");

  if (const SpecialCase* entry = find_special_case(T);
      entry && (!entry->needs_degeneration_chain || degeneration_chain_holds(T))) {
    v.outcome = entry->outcome;
    v.branch = CascadeBranch::SpecialTable;
    v.code = std::string(entry->code);
    v.anchor = std::string(entry->anchor);
    v.generality_assumed = entry->needs_general_z;
    if (entry->outcome == Outcome::Exists) v.dimension = fiber_dimension(T);
    return v;
  }

  v.outcome = Outcome::Inconclusive;
  v.branch = CascadeBranch::None;
  v.code = "INCONCLUSIVE";
  auto note = [&](const std::optional<bool>& value, const char* name) {
    if (value != true) v.failed_conditions.push_back(std::string(name) + (value ? "=false" : "=unknown"));
  };
  note(c.h1_vanishes, "h1_vanishes");
  note(c.globally_generated_surrogate, "globally_generated_surrogate");
  note(c.regularity, "regularity");
  note(c.vanishing_without_z, "vanishing_without_z");
  return v;
}

}  // namespace dblsurf
