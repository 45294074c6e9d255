// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any
// failure. Every comparison is exact.

#include "dblsurf/strata.hpp"
#include "oracle/combinatorics_oracle.hpp"
#include "oracle/curve_forms.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace dblsurf;

namespace {

const SurfaceModel Q = SurfaceModel::double_quadric();
const SurfaceModel P2 = SurfaceModel::double_plane();
const DivClass L{1, 0};

struct Check {
  std::size_t checked = 0;
  std::ostringstream failure;
  bool failed = false;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && !failed) {
      failed = true;
      failure << what;
    }
  }
};

void genus_formula(Check& c) {
  for (int b = 0; b <= 10; ++b) {
    Triple T(CurveSpec::integral(Q, L), {2, 0}, ZeroCycle::of_degree(b + 2));
    c.expect(triple_genus(T) == -2 - b, "triple line b=" + std::to_string(b));
  }
  for (int d = 1; d <= 10; ++d) {
    SurfaceModel F = SurfaceModel::general_doubling(d);
    for (int z = 0; z <= 2 * d; ++z) {
      Triple T(CurveSpec::integral(F, {1}), {1}, ZeroCycle::of_degree(z));
      c.expect(triple_genus(T) == d - 1 - z, "doubling d=" + std::to_string(d) + " z=" + std::to_string(z));
    }
  }
}

void quadric_obstruction(Check& c) {
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) {
      const DivClass R{a, b};
      CurveSpec curve = CurveSpec::integral(Q, R);
      CohomTable t = coh(curve, R - Q.ribbon_twist(), ZeroCycle::none());
      c.expect(t.h1 == Integer(1), "R=P=" + R.str());
      for (int pa = a; pa <= 5; ++pa)
        for (int pb = b; pb <= 5; ++pb) {
          const DivClass P{pa, pb};
          if (P == R) continue;
          CohomTable s = coh(curve, P - Q.ribbon_twist(), ZeroCycle::none());
          c.expect(s.h1 == Integer(0), "R=" + R.str() + " < P=" + P.str());
        }
    }
  // a > b by symmetry of the rulings
  for (int a = 2; a <= 5; ++a)
    for (int b = 1; b < a; ++b)
      c.expect(coh(CurveSpec::integral(Q, {a, b}), DivClass{a, b} - Q.ribbon_twist(), ZeroCycle::none()).h1 ==
                   Integer(1),
               "swapped R=P");
}

void line_unions(Check& c) {
  for (int b = 1; b <= 5; ++b)
    for (int z = 0; z <= 6; ++z)
      for (const auto& alloc : all_allocations(z, b)) {
        Triple T(CurveSpec::disjoint_lines(Q, {0, 1}, b), {0, b}, ZeroCycle::allocated(alloc));
        bool each_met = std::all_of(alloc.begin(), alloc.end(), [](const Integer& p) { return p >= 1; });
        ExistenceVerdict v = check_existence(T);
        c.expect((v.outcome == Outcome::Exists) == each_met, T.describe());
      }
}

void double_lines(Check& c) {
  CurveSpec R = CurveSpec::double_line(Q, L);
  for (int z = 0; z <= 10; ++z)
    for (int w = 0; w <= z; ++w) {
      ExistenceVerdict v = check_existence(Triple(R, {2, 0}, ZeroCycle::on_double_line(w, z - w)));
      bool fires = v.branch == CascadeBranch::Regularity && v.conditions.regularity == true;
      c.expect(fires == (2 <= w && w <= z - 2), "z=" + std::to_string(z) + " w=" + std::to_string(w));
    }
}

void strata_dimensions(Check& c) {
  for (int g = -6; g <= -1; ++g) {
    const std::string at = "g=" + std::to_string(g);
    c.expect(stratum_dimension(Q, 1 - g, {2, 0}, {2, 0}).stratum_dim == 2 - 2 * g, "pairs " + at);
    StratumReport single = stratum_dimension(Q, 1 - g, L, L);
    c.expect(single.stratum_dim - single.dim_Hxi == 1 - 2 * g, "fixed support " + at);
    ThickFourLineReport r = thick_four_line_analysis(g);
    c.expect(r.hom_dim_proj == 5 - 3 * g && r.on_X_codim == 4 - g && r.fixed_L_dim == 1 - 2 * g &&
                 r.total_dim == 2 - 2 * g,
             "thick counts " + at);
    c.expect(r.double_line_pairs_dim == 2 - 2 * g, "thick comparison " + at);
    c.expect(r.verdict == SpecializationVerdict::NotSpecialization, "verdict " + at);
  }
}

void nonexistence(Check& c) {
  CurveSpec conic = CurveSpec::integral(Q, {1, 1});
  ExistenceVerdict v = check_existence(Triple(conic, {1, 1}, ZeroCycle::of_degree(1)));
  c.expect(v.outcome == Outcome::NotExists && v.code == "NO_QUARTIC_GENUS2", "z=1");
  for (int z = 2; z <= 12; ++z)
    c.expect(check_existence(Triple(conic, {1, 1}, ZeroCycle::of_degree(z))).outcome == Outcome::Exists,
             "z=" + std::to_string(z));
}

void double_plane(Check& c) {
  std::size_t seen = 0;
  for (int d = 1; d <= 6; ++d)
    for (int g = -40; g <= 10; ++g)
      for (const auto& t : enumerate_triples(P2, d, g)) {
        ++seen;
        Triple T = Triple::generic(P2, t.z, t.xi, t.eta);
        c.expect(check_existence(T).outcome == Outcome::Exists, T.describe());
      }
  c.expect(seen > 100, "enumeration produced too few triples");
}

void lifting(Check& c) {
  for (int b = 0; b <= 10; ++b) {
    Triple T(CurveSpec::integral(Q, L), {2, 0}, ZeroCycle::of_degree(b + 2));
    LiftingReport r = lifting_check(T);
    c.expect(r.lifts, "triple line b=" + std::to_string(b));
    // O_L(Z + P - F - H) = O_{P^1}(b - 1)
    CohomTable twisted = coh(T.residual(), T.residual_twist(1), T.zero_cycle());
    c.expect(twisted.h1 == h1_p1(b - 1) && twisted.h1 == Integer(0), "O(b-1) b=" + std::to_string(b));
  }
  LiftingReport conic = lifting_check(Triple(CurveSpec::integral(Q, {1, 1}), {1, 1}, ZeroCycle::none()));
  c.expect(!conic.lifts, "{0,(1,1),(1,1)}");
}

std::vector<CurveSpec> oracle_shapes(const DivClass& cls) {
  std::vector<CurveSpec> out{generic_curve(Q, cls)};
  if (cls[0] >= 1 && cls[1] >= 1) out.push_back(CurveSpec::integral(Q, cls));
  if (cls == DivClass{2, 0}) out.push_back(CurveSpec::double_line(Q, L));
  if (cls == DivClass{0, 2}) out.push_back(CurveSpec::double_line(Q, {0, 1}));
  if (cls[0] >= 2 && cls[1] >= 1)
    out.push_back(CurveSpec::union_of(CurveSpec::integral(Q, L), CurveSpec::integral(Q, cls - L)));
  return out;
}

void oracle_equivalence(Check& c) {
  std::size_t compared = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      if (a == 0 && b == 0) continue;
      const DivClass cls{a, b};
      for (const CurveSpec& R : oracle_shapes(cls)) {
        oracle::BiForm f = oracle::equation_for(R, 1000003ULL * a + 7919ULL * b + 17);
        for (int da = -4; da <= 4; ++da)
          for (int db = -4; db <= 4; ++db) {
            const DivClass D{da, db};
            std::vector<CohomTable> tables{coh(R, D, ZeroCycle::none()), coh_restriction_sequence(Q, cls, D)};
            if (R.shape() == ShapeKind::Integral) tables.push_back(coh_integral(R, D, ZeroCycle::none()));
            if (R.shape() == ShapeKind::DisjointLines) tables.push_back(coh_lines(R, D, ZeroCycle::none()));
            if (R.shape() == ShapeKind::DoubleLine)
              tables.push_back(coh_double_line(R, D, ZeroCycle::on_double_line(0, 0)));
            if (R.shape() == ShapeKind::Union) tables.push_back(coh_union(R, D, ZeroCycle::none()));
            std::optional<oracle::CurveCounts> truth;
            for (const CohomTable& t : tables) {
              if (!t.known()) continue;
              if (!truth) truth = oracle::quadric_curve_cohomology(f, da, db);
              ++compared;
              c.expect(*t.h0 == truth->h0 && *t.h1 == truth->h1, R.describe() + " D=" + D.str());
            }
          }
        for (int da = -4; da <= 4; ++da)
          for (int db = -4; db <= 4; ++db)
            for (int z = 0; z <= 8; ++z) {
              ZeroCycle Z = generic_zero_cycle(R, z);
              CohomTable t = coh(R, {da, db}, Z);
              c.expect(t.chi == curve_chi(R, {da, db}, Z), "chi " + R.describe());
              if (t.known()) c.expect(*t.h0 - *t.h1 == t.chi && *t.h0 >= 0 && *t.h1 >= 0, "h0-h1 " + R.describe());
            }
      }
    }
  c.expect(compared > 3000, "too few oracle comparisons: " + std::to_string(compared));
}

void enumeration(Check& c) {
  for (bool plane : {true, false}) {
    const SurfaceModel& F = plane ? P2 : Q;
    for (int d = 1; d <= 5; ++d)
      for (int g = -8; g <= 2; ++g) {
        const std::string at = F.name() + " d=" + std::to_string(d) + " g=" + std::to_string(g);
        auto rows = enumerate_triples(F, d, g);
        c.expect(rows.size() == oracle::brute_force_triples(plane, d, g).size(), "count " + at);
        for (const auto& t : rows) {
          if (t.xi.is_zero()) {
            c.expect(degree(F, t.eta) == d && class_genus(F, t.eta) == g, "in-surface " + at);
            continue;
          }
          Triple T = Triple::generic(F, t.z, t.xi, t.eta);
          c.expect(triple_degree(T) == d && triple_genus(T) == g, T.describe() + " " + at);
        }
      }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"genus formula", genus_formula},
      {"quadric H1 obstruction", quadric_obstruction},
      {"line-union criterion", line_unions},
      {"double-line criterion", double_lines},
      {"stratum dimensions", strata_dimensions},
      {"nonexistence", nonexistence},
      {"double-plane universality", double_plane},
      {"lifting", lifting},
      {"oracle equivalence", oracle_equivalence},
      {"enumeration round-trip", enumeration},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failed = true;
      c.failure << "exception: " << e.what();
    }
    std::cout << (c.failed ? "FAIL " : "PASS ") << (i + 1) << " " << criteria[i].first << " (" << c.checked
              << " checks)";
    if (c.failed) std::cout << ": " << c.failure.str();
    std::cout << '\n';
    failures += c.failed ? 1 : 0;
  }
  return failures == 0 ? 0 : 1;
}
