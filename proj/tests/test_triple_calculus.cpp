#include "dblsurf/errors.hpp"
#include "dblsurf/special_cases.hpp"
#include "dblsurf/triple_calculus.hpp"
#include "oracle/combinatorics_oracle.hpp"
#include "oracle/monomial_oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dblsurf;

namespace {

const SurfaceModel Q = SurfaceModel::double_quadric();
const SurfaceModel P2 = SurfaceModel::double_plane();
const DivClass L{1, 0};

Triple triple_line(int b) { return Triple(CurveSpec::integral(Q, L), {2, 0}, ZeroCycle::of_degree(b + 2)); }

Triple doubling_line(int d, int z) {
  SurfaceModel F = SurfaceModel::general_doubling(d);
  return Triple(CurveSpec::integral(F, {1}), {1}, ZeroCycle::of_degree(z));
}

std::vector<int> ints(const DivClass& c) {
  std::vector<int> out;
  for (const auto& v : c.coords()) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

TEST_CASE("triple validation") {
  CHECK_THROWS_AS(Triple(CurveSpec::integral(Q, {1, 1}), {1, 0}, ZeroCycle::none()), DomainError);
  CHECK_THROWS_AS(Triple(CurveSpec::empty(Q), {1, 1}, ZeroCycle::of_degree(2)), DomainError);
  CHECK_THROWS_AS(Triple(CurveSpec::integral(Q, L), {-1, 2}, ZeroCycle::none()), DomainError);
  CHECK_THROWS_AS(Triple(CurveSpec::integral(Q, L), {2, 0, 0}, ZeroCycle::none()), DomainError);
}

TEST_CASE("genus formula") {
  for (int b = 0; b <= 10; ++b) CHECK(triple_genus(triple_line(b)) == -2 - b);
  for (int d = 1; d <= 10; ++d)
    for (int z = 0; z <= 2 * d; ++z) CHECK(triple_genus(doubling_line(d, z)) == d - 1 - z);
  CHECK(triple_genus(Triple(CurveSpec::empty(Q), {1, 1}, ZeroCycle::none())) == 0);
}

TEST_CASE("degree formula") {
  CHECK(triple_degree(Triple(CurveSpec::integral(Q, L), L, ZeroCycle::of_degree(3))) == 2);
  CHECK(triple_degree(triple_line(4)) == 3);
  CHECK(triple_degree(Triple(CurveSpec::double_line(Q, L), {2, 0}, ZeroCycle::on_double_line(3, 3))) == 4);
}

TEST_CASE("enumeration examples") {
  std::vector<TripleNumerics> expected = {
      {2, {1, 0}, {1, 0}}, {2, {0, 1}, {0, 1}}, {0, {0, 0}, {2, 0}}, {0, {0, 0}, {0, 2}}};
  CHECK(enumerate_triples(Q, 2, -1) == expected);
  for (int b = 0; b <= 6; ++b) {
    auto rows = enumerate_triples(Q, 3, -2 - b);
    TripleNumerics line{b + 2, {1, 0}, {2, 0}};
    CHECK(std::find(rows.begin(), rows.end(), line) != rows.end());
  }
  auto quartics = enumerate_triples(P2, 4, 3);
  TripleNumerics smooth{0, {0}, {4}};
  CHECK(std::find(quartics.begin(), quartics.end(), smooth) != quartics.end());
  CHECK_THROWS_AS(enumerate_triples(SurfaceModel::general_doubling(3), 2, 0), UnsupportedSurface);
  CHECK_THROWS_AS(enumerate_triples(Q, 0, 0), DomainError);
}

TEST_CASE("enumeration round trip against brute force") {
  for (bool plane : {true, false}) {
    const SurfaceModel& F = plane ? P2 : Q;
    for (int d = 1; d <= 5; ++d)
      for (int g = -8; g <= 2; ++g) {
        auto rows = enumerate_triples(F, d, g);
        auto raw = oracle::brute_force_triples(plane, d, g);
        CHECK(rows.size() == raw.size());
        for (const auto& row : rows) {
          if (row.xi.is_zero()) {
            CHECK(degree(F, row.eta) == d);
            CHECK(class_genus(F, row.eta) == g);
          } else {
            Triple T = Triple::generic(F, row.z, row.xi, row.eta);
            CHECK(triple_degree(T) == d);
            CHECK(triple_genus(T) == g);
          }
          const int z = static_cast<int>(row.z);
          bool found = std::any_of(raw.begin(), raw.end(), [&](const oracle::RawTriple& r) {
            return r.z == z && r.xi == ints(row.xi) && r.eta == ints(row.eta);
          });
          CHECK(found);
        }
      }
  }
}

TEST_CASE("fiber dimension") {
  CHECK(fiber_dimension(Triple(CurveSpec::integral(Q, L), L, ZeroCycle::of_degree(2))) == 1);
  for (int g = -6; g <= 0; ++g)
    CHECK(fiber_dimension(Triple(CurveSpec::integral(Q, L), L, ZeroCycle::of_degree(1 - g))) == -g);
  for (int a = 1; a <= 6; ++a) {
    // chi(O_R(a-1)) = chi_F(a-1) - chi_F(-1), read off monomial counts
    oracle::SurfaceCounts top = oracle::plane_monomial_counts(a - 1);
    oracle::SurfaceCounts bottom = oracle::plane_monomial_counts(-1);
    Integer expected = top.h0 + top.h2 - bottom.h0 - bottom.h2;
    CHECK(fiber_dimension(Triple(generic_curve(P2, {a}), {a}, ZeroCycle::none())) == expected);
  }
  CHECK_THROWS_AS(fiber_dimension(Triple(CurveSpec::empty(Q), {1, 1}, ZeroCycle::none())), DomainError);
}

TEST_CASE("existence on the double plane") {
  for (int d = 1; d <= 6; ++d)
    for (int g = -20; g <= 10; ++g)
      for (const auto& row : enumerate_triples(P2, d, g)) {
        ExistenceVerdict v = check_existence(Triple::generic(P2, row.z, row.xi, row.eta));
        CHECK(v.outcome == Outcome::Exists);
        if (!row.xi.is_zero()) CHECK(v.branch == CascadeBranch::VanishingWithoutZ);
      }
}

TEST_CASE("conic nonexistence and existence") {
  ExistenceVerdict none = check_existence(Triple(CurveSpec::integral(Q, {1, 1}), {1, 1}, ZeroCycle::of_degree(1)));
  CHECK(none.outcome == Outcome::NotExists);
  CHECK(none.code == "NO_QUARTIC_GENUS2");
  for (int z = 2; z <= 8; ++z) {
    ExistenceVerdict v = check_existence(Triple(CurveSpec::integral(Q, {1, 1}), {1, 1}, ZeroCycle::of_degree(z)));
    CHECK(v.outcome == Outcome::Exists);
    CHECK(v.dimension == z - 1);
  }
  ExistenceVerdict ci = check_existence(Triple(CurveSpec::integral(Q, {2, 2}), {2, 2}, ZeroCycle::none()));
  CHECK(ci.code == "COMPLETE_INTERSECTION");
}

TEST_CASE("line unions") {
  for (int b = 1; b <= 5; ++b)
    for (int z = 0; z <= 6; ++z)
      for (const auto& alloc : all_allocations(z, b)) {
        Triple T(CurveSpec::disjoint_lines(Q, {0, 1}, b), {0, b}, ZeroCycle::allocated(alloc));
        ExistenceVerdict v = check_existence(T);
        bool met = std::all_of(alloc.begin(), alloc.end(), [](const Integer& p) { return p >= 1; });
        CHECK((v.outcome == Outcome::Exists) == met);
        if (!met) CHECK(v.code == "LINE_UNION_LINE_MISSED");
      }
}

TEST_CASE("double line practical condition") {
  CurveSpec R = CurveSpec::double_line(Q, L);
  for (int z = 0; z <= 10; ++z)
    for (int w = 0; w <= z; ++w) {
      ExistenceVerdict v = check_existence(Triple(R, {2, 0}, ZeroCycle::on_double_line(w, z - w)));
      CHECK((v.branch == CascadeBranch::Regularity) == (2 <= w && w <= z - 2));
      CHECK(v.conditions.vanishing_without_z == false);
    }
}

TEST_CASE("rational curves and the degeneration entry") {
  for (int b = 0; b <= 5; ++b) {
    if (b == 1) continue;
    DivClass P{1, b};
    CHECK(check_existence(Triple(CurveSpec::integral(Q, P), P, ZeroCycle::none())).outcome == Outcome::NotExists);
    CHECK(check_existence(Triple(CurveSpec::integral(Q, P), P, ZeroCycle::of_degree(1))).exists());
  }
  ExistenceVerdict v = check_existence(Triple(CurveSpec::integral(Q, {2, 3}), {2, 3}, ZeroCycle::of_degree(1)));
  CHECK(v.exists());
  ExistenceVerdict special =
      check_existence(Triple(CurveSpec::integral(Q, {3, 5}), {3, 5}, ZeroCycle::of_degree(1)));
  CHECK(special.outcome == Outcome::ExistsSpecial);
  CHECK(special.code == "GENERAL_ZPP");
  CHECK(special.generality_assumed);
  ZeroCycle fixed = ZeroCycle::of_degree(1);
  fixed.generality = Generality::Specified;
  CHECK(check_existence(Triple(CurveSpec::integral(Q, {3, 5}), {3, 5}, fixed)).outcome == Outcome::Inconclusive);
}

TEST_CASE("general doubling double lines") {
  for (int d = 3; d <= 12; ++d)
    for (int z = d - 1; z <= 2 * d - 4; ++z) {
      ExistenceVerdict v = check_existence(doubling_line(d, z));
      CHECK(v.outcome == Outcome::ExistsSpecial);
      CHECK(v.code == "DOUBLE_LINE_ALWAYS");
      CHECK(v.conditions.h1_vanishes == false);
      CHECK(v.twisted.h0 == Integer(0));
      CHECK(v.twisted.h1_nonzero());
    }
}

TEST_CASE("cascade invariants") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int pa = a; pa <= 4; ++pa)
        for (int pb = b; pb <= 4; ++pb) {
          if (a + b == 0) continue;
          for (int z = 0; z <= 4; ++z) {
            Triple T = Triple::generic(Q, z, {a, b}, {pa, pb});
            ExistenceVerdict v = check_existence(T);
            if (v.outcome == Outcome::Exists) {
              CHECK(v.conditions.h1_vanishes == true);
              CHECK(v.dimension == fiber_dimension(T));
              CHECK(*v.dimension >= 0);
            }
            if (v.branch == CascadeBranch::VanishingWithoutZ && T.residual().shape() == ShapeKind::DisjointLines)
              for (const auto& alloc : all_allocations(z, T.residual().line_count()))
                CHECK(coh(T.residual(), T.residual_twist(), ZeroCycle::allocated(alloc)).h1_vanishes());
            if (v.outcome == Outcome::Inconclusive) CHECK_FALSE(v.failed_conditions.empty());
          }
        }
}

TEST_CASE("special table") {
  CHECK(kSpecialTableVersion == 1);
  CHECK(special_cases().size() == 8);
  CHECK(special_cases().front().code == "NO_QUARTIC_GENUS2");
  for (const auto& entry : special_cases()) CHECK_FALSE(entry.anchor.empty());
}
