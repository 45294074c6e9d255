#include "dblsurf/special_cases.hpp"

#include <algorithm>
#include <vector>

namespace dblsurf {

std::span<const SpecialCase> special_cases() {
  // Order matters: the first matching row wins.
  static const std::vector<SpecialCase> table = {
      {"NO_QUARTIC_GENUS2", SurfaceKind::DoubleQuadric, ResidualShape::Integral, true, ClassFamily::Exact,
       DivClass{1, 1}, ZeroRule::Equals, 1, Outcome::NotExists, false, false,
       "conic with deg Z = 1 would give a space quartic of genus 2, and there is none"},
      {"COMPLETE_INTERSECTION", SurfaceKind::DoubleQuadric, ResidualShape::Integral, true,
       ClassFamily::Balanced, {}, ZeroRule::Equals, 0, Outcome::ExistsSpecial, false, false,
       "P of type (a,a) is cut by a degree-a surface S and X cap S has triple {0,P,P}"},
      {"LINE_UNION_EACH_MET", SurfaceKind::DoubleQuadric, ResidualShape::RulingLines, false,
       ClassFamily::RulingMultiple, {}, ZeroRule::EveryPartPositive, 0, Outcome::Exists, false, false,
       "every line of R meets Z, so each line carries O(z_i - 2) with z_i >= 1 and h1 vanishes"},
      {"LINE_UNION_LINE_MISSED", SurfaceKind::DoubleQuadric, ResidualShape::RulingLines, false,
       ClassFamily::RulingMultiple, {}, ZeroRule::SomePartEmpty, 0, Outcome::NotExists, false, false,
       "a line of R missing Z carries O(-2); the lines are handled one at a time"},
      {"RATIONAL_Z_POSITIVE", SurfaceKind::DoubleQuadric, ResidualShape::Integral, true,
       ClassFamily::RationalNonConic, {}, ZeroRule::AtLeast, 1, Outcome::ExistsSpecial, false, false,
       "smooth rational P: with Z nonempty every nonzero map in the fiber is surjective"},
      {"RATIONAL_Z_EMPTY", SurfaceKind::DoubleQuadric, ResidualShape::Integral, true,
       ClassFamily::RationalNonConic, {}, ZeroRule::Equals, 0, Outcome::NotExists, false, false,
       "smooth rational P with Z empty: the restricted conormal sequence does not split"},
      {"GENERAL_ZPP", SurfaceKind::DoubleQuadric, ResidualShape::Integral, true,
       ClassFamily::StrictlyUnbalanced, {}, ZeroRule::AtLeast, 1, Outcome::ExistsSpecial, true, true,
       "degenerate P to C u E with C rational of type (1,b-a+1) and E of type (a-1,a-1)"},
      {"DOUBLE_LINE_ALWAYS", SurfaceKind::GeneralDoubling, ResidualShape::LineOfDoubling, true,
       ClassFamily::Line, DivClass{1}, ZeroRule::AtLeastDegreeMinusOne, 0, Outcome::ExistsSpecial, false,
       false, "every double line on L lies on 2F; double lines of genus p <= 0 give deg Z = d - 1 - p"},
  };
  return table;
}

namespace {

bool is_ruling(const DivClass& c) { return c == DivClass{1, 0} || c == DivClass{0, 1}; }

bool shape_matches(ResidualShape shape, const Triple& T) {
  const CurveSpec& R = T.residual();
  switch (shape) {
    case ResidualShape::Integral: return R.shape() == ShapeKind::Integral;
    case ResidualShape::RulingLines:
      return R.shape() == ShapeKind::DisjointLines ||
             (R.shape() == ShapeKind::Integral && is_ruling(R.total_class()));
    case ResidualShape::LineOfDoubling:
      return R.shape() == ShapeKind::Integral && R.total_class() == DivClass{1};
  }
  return false;
}

bool family_matches(const SpecialCase& entry, const Triple& T) {
  const DivClass& P = T.divisorial();
  switch (entry.family) {
    case ClassFamily::Exact:
      return P == entry.exact || (P.rank() == 2 && P == DivClass(std::vector<Integer>{entry.exact[1], entry.exact[0]}));
    case ClassFamily::Balanced: return P[0] == P[1] && P[0] >= 1;
    case ClassFamily::RationalNonConic: {
      const Integer lo = std::min(P[0], P[1]);
      const Integer hi = std::max(P[0], P[1]);
      return lo <= 1 && hi >= 0 && (lo == 1 ? hi != 1 : hi == 1);
    }
    case ClassFamily::StrictlyUnbalanced: {
      const Integer lo = std::min(P[0], P[1]);
      const Integer hi = std::max(P[0], P[1]);
      return 1 < lo && lo < hi;
    }
    case ClassFamily::RulingMultiple: {
      const DivClass& ruling = T.residual().component_class();
      std::size_t other = ruling[0] == 1 ? 1 : 0;
      return P[other] == 0;
    }
    case ClassFamily::Line: return P == DivClass{1};
  }
  return false;
}

bool zero_matches(const SpecialCase& entry, const Triple& T) {
  const ZeroCycle& Z = T.zero_cycle();
  switch (entry.zero_rule) {
    case ZeroRule::Equals: return Z.degree == entry.zero_value;
    case ZeroRule::AtLeast: return Z.degree >= entry.zero_value;
    case ZeroRule::EveryPartPositive:
      return std::all_of(Z.allocation.begin(), Z.allocation.end(), [](const Integer& p) { return p >= 1; });
    case ZeroRule::SomePartEmpty:
      return std::any_of(Z.allocation.begin(), Z.allocation.end(), [](const Integer& p) { return p == 0; });
    case ZeroRule::AtLeastDegreeMinusOne: return Z.degree >= T.surface().surface_degree() - 1;
  }
  return false;
}

}  // namespace

bool matches(const SpecialCase& entry, const Triple& T) {
  if (T.surface().kind() != entry.surface) return false;
  if (T.residual().is_empty()) return false;
  if (!shape_matches(entry.shape, T)) return false;
  if (entry.residual_is_divisorial && T.residual().total_class() != T.divisorial()) return false;
  if (!family_matches(entry, T)) return false;
  if (entry.needs_general_z && T.zero_cycle().generality != Generality::General) return false;
  return zero_matches(entry, T);
}

const SpecialCase* find_special_case(const Triple& T) {
  for (const auto& entry : special_cases())
    if (matches(entry, T)) return &entry;
  return nullptr;
}

}  // namespace dblsurf
