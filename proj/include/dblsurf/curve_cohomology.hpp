#pragma once

#include "dblsurf/surface_lattice.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dblsurf {

enum class ShapeKind { Empty, Integral, DisjointLines, DoubleLine, Union };

std::string to_string(ShapeKind kind);

/// An effective divisor R on F together with its structure.
///
/// Construction goes through the factories, which enforce the shape rules:
/// an integral class must carry integral curves, disjoint lines in a ruling
/// need L^2 = 0 when there is more than one, a double line needs L^2 = 0, and
/// a union has exactly two non-union components.
class CurveSpec {
 public:
  static CurveSpec empty(const SurfaceModel& F);
  static CurveSpec integral(const SurfaceModel& F, const DivClass& cls);
  static CurveSpec disjoint_lines(const SurfaceModel& F, const DivClass& ruling, int count);
  static CurveSpec double_line(const SurfaceModel& F, const DivClass& line);
  static CurveSpec union_of(const CurveSpec& a, const CurveSpec& b);

  const SurfaceModel& surface() const { return surface_; }
  ShapeKind shape() const { return shape_; }
  const DivClass& total_class() const { return total_; }
  bool is_empty() const { return shape_ == ShapeKind::Empty; }

  /// Class of the underlying component: the integral class, the ruling of
  /// the lines, or the reduced line under a double line.
  const DivClass& component_class() const { return component_; }
  int line_count() const { return count_; }
  const CurveSpec& first() const { return *first_; }
  const CurveSpec& second() const { return *second_; }

  std::string describe() const;

 private:
  CurveSpec(SurfaceModel F, ShapeKind shape, DivClass component, DivClass total)
      : surface_(std::move(F)), shape_(shape), component_(std::move(component)), total_(std::move(total)) {}

  SurfaceModel surface_;
  ShapeKind shape_;
  DivClass component_;
  DivClass total_;
  int count_ = 0;
  std::shared_ptr<const CurveSpec> first_;
  std::shared_ptr<const CurveSpec> second_;
};

/// The generic member of |c|: empty, b disjoint lines for (0,b)/(b,0) on Q,
/// the line on a general doubling, and an integral curve otherwise.
CurveSpec generic_curve(const SurfaceModel& F, const DivClass& c);

enum class Generality { General, Specified };

/// Split of a zero-cycle on a double line: w = deg(Z cap L), y = z - w.
struct DoubleLineSplit {
  Integer on_line;
  Integer residual;
  friend bool operator==(const DoubleLineSplit&, const DoubleLineSplit&) = default;
};

/// A zero-dimensional Z recorded only by degrees; positions are never stored.
///
/// The allocation lists per-component degrees: one entry for an integral
/// curve, one per line for disjoint lines, two for a union. A double line uses
/// the split instead.
struct ZeroCycle {
  Integer degree = 0;
  std::vector<Integer> allocation;
  std::optional<DoubleLineSplit> split;
  Generality generality = Generality::General;

  static ZeroCycle none() { return {}; }
  static ZeroCycle of_degree(const Integer& z) { return {z, {z}, std::nullopt, Generality::General}; }
  static ZeroCycle allocated(std::vector<Integer> parts);
  static ZeroCycle on_double_line(const Integer& w, const Integer& y);

  friend bool operator==(const ZeroCycle&, const ZeroCycle&) = default;
};

/// Balanced distribution of z over b components, larger parts first.
std::vector<Integer> balanced_allocation(const Integer& z, int b);

/// All ordered allocations of z into b nonnegative parts, lexicographically
/// descending.
std::vector<std::vector<Integer>> all_allocations(int z, int b);

/// A zero-cycle of degree z adapted to the shape of R: balanced over lines,
/// split evenly on a double line (larger half on L), all on the first
/// component of a union.
ZeroCycle generic_zero_cycle(const CurveSpec& R, const Integer& z);

/// Rule that produced a cohomology answer.
enum class CohomRule {
  EmptyCurve,
  AboveCanonical,   // degree > 2g - 2
  NegativeDegree,   // degree < 0
  RationalCurve,    // g = 0, O(m) on P^1
  RestrictionSequence,
  LineSplitting,
  DoubleLineFiltration,
  UnionSequence,
  ZeroCycleExtension,  // h^1(O_R(D)) = 0 forces h^1(O_R(Z+D)) = 0
  Undecided,
};

std::string to_string(CohomRule rule);

/// h^0, h^1 of a sheaf on a curve; either may be unknown, chi is always exact.
struct CohomTable {
  std::optional<Integer> h0;
  std::optional<Integer> h1;
  Integer chi;
  CohomRule rule = CohomRule::Undecided;

  bool known() const { return h0.has_value() && h1.has_value(); }
  bool h1_vanishes() const { return h1.has_value() && *h1 == 0; }
  bool h1_nonzero() const { return h1.has_value() && *h1 != 0; }

  static CohomTable exact(Integer h0, Integer h1, CohomRule rule);
  static CohomTable unknown(Integer chi);
};

/// chi(O_R(Z+D)) = z + R.D + 1 - p_a(R); zero for the empty curve.
Integer curve_chi(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z);

/// Riemann-Roch vanishing rules on an integral curve with Z general.
CohomTable coh_integral(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z);

/// O_R(D) from 0 -> O_F(D-R) -> O_F(D) -> O_R(D) -> 0 for any effective R.
/// Exact whenever h^1_F(D-R) = 0 or h^1_F(D) = 0.
CohomTable coh_restriction_sequence(const SurfaceModel& F, const DivClass& R, const DivClass& D);

/// Disjoint lines: direct sum of O_{P^1}(z_i + L.D).
CohomTable coh_lines(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z);

/// Double line via 0 -> O_L(W+D) -> O_R(Z+D) -> O_L(Y+D) -> 0.
CohomTable coh_double_line(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z);

/// A u B via 0 -> O_A(Z_A + D - B) -> O_{A u B}(Z + D) -> O_B(Z_B + D) -> 0.
CohomTable coh_union(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z);

/// Dispatches on the shape, then falls back to the restriction sequence when
/// Z is empty and to the Z-free twist otherwise.
CohomTable coh(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z);

/// Degree check for global generation of O_R(Z+D): on P^1 pieces degree >= 0,
/// on an integral curve of genus g degree >= 2g, on a double line both
/// filtration pieces of degree >= 0, on a union the sub piece generated with
/// vanishing h^1 and the quotient generated. nullopt when not decidable.
std::optional<bool> globally_generated(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z);

/// Checks the zero-cycle against the components of R and returns the
/// normalized cycle (missing allocations filled in when z = 0).
ZeroCycle normalize_zero_cycle(const CurveSpec& R, const ZeroCycle& Z);

}  // namespace dblsurf
