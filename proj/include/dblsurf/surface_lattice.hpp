#pragma once

#include "dblsurf/integer.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dblsurf {

/// An element of the Picard lattice of F, stored as integer coordinates.
///
/// On P^2 the single coordinate is the degree; on the quadric the pair is the
/// bidegree (a,b). Classes are formal: negative coordinates are allowed and
/// effectivity is only checked where an operation needs it.
class DivClass {
 public:
  DivClass() = default;
  explicit DivClass(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  DivClass(std::initializer_list<long long> coords);

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_.at(i); }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;
  /// All coordinates nonnegative.
  bool is_effective_shaped() const;

  DivClass operator-() const;
  friend DivClass operator+(const DivClass& a, const DivClass& b);
  friend DivClass operator-(const DivClass& a, const DivClass& b);
  friend DivClass operator*(const Integer& k, const DivClass& c);
  friend bool operator==(const DivClass& a, const DivClass& b) = default;

  std::string str() const;

 private:
  std::vector<Integer> coords_;
};

/// Componentwise partial order; both classes must have the same rank.
bool leq(const DivClass& a, const DivClass& b);

/// Lexicographic total order, used only for deterministic output ordering.
bool lex_less(const DivClass& a, const DivClass& b);

std::ostream& operator<<(std::ostream& os, const DivClass& c);

/// Parses "a,b" or "d" into a class.
DivClass parse_class(std::string_view text);

enum class SurfaceKind { DoublePlane, DoubleQuadric, GeneralDoubling };

/// The ambient geometry of X = 2F.
///
/// DoublePlane and DoubleQuadric carry their full Picard lattice. A general
/// doubling 2F of a degree-d surface is only modeled along a line L on F:
/// curve classes are multiples mL (one coordinate m) while twist classes,
/// including hyperplane(), ribbon_twist() and canonical(), are given by their
/// degree on L.
class SurfaceModel {
 public:
  static SurfaceModel double_plane();
  static SurfaceModel double_quadric();
  static SurfaceModel general_doubling(const Integer& d);
  /// Accepts "2H", "2Q" or "2F:d".
  static SurfaceModel parse(std::string_view text);

  SurfaceKind kind() const { return kind_; }
  std::size_t pic_rank() const { return kind_ == SurfaceKind::DoubleQuadric ? 2 : 1; }
  /// Degree of F in P^3 (1 for the plane, 2 for the quadric).
  const Integer& surface_degree() const { return degree_; }
  DivClass hyperplane() const;
  DivClass ribbon_twist() const;
  DivClass canonical() const;
  DivClass zero() const;
  std::string name() const;

  bool has_lattice() const { return kind_ != SurfaceKind::GeneralDoubling; }
  /// Throws UnsupportedSurface unless the full lattice is modeled.
  void require_lattice(const char* op) const;
  /// Throws DomainError if the class rank does not match pic_rank().
  void check_rank(const DivClass& c) const;

  friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) = default;

 private:
  SurfaceModel(SurfaceKind kind, Integer degree) : kind_(kind), degree_(std::move(degree)) {}

  SurfaceKind kind_ = SurfaceKind::DoublePlane;
  Integer degree_ = 1;
};

/// Numerical data of a line L on F: L^2, and the degrees of F, K and H on L.
struct LineRestriction {
  Integer self_intersection;
  Integer twist_degree;
  Integer canonical_degree;
  Integer hyperplane_degree;
};

/// Line data of a general doubling of degree d: L^2 = 2 - d, deg O_L(F) = d.
LineRestriction line_restriction(const SurfaceModel& F);

/// Cohomology dimensions of a line bundle on F.
struct SurfaceCohomology {
  Integer h0;
  Integer h1;
  Integer h2;
  friend bool operator==(const SurfaceCohomology&, const SurfaceCohomology&) = default;
};

/// Intersection pairing. P^2: d1*d2. Q: a1*b2 + a2*b1.
Integer intersect(const SurfaceModel& F, const DivClass& c1, const DivClass& c2);

DivClass canonical(const SurfaceModel& F);

/// Arithmetic genus by adjunction, 2p_a - 2 = c.(c + K). On a general doubling
/// the class mL uses the line data. The zero class gets p_a = 1.
Integer class_genus(const SurfaceModel& F, const DivClass& c);

SurfaceCohomology coh_F(const SurfaceModel& F, const DivClass& c);
Integer chi_F(const SurfaceModel& F, const DivClass& c);
Integer degree(const SurfaceModel& F, const DivClass& c);

/// Degree of the twist class on a curve of class `curve`. On P^2 and Q this is
/// the intersection number; on a general doubling `curve` must be mL and the
/// result is m times the twist's degree on L.
Integer degree_on(const SurfaceModel& F, const DivClass& curve, const DivClass& twist);

/// h^0 and h^1 of O(n) on P^1.
Integer h0_p1(const Integer& n);
Integer h1_p1(const Integer& n);

}  // namespace dblsurf
