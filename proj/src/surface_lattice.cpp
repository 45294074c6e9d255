#include "dblsurf/surface_lattice.hpp"

#include "dblsurf/errors.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace dblsurf {

long long to_machine(const Integer& value, const char* what) {
  if (value > std::numeric_limits<long long>::max() || value < std::numeric_limits<long long>::min())
    throw DomainError(std::string(what) + " is out of machine range: " + value.str());
  return static_cast<long long>(value);
}

// ---------------------------------------------------------------------------
// DivClass

DivClass::DivClass(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

bool DivClass::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool DivClass::is_effective_shaped() const {
  for (const auto& c : coords_)
    if (c < 0) return false;
  return true;
}

DivClass DivClass::operator-() const {
  std::vector<Integer> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(-c);
  return DivClass(std::move(out));
}

static void require_same_rank(const DivClass& a, const DivClass& b) {
  if (a.rank() != b.rank())
    throw DomainError("class rank mismatch: " + a.str() + " vs " + b.str());
}

DivClass operator+(const DivClass& a, const DivClass& b) {
  require_same_rank(a, b);
  std::vector<Integer> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = a[i] + b[i];
  return DivClass(std::move(out));
}

DivClass operator-(const DivClass& a, const DivClass& b) { return a + (-b); }

DivClass operator*(const Integer& k, const DivClass& c) {
  std::vector<Integer> out;
  out.reserve(c.rank());
  for (const auto& x : c.coords()) out.push_back(k * x);
  return DivClass(std::move(out));
}

std::string DivClass::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].str();
  }
  return s + ")";
}

bool leq(const DivClass& a, const DivClass& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool lex_less(const DivClass& a, const DivClass& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(),
                                      b.coords().end());
}

std::ostream& operator<<(std::ostream& os, const DivClass& c) { return os << c.str(); }

static Integer parse_integer(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && text[start] == ' ') ++start;
  std::size_t end = text.size();
  while (end > start && text[end - 1] == ' ') --end;
  text = text.substr(start, end - start);
  std::size_t digits = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == digits) throw DomainError("expected an integer");
  for (std::size_t i = digits; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw DomainError("not an integer: '" + std::string(text) + "'");
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

DivClass parse_class(std::string_view text) {
  std::vector<Integer> coords;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    coords.push_back(parse_integer(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (coords.size() > 2) throw DomainError("a class has one or two coordinates: " + std::string(text));
  return DivClass(std::move(coords));
}

// ---------------------------------------------------------------------------
// SurfaceModel

SurfaceModel SurfaceModel::double_plane() { return {SurfaceKind::DoublePlane, 1}; }
SurfaceModel SurfaceModel::double_quadric() { return {SurfaceKind::DoubleQuadric, 2}; }

SurfaceModel SurfaceModel::general_doubling(const Integer& d) {
  if (d < 1) throw DomainError("surface degree must be >= 1, got " + d.str());
  return {SurfaceKind::GeneralDoubling, d};
}

SurfaceModel SurfaceModel::parse(std::string_view text) {
  if (text == "2H") return double_plane();
  if (text == "2Q") return double_quadric();
  if (text.substr(0, 3) == "2F:") return general_doubling(parse_integer(text.substr(3)));
  throw DomainError("unknown surface '" + std::string(text) + "' (expected 2H, 2Q or 2F:d)");
}

DivClass SurfaceModel::hyperplane() const {
  switch (kind_) {
    case SurfaceKind::DoublePlane: return {1};
    case SurfaceKind::DoubleQuadric: return {1, 1};
    case SurfaceKind::GeneralDoubling: return {1};
  }
  return {};
}

DivClass SurfaceModel::ribbon_twist() const {
  switch (kind_) {
    case SurfaceKind::DoublePlane: return {1};
    case SurfaceKind::DoubleQuadric: return {2, 2};
    case SurfaceKind::GeneralDoubling: return DivClass({degree_});
  }
  return {};
}

DivClass SurfaceModel::canonical() const {
  switch (kind_) {
    case SurfaceKind::DoublePlane: return {-3};
    case SurfaceKind::DoubleQuadric: return {-2, -2};
    case SurfaceKind::GeneralDoubling: return DivClass({degree_ - 4});
  }
  return {};
}

DivClass SurfaceModel::zero() const { return DivClass(std::vector<Integer>(pic_rank())); }

std::string SurfaceModel::name() const {
  switch (kind_) {
    case SurfaceKind::DoublePlane: return "2H";
    case SurfaceKind::DoubleQuadric: return "2Q";
    case SurfaceKind::GeneralDoubling: return "2F:" + degree_.str();
  }
  return "?";
}

void SurfaceModel::require_lattice(const char* op) const {
  if (!has_lattice())
    throw UnsupportedSurface(std::string(op) + " is not available on " + name() +
                             " (only line-supported queries are modeled)");
}

void SurfaceModel::check_rank(const DivClass& c) const {
  if (c.rank() != pic_rank())
    throw DomainError("class " + c.str() + " does not have rank " + std::to_string(pic_rank()) +
                      " as required on " + name());
}

LineRestriction line_restriction(const SurfaceModel& F) {
  switch (F.kind()) {
    case SurfaceKind::DoublePlane: return {1, 1, -3, 1};
    case SurfaceKind::DoubleQuadric: return {0, 2, -2, 1};
    case SurfaceKind::GeneralDoubling: {
      const Integer& d = F.surface_degree();
      return {2 - d, d, d - 4, 1};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Intersection theory and cohomology

Integer intersect(const SurfaceModel& F, const DivClass& c1, const DivClass& c2) {
  F.require_lattice("intersect");
  F.check_rank(c1);
  F.check_rank(c2);
  if (F.kind() == SurfaceKind::DoublePlane) return c1[0] * c2[0];
  return c1[0] * c2[1] + c1[1] * c2[0];
}

DivClass canonical(const SurfaceModel& F) { return F.canonical(); }

Integer class_genus(const SurfaceModel& F, const DivClass& c) {
  F.check_rank(c);
  Integer twice;  // 2p_a - 2
  if (F.has_lattice()) {
    twice = intersect(F, c, c + F.canonical());
  } else {
    LineRestriction line = line_restriction(F);
    const Integer& m = c[0];
    twice = m * m * line.self_intersection + m * line.canonical_degree;
  }
  return twice / 2 + 1;
}

Integer h0_p1(const Integer& n) { return n >= 0 ? n + 1 : Integer(0); }
Integer h1_p1(const Integer& n) { return n <= -2 ? -n - 1 : Integer(0); }

static Integer h0_plane(const Integer& d) { return d >= 0 ? (d + 1) * (d + 2) / 2 : Integer(0); }

SurfaceCohomology coh_F(const SurfaceModel& F, const DivClass& c) {
  F.require_lattice("coh_F");
  F.check_rank(c);
  if (F.kind() == SurfaceKind::DoublePlane) return {h0_plane(c[0]), 0, h0_plane(-c[0] - 3)};
  const Integer& a = c[0];
  const Integer& b = c[1];
  Integer h0 = (a >= 0 && b >= 0) ? (a + 1) * (b + 1) : Integer(0);
  Integer h2 = (a <= -2 && b <= -2) ? (-a - 1) * (-b - 1) : Integer(0);
  Integer h1 = h0 + h2 - (a + 1) * (b + 1);
  return {h0, h1, h2};
}

Integer chi_F(const SurfaceModel& F, const DivClass& c) {
  SurfaceCohomology h = coh_F(F, c);
  return h.h0 - h.h1 + h.h2;
}

Integer degree(const SurfaceModel& F, const DivClass& c) {
  if (!F.has_lattice()) {
    F.check_rank(c);
    return c[0];
  }
  return intersect(F, c, F.hyperplane());
}

Integer degree_on(const SurfaceModel& F, const DivClass& curve, const DivClass& twist) {
  if (F.has_lattice()) return intersect(F, curve, twist);
  F.check_rank(curve);
  F.check_rank(twist);
  return curve[0] * twist[0];
}

}  // namespace dblsurf
