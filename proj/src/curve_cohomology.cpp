#include "dblsurf/curve_cohomology.hpp"

#include "dblsurf/errors.hpp"

#include <algorithm>
#include <functional>

namespace dblsurf {

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Empty: return "empty";
    case ShapeKind::Integral: return "integral";
    case ShapeKind::DisjointLines: return "lines";
    case ShapeKind::DoubleLine: return "double-line";
    case ShapeKind::Union: return "union";
  }
  return "?";
}

std::string to_string(CohomRule rule) {
  switch (rule) {
    case CohomRule::EmptyCurve: return "EMPTY_CURVE";
    case CohomRule::AboveCanonical: return "ABOVE_CANONICAL";
    case CohomRule::NegativeDegree: return "NEGATIVE_DEGREE";
    case CohomRule::RationalCurve: return "RATIONAL_CURVE";
    case CohomRule::RestrictionSequence: return "RESTRICTION_SEQUENCE";
    case CohomRule::LineSplitting: return "LINE_SPLITTING";
    case CohomRule::DoubleLineFiltration: return "DOUBLE_LINE_FILTRATION";
    case CohomRule::UnionSequence: return "UNION_SEQUENCE";
    case CohomRule::ZeroCycleExtension: return "ZERO_CYCLE_EXTENSION";
    case CohomRule::Undecided: return "UNDECIDED";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// CurveSpec

namespace {

bool is_line_class(const SurfaceModel& F, const DivClass& c) {
  switch (F.kind()) {
    case SurfaceKind::DoublePlane: return c == DivClass{1};
    case SurfaceKind::DoubleQuadric: return c == DivClass{1, 0} || c == DivClass{0, 1};
    case SurfaceKind::GeneralDoubling: return c == DivClass{1};
  }
  return false;
}

bool carries_integral_curves(const SurfaceModel& F, const DivClass& c) {
  switch (F.kind()) {
    case SurfaceKind::DoublePlane: return c[0] >= 1;
    case SurfaceKind::DoubleQuadric: return (c[0] >= 1 && c[1] >= 1) || is_line_class(F, c);
    case SurfaceKind::GeneralDoubling: return is_line_class(F, c);
  }
  return false;
}

}  // namespace

CurveSpec CurveSpec::empty(const SurfaceModel& F) {
  return CurveSpec(F, ShapeKind::Empty, F.zero(), F.zero());
}

CurveSpec CurveSpec::integral(const SurfaceModel& F, const DivClass& cls) {
  F.check_rank(cls);
  if (!carries_integral_curves(F, cls))
    throw DomainError("class " + cls.str() + " on " + F.name() + " has no integral member in the model");
  return CurveSpec(F, ShapeKind::Integral, cls, cls);
}

CurveSpec CurveSpec::disjoint_lines(const SurfaceModel& F, const DivClass& ruling, int count) {
  F.check_rank(ruling);
  if (!is_line_class(F, ruling)) throw DomainError("class " + ruling.str() + " is not a line class");
  if (count < 1) throw DomainError("a union of lines needs at least one line");
  if (count > 1 && line_restriction(F).self_intersection != 0)
    throw DomainError("lines of class " + ruling.str() + " on " + F.name() + " are not disjoint");
  CurveSpec spec(F, ShapeKind::DisjointLines, ruling, Integer(count) * ruling);
  spec.count_ = count;
  return spec;
}

CurveSpec CurveSpec::double_line(const SurfaceModel& F, const DivClass& line) {
  F.check_rank(line);
  if (F.kind() != SurfaceKind::DoubleQuadric || !is_line_class(F, line))
    throw DomainError("double lines are modeled on the quadric only, with L^2 = 0");
  CurveSpec spec(F, ShapeKind::DoubleLine, line, Integer(2) * line);
  spec.count_ = 2;
  return spec;
}

CurveSpec CurveSpec::union_of(const CurveSpec& a, const CurveSpec& b) {
  if (!(a.surface() == b.surface())) throw DomainError("union components live on different surfaces");
  a.surface().require_lattice("union");
  if (a.shape() != ShapeKind::Integral || b.shape() != ShapeKind::Integral)
    throw DomainError("union components must be integral curves");
  CurveSpec spec(a.surface(), ShapeKind::Union, a.total_class(), a.total_class() + b.total_class());
  spec.first_ = std::make_shared<const CurveSpec>(a);
  spec.second_ = std::make_shared<const CurveSpec>(b);
  spec.count_ = 2;
  return spec;
}

std::string CurveSpec::describe() const {
  switch (shape_) {
    case ShapeKind::Empty: return "empty";
    case ShapeKind::Integral: return "integral " + component_.str();
    case ShapeKind::DisjointLines: return std::to_string(count_) + " lines " + component_.str();
    case ShapeKind::DoubleLine: return "double line on " + component_.str();
    case ShapeKind::Union: return "union of " + first_->describe() + " and " + second_->describe();
  }
  return "?";
}

CurveSpec generic_curve(const SurfaceModel& F, const DivClass& c) {
  F.check_rank(c);
  if (!c.is_effective_shaped()) throw DomainError("class " + c.str() + " is not effective");
  if (c.is_zero()) return CurveSpec::empty(F);
  if (F.kind() == SurfaceKind::DoubleQuadric && (c[0] == 0 || c[1] == 0)) {
    DivClass ruling = c[0] == 0 ? DivClass{0, 1} : DivClass{1, 0};
    int count = static_cast<int>(to_machine(c[0] == 0 ? c[1] : c[0], "line count"));
    return CurveSpec::disjoint_lines(F, ruling, count);
  }
  return CurveSpec::integral(F, c);
}

// ---------------------------------------------------------------------------
// Zero-cycles

ZeroCycle ZeroCycle::allocated(std::vector<Integer> parts) {
  Integer total = 0;
  for (const auto& p : parts) total += p;
  return {total, std::move(parts), std::nullopt, Generality::General};
}

ZeroCycle ZeroCycle::on_double_line(const Integer& w, const Integer& y) {
  return {w + y, {}, DoubleLineSplit{w, y}, Generality::General};
}

std::vector<Integer> balanced_allocation(const Integer& z, int b) {
  if (b < 1) throw DomainError("allocation needs at least one component");
  std::vector<Integer> parts(static_cast<std::size_t>(b), z / b);
  Integer extra = z % b;
  for (std::size_t i = 0; extra > 0; ++i, --extra) parts[i] += 1;
  return parts;
}

std::vector<std::vector<Integer>> all_allocations(int z, int b) {
  if (b < 1 || z < 0) throw DomainError("allocations need z >= 0 and b >= 1");
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> current;
  std::function<void(int, int)> rec = [&](int remaining, int slots) {
    if (slots == 1) {
      current.emplace_back(remaining);
      out.push_back(current);
      current.pop_back();
      return;
    }
    for (int first = remaining; first >= 0; --first) {
      current.emplace_back(first);
      rec(remaining - first, slots - 1);
      current.pop_back();
    }
  };
  rec(z, b);
  return out;
}

ZeroCycle generic_zero_cycle(const CurveSpec& R, const Integer& z) {
  if (z < 0) throw DomainError("zero-cycle degree must be >= 0");
  switch (R.shape()) {
    case ShapeKind::Empty:
      if (z != 0) throw DomainError("the empty curve carries no zero-cycle");
      return ZeroCycle::none();
    case ShapeKind::Integral: return ZeroCycle::of_degree(z);
    case ShapeKind::DisjointLines: return ZeroCycle::allocated(balanced_allocation(z, R.line_count()));
    case ShapeKind::DoubleLine: return ZeroCycle::on_double_line(z - z / 2, z / 2);
    case ShapeKind::Union: return ZeroCycle::allocated({z, 0});
  }
  return ZeroCycle::none();
}

ZeroCycle normalize_zero_cycle(const CurveSpec& R, const ZeroCycle& Z) {
  if (Z.degree < 0) throw DomainError("zero-cycle degree must be >= 0");
  for (const auto& p : Z.allocation)
    if (p < 0) throw DomainError("allocation entries must be >= 0");

  auto check_sum = [&](const std::vector<Integer>& parts) {
    Integer total = 0;
    for (const auto& p : parts) total += p;
    if (total != Z.degree) throw DomainError("allocation does not sum to the zero-cycle degree");
  };
  auto with_parts = [&](std::size_t n) {
    ZeroCycle out = Z;
    if (out.allocation.empty()) {
      if (Z.degree != 0 && n != 1)
        throw DomainError("a zero-cycle on " + R.describe() + " needs an allocation of length " +
                          std::to_string(n));
      out.allocation.assign(n, Integer(0));
      if (n == 1) out.allocation[0] = Z.degree;
    }
    if (out.allocation.size() != n)
      throw DomainError("allocation length " + std::to_string(out.allocation.size()) + " does not match " +
                        std::to_string(n) + " components of " + R.describe());
    check_sum(out.allocation);
    out.split.reset();
    return out;
  };

  switch (R.shape()) {
    case ShapeKind::Empty:
      if (Z.degree != 0) throw DomainError("the empty curve carries no zero-cycle");
      return ZeroCycle::none();
    case ShapeKind::Integral: return with_parts(1);
    case ShapeKind::DisjointLines: return with_parts(static_cast<std::size_t>(R.line_count()));
    case ShapeKind::Union: return with_parts(2);
    case ShapeKind::DoubleLine: {
      ZeroCycle out = Z;
      if (!out.split) {
        if (Z.degree != 0) throw DomainError("a zero-cycle on a double line needs its split (w, y)");
        out.split = DoubleLineSplit{0, 0};
      }
      if (out.split->on_line < 0 || out.split->residual < 0) throw DomainError("split parts must be >= 0");
      if (out.split->on_line + out.split->residual != Z.degree)
        throw DomainError("split (w, y) does not sum to the zero-cycle degree");
      out.allocation.clear();
      return out;
    }
  }
  return Z;
}

// ---------------------------------------------------------------------------
// Cohomology engines

CohomTable CohomTable::exact(Integer h0, Integer h1, CohomRule rule) {
  CohomTable t;
  t.chi = h0 - h1;
  t.h0 = std::move(h0);
  t.h1 = std::move(h1);
  t.rule = rule;
  return t;
}

CohomTable CohomTable::unknown(Integer chi) {
  CohomTable t;
  t.chi = std::move(chi);
  return t;
}

Integer curve_chi(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z) {
  ZeroCycle z = normalize_zero_cycle(R, Z);
  if (R.is_empty()) return 0;
  const SurfaceModel& F = R.surface();
  return z.degree + degree_on(F, R.total_class(), D) + 1 - class_genus(F, R.total_class());
}

namespace {

CohomTable p1_table(const Integer& m, CohomRule rule) { return CohomTable::exact(h0_p1(m), h1_p1(m), rule); }

CohomTable zero_table() { return CohomTable::exact(0, 0, CohomRule::EmptyCurve); }

void require_shape(const CurveSpec& R, ShapeKind kind, const char* op) {
  if (R.shape() != kind)
    throw DomainError(std::string(op) + " expects a " + to_string(kind) + " curve, got " + R.describe());
}

}  // namespace

CohomTable coh_integral(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z) {
  require_shape(R, ShapeKind::Integral, "coh_integral");
  ZeroCycle zc = normalize_zero_cycle(R, Z);
  const SurfaceModel& F = R.surface();
  Integer m = zc.degree + degree_on(F, R.total_class(), D);
  Integer g = class_genus(F, R.total_class());
  Integer chi = m + 1 - g;
  if (g == 0) return p1_table(m, CohomRule::RationalCurve);
  if (m > 2 * g - 2) return CohomTable::exact(chi, 0, CohomRule::AboveCanonical);
  if (m < 0) return CohomTable::exact(0, -chi, CohomRule::NegativeDegree);
  return CohomTable::unknown(chi);
}

CohomTable coh_restriction_sequence(const SurfaceModel& F, const DivClass& R, const DivClass& D) {
  F.require_lattice("coh_restriction_sequence");
  F.check_rank(R);
  F.check_rank(D);
  if (!R.is_effective_shaped()) throw DomainError("restriction needs an effective curve class, got " + R.str());
  if (R.is_zero()) return zero_table();
  SurfaceCohomology ambient = coh_F(F, D);
  SurfaceCohomology sub = coh_F(F, D - R);
  Integer chi = (ambient.h0 - ambient.h1 + ambient.h2) - (sub.h0 - sub.h1 + sub.h2);
  // H^0(D-R) -> H^0(D) is injective and H^2(D-R) -> H^2(D) is onto, so only
  // the map H^1(D-R) -> H^1(D) is undetermined.
  if (sub.h1 == 0)
    return CohomTable::exact(ambient.h0 - sub.h0, ambient.h1 + sub.h2 - ambient.h2,
                             CohomRule::RestrictionSequence);
  if (ambient.h1 == 0) {
    Integer h1 = sub.h2 - ambient.h2;
    return CohomTable::exact(chi + h1, h1, CohomRule::RestrictionSequence);
  }
  return CohomTable::unknown(chi);
}

CohomTable coh_lines(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z) {
  require_shape(R, ShapeKind::DisjointLines, "coh_lines");
  ZeroCycle zc = normalize_zero_cycle(R, Z);
  Integer line_degree = degree_on(R.surface(), R.component_class(), D);
  Integer h0 = 0, h1 = 0;
  for (const auto& zi : zc.allocation) {
    Integer m = zi + line_degree;
    h0 += h0_p1(m);
    h1 += h1_p1(m);
  }
  return CohomTable::exact(h0, h1, CohomRule::LineSplitting);
}

CohomTable coh_double_line(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z) {
  require_shape(R, ShapeKind::DoubleLine, "coh_double_line");
  ZeroCycle zc = normalize_zero_cycle(R, Z);
  Integer line_degree = degree_on(R.surface(), R.component_class(), D);
  Integer sub = zc.split->on_line + line_degree;
  Integer quotient = zc.split->residual + line_degree;
  Integer chi = curve_chi(R, D, zc);
  // 0 -> H0(sub) -> H0 -> H0(quot) -> H1(sub) -> H1 -> H1(quot) -> 0
  if (h1_p1(sub) == 0)
    return CohomTable::exact(h0_p1(sub) + h0_p1(quotient), h1_p1(quotient), CohomRule::DoubleLineFiltration);
  if (h0_p1(quotient) == 0) {
    Integer h0 = h0_p1(sub);
    return CohomTable::exact(h0, h0 - chi, CohomRule::DoubleLineFiltration);
  }
  return CohomTable::unknown(chi);
}

CohomTable coh_union(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z) {
  require_shape(R, ShapeKind::Union, "coh_union");
  ZeroCycle zc = normalize_zero_cycle(R, Z);
  const CurveSpec& A = R.first();
  const CurveSpec& B = R.second();
  CohomTable sub = coh(A, D - B.total_class(), ZeroCycle::of_degree(zc.allocation[0]));
  CohomTable quotient = coh(B, D, ZeroCycle::of_degree(zc.allocation[1]));
  Integer chi = sub.chi + quotient.chi;
  if (sub.h1_vanishes() && quotient.known())
    return CohomTable::exact(*sub.h0 + *quotient.h0, *quotient.h1, CohomRule::UnionSequence);
  if (quotient.h0 && *quotient.h0 == 0 && sub.known())
    return CohomTable::exact(*sub.h0, *sub.h0 - chi, CohomRule::UnionSequence);
  return CohomTable::unknown(chi);
}

CohomTable coh(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z) {
  ZeroCycle zc = normalize_zero_cycle(R, Z);
  CohomTable table;
  switch (R.shape()) {
    case ShapeKind::Empty: return zero_table();
    case ShapeKind::Integral: table = coh_integral(R, D, zc); break;
    case ShapeKind::DisjointLines: table = coh_lines(R, D, zc); break;
    case ShapeKind::DoubleLine: table = coh_double_line(R, D, zc); break;
    case ShapeKind::Union: table = coh_union(R, D, zc); break;
  }
  if (table.known()) return table;
  if (zc.degree == 0) {
    if (R.surface().has_lattice()) {
      CohomTable seq = coh_restriction_sequence(R.surface(), R.total_class(), D);
      if (seq.known()) return seq;
    }
    return table;
  }
  // 0 -> O_R(D) -> O_R(Z+D) -> O_Z -> 0
  CohomTable base = coh(R, D, ZeroCycle::none());
  if (base.h1_vanishes()) return CohomTable::exact(table.chi, 0, CohomRule::ZeroCycleExtension);
  return table;
}

std::optional<bool> globally_generated(const CurveSpec& R, const DivClass& D, const ZeroCycle& Z) {
  ZeroCycle zc = normalize_zero_cycle(R, Z);
  const SurfaceModel& F = R.surface();
  switch (R.shape()) {
    case ShapeKind::Empty: return true;
    case ShapeKind::Integral: {
      Integer m = zc.degree + degree_on(F, R.total_class(), D);
      Integer g = class_genus(F, R.total_class());
      if (m < 0) return false;
      if (g == 0 || m >= 2 * g) return true;
      return std::nullopt;
    }
    case ShapeKind::DisjointLines: {
      Integer line_degree = degree_on(F, R.component_class(), D);
      for (const auto& zi : zc.allocation)
        if (zi + line_degree < 0) return false;
      return true;
    }
    case ShapeKind::DoubleLine: {
      Integer line_degree = degree_on(F, R.component_class(), D);
      if (zc.split->residual + line_degree < 0) return false;
      if (zc.split->on_line + line_degree >= 0) return true;
      return std::nullopt;
    }
    case ShapeKind::Union: {
      const CurveSpec& A = R.first();
      const CurveSpec& B = R.second();
      ZeroCycle za = ZeroCycle::of_degree(zc.allocation[0]);
      ZeroCycle zb = ZeroCycle::of_degree(zc.allocation[1]);
      std::optional<bool> quotient = globally_generated(B, D, zb);
      if (quotient == false) return false;
      std::optional<bool> sub = globally_generated(A, D - B.total_class(), za);
      if (quotient == true && sub == true && coh(A, D - B.total_class(), za).h1_vanishes()) return true;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace dblsurf
