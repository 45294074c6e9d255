#pragma once

#include "dblsurf/triple_calculus.hpp"

#include <span>
#include <string_view>

namespace dblsurf {

/// Bumped whenever an entry is added, removed or changes verdict.
inline constexpr int kSpecialTableVersion = 1;

/// Shape the residual curve R must have for an entry to apply.
enum class ResidualShape {
  Integral,       // integral curve
  RulingLines,    // disjoint lines of one ruling (a single line counts)
  LineOfDoubling, // the line L on a general doubling
};

/// Family the divisorial class P must belong to.
enum class ClassFamily {
  Exact,               // P equals `exact` (or its swap on the quadric)
  Balanced,            // (a,a) with a >= 1
  RationalNonConic,    // (1,b) or (b,1) with b != 1
  StrictlyUnbalanced,  // 1 < min(a,b) < max(a,b)
  RulingMultiple,      // a multiple of the ruling of R
  Line,                // the line L
};

/// Condition on the zero-cycle.
enum class ZeroRule {
  Equals,                // z == value
  AtLeast,               // z >= value
  EveryPartPositive,     // every per-component degree >= 1
  SomePartEmpty,         // some per-component degree == 0
  AtLeastDegreeMinusOne, // z >= deg F - 1
};

/// One row of the irregular-case table: a pattern on {Z, R, P} and the
/// verdict it forces.
struct SpecialCase {
  std::string_view code;
  SurfaceKind surface;
  ResidualShape shape;
  bool residual_is_divisorial;  // R = P
  ClassFamily family;
  DivClass exact;
  ZeroRule zero_rule;
  long long zero_value;
  Outcome outcome;
  bool needs_general_z;
  bool needs_degeneration_chain;
  std::string_view anchor;
};

std::span<const SpecialCase> special_cases();

bool matches(const SpecialCase& entry, const Triple& T);

/// First matching entry, or nullptr.
const SpecialCase* find_special_case(const Triple& T);

}  // namespace dblsurf
