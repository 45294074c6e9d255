#pragma once

#include "dblsurf/strata.hpp"

#include <json.hpp>

#include <optional>

namespace dblsurf::cli {

using Json = nlohmann::ordered_json;

/// Token used wherever a value could not be decided.
inline constexpr const char* kUnknown = "UNKNOWN";

/// Integers become JSON numbers when they fit in 64 bits and decimal strings
/// otherwise.
Json to_json(const Integer& v);
Json to_json(const std::optional<Integer>& v);
Json to_json(const std::optional<bool>& v);
Json to_json(const DivClass& c);
Json to_json(const CohomTable& t);
Json to_json(const ZeroCycle& z);
Json to_json(const ExistenceConditions& c);
Json to_json(const ExistenceVerdict& v);
Json to_json(const TripleNumerics& t);
Json to_json(const StratumReport& r);
Json to_json(const LiftingReport& r);
Json to_json(const ThickFourLineReport& r);
Json to_json(const DegenerationReport& r);

/// Reads an integer given as a JSON number or a decimal string.
Integer integer_from_json(const Json& j);
/// Reads a class given as an array of integers or a string such as "2,3".
DivClass class_from_json(const Json& j);

}  // namespace dblsurf::cli
