#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dblsurf {

/// Arbitrary-precision signed integer used for every quantity in the library.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

/// Narrow to a machine integer; throws DomainError if the value does not fit.
long long to_machine(const Integer& value, const char* what);

}  // namespace dblsurf
