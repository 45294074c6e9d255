#pragma once

#include "dblsurf/cli/json_io.hpp"
#include "dblsurf/errors.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace dblsurf::cli {

/// Malformed request: unknown command, missing or ill-typed parameter.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Names accepted by the examples command.
const std::vector<std::string>& example_names();

/// Runs one request of the form {"command": ..., <parameters>} and returns
/// the envelope {"request", "ok", "result"} or {"request", "ok", "error"}
/// with error kind "usage" or "domain". Never throws.
Json run_request(const Json& request);

/// Exit status for a response: 0 ok, 1 domain error, 2 usage error.
int exit_status(const Json& response);

/// Reads newline-delimited requests and writes one compact JSON response per
/// line, in input order. Blank lines are skipped. Returns the worst exit
/// status seen.
int run_batch(std::istream& in, std::ostream& out);

/// Human-readable rendering of a response, derived from its JSON form so
/// both carry the same numbers.
std::string render_text(const Json& response);

}  // namespace dblsurf::cli
