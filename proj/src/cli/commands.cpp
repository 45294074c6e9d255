#include "dblsurf/cli/commands.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

namespace dblsurf::cli {

namespace {

const Json& require(const Json& req, const char* key) {
  if (!req.contains(key)) throw UsageError(std::string("missing parameter '") + key + "'");
  return req.at(key);
}

Integer int_param(const Json& req, const char* key, std::optional<long long> fallback = std::nullopt) {
  if (!req.contains(key)) {
    if (fallback) return *fallback;
    throw UsageError(std::string("missing parameter '") + key + "'");
  }
  return integer_from_json(req.at(key));
}

int small_param(const Json& req, const char* key, long long fallback, long long lo, long long hi) {
  Integer v = int_param(req, key, fallback);
  if (v < lo || v > hi)
    throw UsageError(std::string("parameter '") + key + "' must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  return static_cast<int>(v);
}

DivClass class_param(const Json& req, const char* key) { return class_from_json(require(req, key)); }

std::string string_param(const Json& req, const char* key, const std::string& fallback) {
  if (!req.contains(key)) return fallback;
  if (!req.at(key).is_string()) throw UsageError(std::string("parameter '") + key + "' must be a string");
  return req.at(key).get<std::string>();
}

void allow_only(const Json& req, std::initializer_list<const char*> keys) {
  std::set<std::string> allowed{"command", "surface"};
  for (const char* k : keys) allowed.insert(k);
  for (const auto& [key, value] : req.items())
    if (!allowed.count(key)) throw UsageError("unknown parameter '" + key + "' for " + req.at("command").get<std::string>());
}

SurfaceModel surface_param(const Json& req) {
  const std::string text = string_param(req, "surface", "2Q");
  try {
    return SurfaceModel::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::vector<Integer> integer_list(const Json& j, const char* key) {
  if (!j.is_array()) throw UsageError(std::string("parameter '") + key + "' must be an array of integers");
  std::vector<Integer> out;
  for (const auto& v : j) out.push_back(integer_from_json(v));
  return out;
}

// Z from explicit split or allocation, else the generic cycle of degree z.
ZeroCycle zero_cycle_param(const Json& req, const CurveSpec& R) {
  if (req.contains("split")) {
    std::vector<Integer> split = integer_list(req.at("split"), "split");
    if (split.size() != 2) throw UsageError("'split' takes two integers w,y");
    ZeroCycle Z = ZeroCycle::on_double_line(split[0], split[1]);
    if (req.contains("z") && int_param(req, "z") != Z.degree) throw DomainError("z does not equal w + y");
    return Z;
  }
  if (req.contains("alloc")) {
    ZeroCycle Z = ZeroCycle::allocated(integer_list(req.at("alloc"), "alloc"));
    if (req.contains("z") && int_param(req, "z") != Z.degree) throw DomainError("z does not equal the allocation sum");
    return Z;
  }
  return generic_zero_cycle(R, int_param(req, "z", 0));
}

DivClass halve(const DivClass& c) {
  std::vector<Integer> coords;
  for (const auto& v : c.coords()) {
    if (v % 2 != 0) throw DomainError("class " + c.str() + " is not twice a line");
    coords.push_back(v / 2);
  }
  return DivClass(std::move(coords));
}

Json cmd_cohomology(const Json& req) {
  allow_only(req, {"shape", "class", "class_b", "count", "twist", "z", "alloc", "split"});
  const SurfaceModel F = surface_param(req);
  const std::string shape = string_param(req, "shape", "integral");
  std::optional<CurveSpec> R;
  if (shape == "empty") R = CurveSpec::empty(F);
  else if (shape == "integral") R = CurveSpec::integral(F, class_param(req, "class"));
  else if (shape == "lines") R = CurveSpec::disjoint_lines(F, class_param(req, "class"), small_param(req, "count", 1, 1, 10000));
  else if (shape == "double-line") R = CurveSpec::double_line(F, class_param(req, "class"));
  else if (shape == "union")
    R = CurveSpec::union_of(CurveSpec::integral(F, class_param(req, "class")),
                            CurveSpec::integral(F, class_param(req, "class_b")));
  else
    throw UsageError("unknown shape '" + shape + "' (integral, lines, double-line, union, empty)");
  const DivClass twist = class_param(req, "twist");
  const ZeroCycle Z = normalize_zero_cycle(*R, zero_cycle_param(req, *R));
  return Json{{"curve", R->describe()},
              {"shape", to_string(R->shape())},
              {"total_class", to_json(R->total_class())},
              {"twist", to_json(twist)},
              {"zero_cycle", to_json(Z)},
              {"cohomology", to_json(coh(*R, twist, Z))}};
}

CurveSpec residual_param(const Json& req, const SurfaceModel& F, const DivClass& xi) {
  const std::string shape = string_param(req, "shape", "generic");
  if (shape == "generic") return generic_curve(F, xi);
  if (shape == "integral") return CurveSpec::integral(F, xi);
  if (shape == "double-line") return CurveSpec::double_line(F, halve(xi));
  throw UsageError("unknown residual shape '" + shape + "' (generic, integral, double-line)");
}

Json triple_json(const Triple& T) {
  Json out{{"triple", T.describe()},
           {"z", to_json(T.z())},
           {"xi", T.residual().is_empty() ? Json("empty") : to_json(T.residual().total_class())},
           {"eta", to_json(T.divisorial())},
           {"residual_shape", to_string(T.residual().shape())},
           {"zero_cycle", to_json(T.zero_cycle())},
           {"genus", to_json(triple_genus(T))},
           {"degree", to_json(triple_degree(T))}};
  if (!T.residual().is_empty()) out["fiber_dim"] = to_json(fiber_dimension(T));
  out["verdict"] = to_json(check_existence(T));
  if (!T.residual().is_empty()) out["lifting"] = to_json(lifting_check(T));
  return out;
}

Json cmd_triple(const Json& req) {
  allow_only(req, {"z", "xi", "eta", "shape", "alloc", "split"});
  const SurfaceModel F = surface_param(req);
  const DivClass xi = class_param(req, "xi");
  const DivClass eta = class_param(req, "eta");
  F.check_rank(xi);
  const CurveSpec R = residual_param(req, F, xi);
  return triple_json(Triple(R, eta, zero_cycle_param(req, R)));
}

Json cmd_enumerate(const Json& req) {
  allow_only(req, {"d", "g"});
  const SurfaceModel F = surface_param(req);
  const Integer d = int_param(req, "d");
  const Integer g = int_param(req, "g");
  Json rows = Json::array();
  for (const auto& row : enumerate_triples(F, d, g)) rows.push_back(to_json(row));
  return Json{{"d", to_json(d)}, {"g", to_json(g)}, {"count", rows.size()}, {"rows", rows}};
}

Json cmd_stratum(const Json& req) {
  allow_only(req, {"z", "xi", "eta"});
  const SurfaceModel F = surface_param(req);
  return to_json(stratum_dimension(F, int_param(req, "z", 0), class_param(req, "xi"), class_param(req, "eta")));
}

Json verdict_row(const ExistenceVerdict& v) {
  Json row{{"outcome", to_string(v.outcome)}, {"branch", to_string(v.branch)}, {"code", v.code}};
  if (v.dimension) row["dimension"] = to_json(*v.dimension);
  return row;
}

Json example_thick_four_line(const Json& req) {
  return to_json(thick_four_line_analysis(int_param(req, "g", -2)));
}

Json example_triple_line(const Json& req) {
  const SurfaceModel Q = SurfaceModel::double_quadric();
  const Integer b = int_param(req, "b", 0);
  if (b < 0) throw DomainError("triple lines need b >= 0");
  Triple T(CurveSpec::integral(Q, {1, 0}), {2, 0}, ZeroCycle::of_degree(b + 2));
  Json out = triple_json(T);
  out["stratum"] = to_json(stratum_dimension(Q, b + 2, {1, 0}, {2, 0}));
  return out;
}

Json example_double_plane(const Json& req) {
  const SurfaceModel P2 = SurfaceModel::double_plane();
  const Integer d = int_param(req, "d", 4);
  const Integer g = int_param(req, "g", 0);
  Json rows = Json::array();
  std::size_t exists = 0;
  for (const auto& t : enumerate_triples(P2, d, g)) {
    ExistenceVerdict v = check_existence(Triple::generic(P2, t.z, t.xi, t.eta));
    if (v.outcome == Outcome::Exists) ++exists;
    Json row = to_json(t);
    row["verdict"] = verdict_row(v);
    rows.push_back(row);
  }
  return Json{{"d", to_json(d)}, {"g", to_json(g)}, {"triples", rows.size()}, {"exists", exists}, {"rows", rows}};
}

Json example_line_union(const Json& req) {
  const SurfaceModel Q = SurfaceModel::double_quadric();
  const int b = small_param(req, "b", 2, 1, 12);
  const int z = small_param(req, "z", 2, 0, 12);
  Json rows = Json::array();
  for (const auto& alloc : all_allocations(z, b)) {
    Triple T(CurveSpec::disjoint_lines(Q, {0, 1}, b), {0, b}, ZeroCycle::allocated(alloc));
    Json row{{"allocation", to_json(T.zero_cycle()).at("allocation")}};
    row["verdict"] = verdict_row(check_existence(T));
    rows.push_back(row);
  }
  return Json{{"b", b}, {"z", z}, {"rows", rows}};
}

Json example_quadric_conic(const Json& req) {
  const SurfaceModel Q = SurfaceModel::double_quadric();
  const int z_max = small_param(req, "z", 4, 0, 1000);
  Json rows = Json::array();
  for (int z = 0; z <= z_max; ++z) {
    Triple T(CurveSpec::integral(Q, {1, 1}), {1, 1}, ZeroCycle::of_degree(z));
    Json row{{"z", z}, {"genus", to_json(triple_genus(T))}};
    row["verdict"] = verdict_row(check_existence(T));
    rows.push_back(row);
  }
  return Json{{"rows", rows}};
}

Json example_double_line(const Json& req) {
  const SurfaceModel Q = SurfaceModel::double_quadric();
  const int z = small_param(req, "z", 4, 0, 1000);
  Json rows = Json::array();
  for (int w = 0; w <= z; ++w) {
    Triple T(CurveSpec::double_line(Q, {1, 0}), {2, 0}, ZeroCycle::on_double_line(w, z - w));
    ExistenceVerdict v = check_existence(T);
    Json row{{"w", w}, {"y", z - w}, {"regularity", to_json(v.conditions.regularity)}};
    row["verdict"] = verdict_row(v);
    rows.push_back(row);
  }
  return Json{{"z", z}, {"genus", to_json(triple_genus(Triple(CurveSpec::double_line(Q, {1, 0}), {2, 0},
                                                                  ZeroCycle::on_double_line(z, 0))))},
              {"rows", rows}};
}

Json example_degree_d(const Json& req) {
  const int d = small_param(req, "d", 5, 1, 1000);
  const SurfaceModel F = SurfaceModel::general_doubling(d);
  Json rows = Json::array();
  for (int z = 0; z <= 2 * d; ++z) {
    Triple T(CurveSpec::integral(F, {1}), {1}, ZeroCycle::of_degree(z));
    ExistenceVerdict v = check_existence(T);
    Json row{{"z", z}, {"genus", to_json(triple_genus(T))}, {"twisted", to_json(v.twisted)}};
    row["verdict"] = verdict_row(v);
    rows.push_back(row);
  }
  return Json{{"d", d}, {"rows", rows}};
}

Json example_general_zpp(const Json& req) {
  const SurfaceModel Q = SurfaceModel::double_quadric();
  const Integer a = int_param(req, "a", 2);
  const Integer b = int_param(req, "b", 3);
  const Integer z = int_param(req, "z", 1);
  Json out = to_json(general_ZPP_quadric(a, b, z));
  Triple T(CurveSpec::integral(Q, DivClass(std::vector<Integer>{a, b})), DivClass(std::vector<Integer>{a, b}),
           ZeroCycle::of_degree(z));
  out["verdict"] = verdict_row(check_existence(T));
  return out;
}

Json example_four_line(const Json& req) {
  const SurfaceModel Q = SurfaceModel::double_quadric();
  const Integer b = int_param(req, "b", 0);
  const Integer c = int_param(req, "c", 0);
  if (b < 0 || c < b) throw DomainError("quasi-primitive 4-lines need c >= b >= 0");
  Triple T(CurveSpec::double_line(Q, {1, 0}), {2, 0}, ZeroCycle::on_double_line(c + 2, b + 2));
  return triple_json(T);
}

using ExampleFn = Json (*)(const Json&);

const std::vector<std::pair<std::string, ExampleFn>>& examples() {
  static const std::vector<std::pair<std::string, ExampleFn>> table = {
      {"thick-4-line", example_thick_four_line}, {"triple-line", example_triple_line},
      {"double-plane", example_double_plane},    {"line-union", example_line_union},
      {"quadric-conic", example_quadric_conic},  {"double-line", example_double_line},
      {"degree-d", example_degree_d},            {"general-zpp", example_general_zpp},
      {"four-line", example_four_line},
  };
  return table;
}

Json cmd_examples(const Json& req) {
  allow_only(req, {"name", "a", "b", "c", "d", "g", "z"});
  if (req.contains("surface")) throw UsageError("examples fix their own surface");
  const std::string name = string_param(req, "name", "");
  for (const auto& [key, fn] : examples())
    if (key == name) return Json{{"name", name}, {"report", fn(req)}};
  std::string known;
  for (const auto& n : example_names()) known += (known.empty() ? "" : ", ") + n;
  throw UsageError("unknown example '" + name + "' (" + known + ")");
}

Json error_envelope(const Json& request, const char* kind, const std::string& message) {
  return Json{{"request", request}, {"ok", false}, {"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : examples()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

Json run_request(const Json& request) {
  try {
    if (!request.is_object()) throw UsageError("a request must be a JSON object");
    const Json& command = require(request, "command");
    if (!command.is_string()) throw UsageError("'command' must be a string");
    const std::string name = command.get<std::string>();
    Json result;
    if (name == "cohomology") result = cmd_cohomology(request);
    else if (name == "triple") result = cmd_triple(request);
    else if (name == "enumerate") result = cmd_enumerate(request);
    else if (name == "stratum") result = cmd_stratum(request);
    else if (name == "examples") result = cmd_examples(request);
    else throw UsageError("unknown command '" + name + "'");
    return Json{{"request", request}, {"ok", true}, {"result", result}};
  } catch (const UsageError& e) {
    return error_envelope(request, "usage", e.what());
  } catch (const DomainError& e) {
    return error_envelope(request, "domain", e.what());
  } catch (const Json::exception& e) {
    return error_envelope(request, "usage", e.what());
  }
}

int exit_status(const Json& response) {
  if (response.value("ok", false)) return 0;
  return response.at("error").at("kind") == "usage" ? 2 : 1;
}

int run_batch(std::istream& in, std::ostream& out) {
  int worst = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json response;
    try {
      response = run_request(Json::parse(line));
    } catch (const Json::parse_error& e) {
      response = error_envelope(Json(line), "usage", e.what());
    }
    worst = std::max(worst, exit_status(response));
    out << response.dump() << '\n';
  }
  return worst;
}

}  // namespace dblsurf::cli
