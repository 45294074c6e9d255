#include "dblsurf/cli/json_io.hpp"

#include "dblsurf/cli/commands.hpp"

#include <limits>

namespace dblsurf::cli {

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

Json to_json(const std::optional<Integer>& v) { return v ? to_json(*v) : Json(kUnknown); }

Json to_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(kUnknown); }

Json to_json(const DivClass& c) {
  Json out = Json::array();
  for (const auto& v : c.coords()) out.push_back(to_json(v));
  return out;
}

Json to_json(const CohomTable& t) {
  return Json{{"h0", to_json(t.h0)}, {"h1", to_json(t.h1)}, {"chi", to_json(t.chi)}, {"rule", to_string(t.rule)}};
}

Json to_json(const ZeroCycle& z) {
  Json out{{"degree", to_json(z.degree)}};
  Json alloc = Json::array();
  for (const auto& p : z.allocation) alloc.push_back(to_json(p));
  out["allocation"] = alloc;
  if (z.split) out["split"] = Json::array({to_json(z.split->on_line), to_json(z.split->residual)});
  out["generality"] = z.generality == Generality::General ? "general" : "specified";
  return out;
}

Json to_json(const ExistenceConditions& c) {
  return Json{{"h1_vanishes", to_json(c.h1_vanishes)},
              {"globally_generated_surrogate", to_json(c.globally_generated_surrogate)},
              {"regularity", to_json(c.regularity)},
              {"vanishing_without_z", to_json(c.vanishing_without_z)}};
}

Json to_json(const ExistenceVerdict& v) {
  Json out{{"outcome", to_string(v.outcome)}, {"branch", to_string(v.branch)}, {"code", v.code}};
  if (v.dimension) {
    out["dimension"] = to_json(*v.dimension);
    out["dimension_kind"] = v.dimension_kind == DimensionKind::Fiber ? "fiber" : "linear_system";
  }
  out["anchor"] = v.anchor;
  out["generality_assumed"] = v.generality_assumed;
  out["conditions"] = to_json(v.conditions);
  out["twisted"] = to_json(v.twisted);
  if (!v.failed_conditions.empty()) out["failed_conditions"] = v.failed_conditions;
  return out;
}

Json to_json(const TripleNumerics& t) {
  return Json{{"z", to_json(t.z)}, {"xi", t.xi.is_zero() ? Json("empty") : to_json(t.xi)}, {"eta", to_json(t.eta)}};
}

Json to_json(const StratumReport& r) {
  Json irr{{"kind", to_string(r.irreducibility.kind)}};
  if (r.irreducibility.kind == IrreducibilityKind::Components) irr["components"] = to_json(r.irreducibility.components);
  return Json{{"z", to_json(r.z)},
              {"xi", to_json(r.xi)},
              {"eta", to_json(r.eta)},
              {"dim_Hxi", to_json(r.dim_Hxi)},
              {"dim_Dzxi", to_json(r.dim_Dzxi)},
              {"dim_residual_system", to_json(r.dim_residual_system)},
              {"dim_D_total", to_json(r.dim_D_total)},
              {"fiber_dim", to_json(r.fiber_dim)},
              {"stratum_dim", to_json(r.stratum_dim)},
              {"on_V", to_json(r.on_V)},
              {"irreducibility", irr}};
}

Json to_json(const LiftingReport& r) {
  Json out{{"lifts", r.lifts}, {"dominated_class", to_json(r.dominated_class)}};
  out["dominated_dim"] = r.dominated_dim_known ? to_json(r.dominated_dim) : Json(kUnknown);
  out["twisted"] = to_json(r.table);
  return out;
}

Json to_json(const ThickFourLineReport& r) {
  return Json{{"genus", to_json(r.genus)},
              {"hom_dim_proj", to_json(r.hom_dim_proj)},
              {"on_X_codim", to_json(r.on_X_codim)},
              {"fixed_L_dim", to_json(r.fixed_L_dim)},
              {"total_dim", to_json(r.total_dim)},
              {"double_line_pairs_dim", to_json(r.double_line_pairs_dim)},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const DegenerationReport& r) {
  return Json{{"a", to_json(r.a)},
              {"b", to_json(r.b)},
              {"z", to_json(r.z)},
              {"rational_part", to_json(r.rational_part)},
              {"intersection_part", to_json(r.intersection_part)},
              {"rational_piece", to_json(r.rational_piece)},
              {"residual_piece", to_json(r.residual_piece)},
              {"total", to_json(r.total)},
              {"holds", r.holds},
              {"log", r.log}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw UsageError("not an integer: " + s);
    return Integer(s);
  }
  throw UsageError("expected an integer, got " + j.dump());
}

DivClass class_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_class(j.get<std::string>());
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (j.is_array() && !j.empty() && j.size() <= 2) {
    std::vector<Integer> coords;
    for (const auto& v : j) coords.push_back(integer_from_json(v));
    return DivClass(std::move(coords));
  }
  throw UsageError("expected a class such as \"2,3\" or [2,3], got " + j.dump());
}

}  // namespace dblsurf::cli
