#include "dblsurf/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using dblsurf::cli::Json;

namespace {

struct Options {
  std::string surface = "2Q";
  std::string format = "text";
  std::string shape;
  std::string cls, class_b, twist, xi, eta, name, batch_file;
  std::string z, d, g, a, b, c, count;
  std::vector<std::string> alloc;
  std::vector<std::string> split;
};

Json integer_token(const std::string& text) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  return text;
}

Json integer_list(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (const auto& s : items) out.push_back(integer_token(s));
  return out;
}

void put(Json& req, const char* key, const std::string& value, bool integer = false) {
  if (!value.empty()) req[key] = integer ? integer_token(value) : Json(value);
}

int emit(const Json& response, const std::string& format) {
  if (format == "json")
    std::cout << response.dump(2) << '\n';
  else
    std::cout << dblsurf::cli::render_text(response);
  return dblsurf::cli::exit_status(response);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curves on double surfaces: triples, cohomology, existence and strata"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--surface", o.surface, "2H, 2Q or 2F:d")->capture_default_str();
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* cohomology = app.add_subcommand("cohomology", "h0, h1 of O_R(Z+D)");
  cohomology->add_option("--shape", o.shape, "integral, lines, double-line, union or empty")->required();
  cohomology->add_option("--class", o.cls, "class of R, the ruling of the lines, or the line under a double line");
  cohomology->add_option("--class-b", o.class_b, "second component of a union");
  cohomology->add_option("--count", o.count, "number of disjoint lines");
  cohomology->add_option("--twist", o.twist, "twist class D")->required();
  cohomology->add_option("--z", o.z, "degree of Z");
  cohomology->add_option("--alloc", o.alloc, "per-component degrees of Z")->delimiter(',');
  cohomology->add_option("--split", o.split, "w,y on a double line")->delimiter(',');

  auto* triple = app.add_subcommand("triple", "genus, degree, fiber dimension and existence of {Z,R,P}");
  triple->add_option("--z", o.z, "degree of Z");
  triple->add_option("--xi", o.xi, "class of R (0 or 0,0 for empty)")->required();
  triple->add_option("--eta", o.eta, "class of P")->required();
  triple->add_option("--shape", o.shape, "generic, integral or double-line");
  triple->add_option("--alloc", o.alloc, "per-component degrees of Z")->delimiter(',');
  triple->add_option("--split", o.split, "w,y on a double line")->delimiter(',');

  auto* enumerate = app.add_subcommand("enumerate", "all numerical triples of degree d and genus g");
  enumerate->add_option("--d", o.d, "degree")->required();
  enumerate->add_option("--g", o.g, "genus")->required();

  auto* stratum = app.add_subcommand("stratum", "dimension report for H_{z,xi,eta}");
  stratum->add_option("--z", o.z, "degree of Z");
  stratum->add_option("--xi", o.xi, "class of R")->required();
  stratum->add_option("--eta", o.eta, "class of P")->required();

  auto* examples = app.add_subcommand("examples", "replay a worked example");
  examples->add_option("name", o.name, "example name")->required()->check(CLI::IsMember(dblsurf::cli::example_names()));
  for (auto [flag, target] : {std::pair{"--a", &o.a}, {"--b", &o.b}, {"--c", &o.c}, {"--d", &o.d}, {"--g", &o.g},
                              {"--z", &o.z}})
    examples->add_option(flag, *target, "example parameter");

  auto* batch = app.add_subcommand("batch", "newline-delimited JSON requests, one JSON response per line");
  batch->add_option("file", o.batch_file, "request file; standard input when omitted or '-'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (batch->parsed()) {
    if (o.batch_file.empty() || o.batch_file == "-") return dblsurf::cli::run_batch(std::cin, std::cout);
    std::ifstream in(o.batch_file);
    if (!in) {
      std::cerr << "cannot open " << o.batch_file << '\n';
      return 2;
    }
    return dblsurf::cli::run_batch(in, std::cout);
  }

  Json req;
  req["command"] = app.get_subcommands().front()->get_name();
  if (!examples->parsed()) req["surface"] = o.surface;
  put(req, "name", o.name);
  put(req, "shape", o.shape);
  put(req, "class", o.cls);
  put(req, "class_b", o.class_b);
  put(req, "count", o.count, true);
  put(req, "twist", o.twist);
  put(req, "xi", o.xi);
  put(req, "eta", o.eta);
  for (auto [key, value] : {std::pair{"z", &o.z}, {"d", &o.d}, {"g", &o.g}, {"a", &o.a}, {"b", &o.b}, {"c", &o.c}})
    put(req, key, *value, true);
  if (!o.alloc.empty()) req["alloc"] = integer_list(o.alloc);
  if (!o.split.empty()) req["split"] = integer_list(o.split);
  return emit(dblsurf::cli::run_request(req), o.format);
}
