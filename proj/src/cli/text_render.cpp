#include "dblsurf/cli/commands.hpp"

namespace dblsurf::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Scalars short enough to share one line.
bool flat(const Json& array) {
  for (const auto& v : array)
    if (v.is_structured() || (v.is_string() && v.get<std::string>().find(' ') != std::string::npos)) return false;
  return true;
}

std::string inline_array(const Json& array) {
  std::string out = "[";
  for (std::size_t i = 0; i < array.size(); ++i) out += (i ? ", " : "") + scalar(array[i]);
  return out + "]";
}

void emit_object(const Json& object, int indent, std::string& out);

void emit_entry(const std::string& key, const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    out += pad + key + ":\n";
    emit_object(v, indent + 2, out);
  } else if (v.is_array() && flat(v)) {
    out += pad + key + ": " + inline_array(v) + "\n";
  } else if (v.is_array()) {
    out += pad + key + ":\n";
    for (const auto& item : v) {
      if (item.is_object()) {
        out += pad + "  -\n";
        emit_object(item, indent + 4, out);
      } else {
        out += pad + "  - " + (item.is_array() ? inline_array(item) : scalar(item)) + "\n";
      }
    }
  } else {
    out += pad + key + ": " + scalar(v) + "\n";
  }
}

void emit_object(const Json& object, int indent, std::string& out) {
  for (const auto& [key, value] : object.items()) emit_entry(key, value, indent, out);
}

}  // namespace

std::string render_text(const Json& response) {
  std::string out;
  const Json& request = response.at("request");
  if (request.is_object() && request.contains("command"))
    out += scalar(request.at("command")) + (response.value("ok", false) ? "" : " failed") + "\n";
  emit_entry("request", request, 0, out);
  if (response.value("ok", false))
    emit_entry("result", response.at("result"), 0, out);
  else
    emit_entry("error", response.at("error"), 0, out);
  return out;
}

}  // namespace dblsurf::cli
