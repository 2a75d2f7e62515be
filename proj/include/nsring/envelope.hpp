#pragma once

#include <string>

#include <json.hpp>

#include "nsring/verify.hpp"

namespace nsring {

enum class Format { json, csv, plain };

// Machine-readable result wrapper shared by every CLI subcommand. The field
// order is fixed and every numeric value is an exact integer; no floating
// point ever enters the payload.
struct OutputEnvelope {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<CheckResult> checks;

  bool all_checks_passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline nlohmann::ordered_json to_json(const OutputEnvelope& env) {
  nlohmann::ordered_json j;
  j["command"] = env.command;
  j["inputs"] = env.inputs;
  j["result"] = env.result;
  auto checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : env.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["details"] = c.details;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

inline std::string scalar_to_string(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flattens the tree into "path,value" rows, arrays indexed by position.
inline void flatten_csv(const nlohmann::ordered_json& node,
                        const std::string& path, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten_csv(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array()) {
    std::size_t i = 0;
    for (const auto& value : node)
      flatten_csv(value, path + "[" + std::to_string(i++) + "]", out);
    if (node.empty()) out += path + ",\n";
  } else {
    out += path + "," + scalar_to_string(node) + "\n";
  }
}

inline void render_plain(const nlohmann::ordered_json& node, int depth,
                         std::string& out) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_object() || value.is_array()) {
        out += indent + key + ":\n";
        render_plain(value, depth + 1, out);
      } else {
        out += indent + key + ": " + scalar_to_string(value) + "\n";
      }
    }
  } else if (node.is_array()) {
    for (const auto& value : node) {
      if (value.is_object() || value.is_array()) {
        out += indent + "-\n";
        render_plain(value, depth + 1, out);
      } else {
        out += indent + "- " + scalar_to_string(value) + "\n";
      }
    }
  } else {
    out += indent + scalar_to_string(node) + "\n";
  }
}

}  // namespace detail

inline std::string render(const OutputEnvelope& env, Format format) {
  const nlohmann::ordered_json j = detail::to_json(env);
  switch (format) {
    case Format::json:
      return j.dump(2) + "\n";
    case Format::csv: {
      std::string out = "key,value\n";
      detail::flatten_csv(j, "", out);
      return out;
    }
    case Format::plain: {
      std::string out;
      detail::render_plain(j, 0, out);
      return out;
    }
  }
  return {};
}

}  // namespace nsring
