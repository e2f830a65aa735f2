#pragma once

// Structured check reports emitted by the command-line verifier.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace badlocus {

struct Check {
  std::string id;        // stable statement identifier, e.g. "Thm1.1"
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct Report {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Check> checks;
  long runtime_ms = 0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"id", c.id},
                             {"expected", c.expected},
                             {"computed", c.computed},
                             {"pass", c.pass}});
    j["runtime_ms"] = runtime_ms;
    return j;
  }

  static Report from_json(const nlohmann::json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    for (auto it = j.at("parameters").begin(); it != j.at("parameters").end();
         ++it)
      r.parameters[it.key()] = it.value().get<std::string>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("id").get<std::string>(),
                          c.at("expected").get<std::string>(),
                          c.at("computed").get<std::string>(),
                          c.at("pass").get<bool>()});
    r.runtime_ms = j.at("runtime_ms").get<long>();
    return r;
  }
};

}  // namespace badlocus
