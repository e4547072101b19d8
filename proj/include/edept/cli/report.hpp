#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "edept/cli/config.hpp"
#include "edept/io/csv.hpp"

namespace edept::cli {

/// One pass/fail line. `skipped` checks carry a reason and never fail.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

/// value <= tolerance; NaN fails.
inline Check bound_check(std::string name, double value, double tolerance, std::string detail = {}) {
  return {std::move(name), value, tolerance, value <= tolerance, false, std::move(detail)};
}

inline Check skipped_check(std::string name, std::string reason) {
  return {std::move(name), 0.0, 0.0, true, true, std::move(reason)};
}

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitNumerical = 3 };

class Report {
 public:
  Report(std::string command, const RunConfig& config) : command_(std::move(command)), config_(config) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  void output(std::string path) { outputs_.push_back(std::move(path)); }
  json& extra() { return extra_; }

  const std::vector<Check>& checks() const { return checks_; }

  bool all_pass() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  int exit_code() const { return all_pass() ? kExitOk : kExitCheckFailed; }

  json to_json() const {
    json checks = json::array();
    for (const auto& c : checks_) {
      json j = {{"name", c.name}, {"pass", c.pass}, {"skipped", c.skipped}};
      if (!c.skipped) {
        j["value"] = std::isfinite(c.value) ? json(c.value) : json(nullptr);
        j["tolerance"] = c.tolerance;
      }
      if (!c.detail.empty()) j["detail"] = c.detail;
      checks.push_back(std::move(j));
    }
    json out = {{"command", command_}, {"config", cli::to_json(config_)}, {"checks", checks},
                {"exit_code", exit_code()}, {"outputs", outputs_}};
    out["exponent_table"] = extra_.contains("exponent_table") ? extra_["exponent_table"] : json::array();
    for (const auto& [k, v] : extra_.items())
      if (k != "exponent_table") out[k] = v;
    return out;
  }

  /// Writes <command>_summary.json into `dir`.
  std::string write_summary(const std::filesystem::path& dir) {
    const std::string path = (dir / (command_ + "_summary.json")).string();
    outputs_.push_back(path);
    auto f = io::open_output(path);
    f << to_json().dump(2) << '\n';
    return path;
  }

  void print(std::ostream& out, bool color) const {
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* dim = color ? "\033[2m" : "";
    const char* reset = color ? "\033[0m" : "";
    for (const auto& c : checks_) {
      if (c.skipped) {
        out << dim << "SKIP " << reset << ' ' << c.name << "  (" << c.detail << ")\n";
        continue;
      }
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.3e <= %.1e", c.value, c.tolerance);
      out << (c.pass ? green : red) << (c.pass ? "PASS " : "FAIL ") << reset << ' ' << c.name << "  " << buf;
      if (!c.detail.empty()) out << "  " << c.detail;
      out << '\n';
    }
  }

 private:
  std::string command_;
  RunConfig config_;
  std::vector<Check> checks_;
  std::vector<std::string> outputs_;
  json extra_ = json::object();
};

/// Color only for a terminal, and never when NO_COLOR is set.
inline bool use_color(bool is_terminal) {
  const char* no_color = std::getenv("NO_COLOR");
  return is_terminal && (no_color == nullptr || no_color[0] == '\0');
}

}  // namespace edept::cli
