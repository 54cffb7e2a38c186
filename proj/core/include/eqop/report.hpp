#ifndef EQOP_REPORT_HPP
#define EQOP_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace eqop {

/// A deterministic run report: one line per check plus optional tables.
/// The JSON rendering is byte-stable across reruns (no timing data); the
/// text rendering appends the wall time.
struct RunReport {
  struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
  };
  std::string command;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> tables;
  double wall_ms = 0;

  void add(const std::string& name, bool pass, const std::string& detail = "");
  void table(const std::string& name, const std::string& rendered);
  bool ok() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

}  // namespace eqop

#endif
