#include "eqop/report.hpp"

#include <sstream>

namespace eqop {

void RunReport::add(const std::string& name, bool pass,
                    const std::string& detail) {
  checks.push_back({name, pass, detail});
}

void RunReport::table(const std::string& name, const std::string& rendered) {
  tables.emplace_back(name, rendered);
}

bool RunReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "$ " << command << "\n";
  for (const auto& [name, body] : tables) {
    out << "-- " << name << "\n" << body;
    if (!body.empty() && body.back() != '\n') out << "\n";
  }
  for (const auto& c : checks) {
    out << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (ok() ? "OK" : "FAILED") << " (" << checks.size() << " checks, "
      << wall_ms << " ms)\n";
  return out.str();
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["ok"] = ok();
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = cs;
  nlohmann::json ts = nlohmann::json::object();
  for (const auto& [name, body] : tables) ts[name] = body;
  j["tables"] = ts;
  return j;
}

}  // namespace eqop
