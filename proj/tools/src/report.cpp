#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace chieuler::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string VerificationReport::case_key() const {
  std::ostringstream os;
  os << identity;
  for (const auto& [k, v] : params) {
    // Zero-pad integers so "10" sorts after "9".
    const bool numeric = !v.empty() && v.find_first_not_of("0123456789") == std::string::npos;
    os << '|' << k << '=';
    if (numeric) os << std::setw(8) << std::setfill('0');
    os << v;
  }
  return os.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["status"] = to_string(status);
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  if (padic) {
    j["metric"] = {{"kind", "padic-valuation"}, {"valuation", padic->valuation}, {"target", padic->target}};
  } else if (absolute) {
    j["metric"] = {{"kind", "absolute-error"}, {"error", absolute->error}, {"bound", absolute->bound}};
  } else {
    j["metric"] = nullptr;
  }
  j["variant"] = variant;
  for (const auto& [k, v] : extra.items()) j[k] = v;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

}  // namespace chieuler::cli
