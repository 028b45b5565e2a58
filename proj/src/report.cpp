#include "altring/report.hpp"

#include <algorithm>

namespace altring {

Json to_json(const CheckReport& report) {
  Json j;
  j["condition"] = report.condition;
  j["pass"] = report.pass;
  j["witness"] = report.witness;
  j["quantifier_space"] = report.quantifier_space;
  if (!report.details.empty()) j["details"] = report.details;
  if (!report.required) j["required"] = false;
  return j;
}

Json to_json(const std::vector<CheckReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return !r.required || r.pass; });
}

const CheckReport* find_report(const std::vector<CheckReport>& reports,
                               const std::string& condition) {
  auto it = std::find_if(reports.begin(), reports.end(),
                         [&](const CheckReport& r) { return r.condition == condition; });
  return it == reports.end() ? nullptr : &*it;
}

}  // namespace altring
