#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "altring/field.hpp"

namespace altring {

using Json = nlohmann::ordered_json;

/// Outcome of one universally quantified check. Serializes to
/// { "condition", "pass", "witness", "quantifier_space" [, "details"] }.
struct CheckReport {
  std::string condition;
  bool pass = true;
  Json witness = nullptr;
  Json quantifier_space = Json::object();
  Json details = Json::object();
  // Informational checks are reported but do not gate a pipeline.
  bool required = true;
};

Json to_json(const CheckReport& report);
Json to_json(const std::vector<CheckReport>& reports);

// True when every required report passes.
bool all_pass(const std::vector<CheckReport>& reports);

// Null when no report carries `condition`.
const CheckReport* find_report(const std::vector<CheckReport>& reports,
                               const std::string& condition);

template <ScalarField F>
Json coords_json(const F& f, std::span<const typename F::Element> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(f.to_string(x));
  return out;
}

template <ScalarField F>
Json coords_json(const F& f, const Vec<F>& v) {
  return coords_json(f, std::span<const typename F::Element>(v));
}

}  // namespace altring
