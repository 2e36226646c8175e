#include "oka/report.hpp"

#include <json.hpp>

namespace oka {

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void VerificationReport::add(std::string id, bool ok, std::string witness) {
  checks.push_back({std::move(id), ok, ok ? "" : std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

std::string VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"check_id", c.check_id},
                   {"status", c.passed ? "pass" : "fail"},
                   {"witness", c.witness}});
  }
  return arr.dump(2);
}

}  // namespace oka
