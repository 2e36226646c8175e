#ifndef OKA_REPORT_HPP
#define OKA_REPORT_HPP

#include <string>
#include <vector>

namespace oka {

/// One verification check: an exact identity (or structured assertion) with
/// a witness expression when it fails.
struct Check {
  std::string check_id;
  bool passed = false;
  std::string witness;  // canonical expression string; empty when passed
};

struct VerificationReport {
  std::vector<Check> checks;

  bool all_passed() const;
  void add(std::string id, bool ok, std::string witness = "");
  void merge(const VerificationReport& other);
  const Check* first_failure() const;

  /// JSON array of {check_id, status: "pass"|"fail", witness}.
  std::string to_json() const;
};

}  // namespace oka

#endif
