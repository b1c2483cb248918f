#pragma once

#include <string>
#include <vector>

namespace ncg {

enum class Verdict { Pass, Fail, NotApplicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "not-applicable";
  }
}

/// Outcome of one audit check. `preconditions` records each gate that was
/// evaluated ("alpha>4n: yes"), so a NotApplicable verdict always says which
/// gate failed. A Fail always carries a witness string.
struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::NotApplicable;
  std::string witness;                  // empty unless verdict == Fail
  std::vector<std::string> preconditions;
  std::vector<std::string> notes;
};

}  // namespace ncg
