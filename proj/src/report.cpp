#include "hn/report.hpp"

namespace hn {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::PassWithErrata:
      return "pass-with-errata";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {
int rank(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return 0;
    case Verdict::PassWithErrata:
      return 1;
    case Verdict::Inconclusive:
      return 2;
    case Verdict::Fail:
      return 3;
  }
  return 3;
}
}  // namespace

void VerificationReport::worsen(Verdict v) {
  if (rank(v) > rank(verdict)) verdict = v;
}

}  // namespace hn
