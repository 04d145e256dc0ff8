#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hn/interval.hpp"

namespace hn {

enum class Verdict { Pass, PassWithErrata, Fail, Inconclusive };

std::string to_string(Verdict v);

// A recorded observation: an input and the exact value or enclosure seen.
struct Witness {
  std::string input;
  std::string value;
  std::optional<Interval> interval;
};

// Printed-vs-recomputed comparison. match is exact equality for
// rational/polynomial comparisons; for printed decimal table entries it means
// agreement within one unit in the last printed digit.
struct ErrataEntry {
  std::string location;
  std::string printed;
  std::string recomputed;
  bool match = false;
};

struct VerificationReport {
  std::string check_name;
  std::string params;
  Verdict verdict = Verdict::Pass;
  std::vector<Witness> witnesses;
  std::vector<ErrataEntry> errata;
  std::vector<std::string> notes;

  void witness(std::string input, std::string value) {
    witnesses.push_back({std::move(input), std::move(value), std::nullopt});
  }
  void witness(std::string input, const Interval& iv) {
    witnesses.push_back({std::move(input), iv.to_string(), iv});
  }
  // Downgrades the verdict (Pass < PassWithErrata < Inconclusive < Fail).
  void worsen(Verdict v);
  bool passed() const {
    return verdict == Verdict::Pass || verdict == Verdict::PassWithErrata;
  }
};

}  // namespace hn
