#pragma once

#include "hn/rational.hpp"

namespace hn {

// H_n = 1 + 1/2 + ... + 1/n, exact. Throws std::domain_error for n = 0.
Rat harmonic_exact(unsigned long n);

// Incremental exact harmonic numbers for sweeps over consecutive n.
class HarmonicAccumulator {
 public:
  HarmonicAccumulator() = default;

  // Advances to H_n; n must be >= the current index.
  const Rat& advance_to(unsigned long n) {
    while (index_ < n) {
      ++index_;
      value_ += Rat(1, index_);
    }
    return value_;
  }

  unsigned long index() const { return index_; }
  const Rat& value() const { return value_; }

 private:
  unsigned long index_ = 0;
  Rat value_ = 0;
};

}  // namespace hn
