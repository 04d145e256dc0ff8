#include "hn/harmonic.hpp"

namespace hn {

namespace {

// Sum of 1/k for k in [lo, hi], balanced to keep intermediate operands small.
Rat harmonic_range(unsigned long lo, unsigned long hi) {
  if (lo == hi) return Rat(1, lo);
  if (hi - lo == 1) {
    Rat a(1, lo), b(1, hi);
    return a + b;
  }
  unsigned long mid = lo + (hi - lo) / 2;
  return harmonic_range(lo, mid) + harmonic_range(mid + 1, hi);
}

}  // namespace

Rat harmonic_exact(unsigned long n) {
  if (n == 0) throw std::domain_error("harmonic number requires n >= 1");
  return harmonic_range(1, n);
}

}  // namespace hn
