#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hn {

// Exact arbitrary-precision integers and rationals. mpq_class keeps the
// canonical-form invariants for us: denominator > 0 and gcd(|num|, den) = 1
// after every operation.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q", or a plain decimal like "-1.25".
Rat parse_rational(const std::string& text);

inline std::string to_string(const Rat& q) {
  return q.get_str();
}

// 10^k as an exact rational, k may be negative.
Rat pow10(long k);

// q^k for integer k (k < 0 requires q != 0).
Rat pow_rat(const Rat& q, long k);

inline Int floor_int(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil_int(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Largest multiple of 2^-bits that is <= q.
Rat round_down_dyadic(const Rat& q, unsigned long bits);
// Smallest multiple of 2^-bits that is >= q.
Rat round_up_dyadic(const Rat& q, unsigned long bits);

// Number of bits needed so that 2^-bits <= eps; eps must be positive.
unsigned long bits_for_eps(const Rat& eps);

}  // namespace hn
