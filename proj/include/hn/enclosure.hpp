#pragma once

#include "hn/interval.hpp"

namespace hn {

// Target maximum width for enclosure results.
struct Precision {
  Rat eps;

  explicit Precision(Rat e) : eps(std::move(e)) {
    if (eps <= 0) throw std::domain_error("precision eps must be positive");
  }
  static Precision decimal(long digits) { return Precision(pow10(-digits)); }
};

// Enclosure of ln q for q > 0, width <= prec.eps.
// atanh series after reduction by powers of 2: q = m * 2^e with m in
// [3/4, 3/2), ln m = 2*atanh((m-1)/(m+1)) with a geometric tail bound.
Interval ln_enclosure(const Rat& q, const Precision& prec);

// Cached enclosure of ln 2 (write-once per refinement level, read-shared).
Interval ln2_enclosure(const Precision& prec);

// Enclosure of Euler's constant, width <= prec.eps, from
// gamma = H_n - ln n - 1/(2n) + 1/(12n^2) - 1/(120n^4) + 1/(252n^6)
//         - theta/(240n^8), theta in (0,1),
// with n chosen so 1/(240n^8) <= eps/2 and eps/2 budgeted for ln n.
Interval gamma_enclosure(const Precision& prec);

// The gamma expansion pinned at a specific n (remainder width 1/(240n^8) plus
// the ln n enclosure width). Enclosures at different n must overlap; that
// agreement is used as a self-consistency oracle.
Interval gamma_enclosure_at(unsigned long n, const Precision& ln_prec);

// Enclosure of Psi(x+1) for x > 0 (the paper's Lemma 1 variable), width <=
// prec.eps. Small x is handled by the recurrence
// Psi(x+1) = Psi(x+k+1) - sum_{j=1..k} 1/(x+j).
Interval psi_enclosure(const Rat& x, const Precision& prec);

// Enclosure of Psi'(x+1) for x > 0, width <= prec.eps, via
// Psi'(x+1) = Psi'(x+k+1) + sum_{j=1..k} 1/(x+j)^2.
Interval psi_prime_enclosure(const Rat& x, const Precision& prec);

// Independent oracle for Psi(x) (note: x, not x+1) from the series
// Psi(x) = -gamma - 1/x + x * sum_{n>=1} 1/(n(x+n)),
// truncated at N. The positive monotone tail x*sum_{n>N} 1/(n(x+n)) is
// bracketed by integral comparison:
//   upper: 1/(n(x+n)) < 1/n^2 and sum_{n>N} 1/n^2 < 1/N gives tail < x/N;
//   lower: 1/(n(x+n)) > 1/(x+n)^2 and sum_{n>N} 1/(x+n)^2 >
//          int_{N+1}^inf dt/(t+x)^2 = 1/(N+x+1) gives tail > x/(N+x+1).
Interval psi_series_oracle(const Rat& x, unsigned long N);

}  // namespace hn
