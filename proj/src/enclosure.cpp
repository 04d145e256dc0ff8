#include "hn/enclosure.hpp"

#include <mutex>

#include "hn/harmonic.hpp"

namespace hn {

namespace {

// ln m via 2*atanh(t), t = (m-1)/(m+1), for m in (0, 3). Partial sums are
// outward-rounded to bound endpoint growth; the tail after the k-th odd power
// is bounded by 2|t|^(2k+3) / ((2k+3)(1 - t^2)).
Interval ln_series(const Rat& m, const Rat& eps) {
  Rat t = (m - 1) / (m + 1);
  if (t == 0) return Interval::point(Rat(0));
  Rat t2 = t * t;
  unsigned long bits = bits_for_eps(eps) + 16;
  Interval sum;
  Rat tp = t;  // t^(2k+1)
  Rat abs_t = t < 0 ? Rat(-t) : t;
  Rat abs_tp = abs_t;
  unsigned long k = 0;
  for (;;) {
    sum = (sum + Rat(2) * tp / Rat(2 * k + 1)).outward_round(bits);
    abs_tp *= t2;
    Rat tail = 2 * abs_tp / (Rat(2 * k + 3) * (1 - t2));
    if (tail * 4 <= eps) {
      return Interval(sum.lo() - tail, sum.hi() + tail);
    }
    tp *= t2;
    ++k;
  }
}

struct CachedInterval {
  std::mutex mu;
  bool valid = false;
  Interval value;
};

CachedInterval g_ln2;
CachedInterval g_gamma;

Interval gamma_compute(const Rat& eps);

}  // namespace

Interval ln2_enclosure(const Precision& prec) {
  std::lock_guard<std::mutex> lock(g_ln2.mu);
  if (!g_ln2.valid || g_ln2.value.width() > prec.eps) {
    g_ln2.value = ln_series(Rat(2), prec.eps);
    g_ln2.valid = true;
  }
  return g_ln2.value;
}

Interval ln_enclosure(const Rat& q, const Precision& prec) {
  if (q <= 0) throw std::domain_error("ln requires a positive argument");
  if (q == 1) return Interval::point(Rat(0));
  // Reduce into [3/4, 3/2) by powers of two.
  long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  Rat m = q * pow_rat(Rat(2), -e);
  const Rat lo_edge(3, 4), hi_edge(3, 2);
  while (m >= hi_edge) {
    m /= 2;
    ++e;
  }
  while (m < lo_edge) {
    m *= 2;
    --e;
  }
  if (e == 0) return ln_series(m, prec.eps);
  Rat series_eps = prec.eps / 2;
  long abs_e = e < 0 ? -e : e;
  Interval ln2 = ln2_enclosure(Precision(prec.eps / (2 * Rat(abs_e))));
  return ln_series(m, series_eps) + ln2 * Rat(e);
}

namespace {

// Smallest n with 1/(240 n^8) <= eps/2.
unsigned long euler_maclaurin_cutoff(const Rat& eps) {
  Rat target = 2 / (240 * eps);  // need n^8 >= target
  Int c = ceil_int(target);
  Int root;
  mpz_root(root.get_mpz_t(), c.get_mpz_t(), 8);
  unsigned long n = root.get_ui();
  if (n == 0) n = 1;
  while (Rat(1) / (240 * pow_rat(Rat(static_cast<long>(n)), 8)) > eps / 2) ++n;
  return n;
}

Interval gamma_compute(const Rat& eps) {
  unsigned long n = euler_maclaurin_cutoff(eps);
  Interval g = gamma_enclosure_at(n, Precision(eps * Rat(3, 8)));
  return g.outward_round(bits_for_eps(eps) + 5);
}

}  // namespace

Interval gamma_enclosure_at(unsigned long n, const Precision& ln_prec) {
  if (n == 0) throw std::domain_error("gamma expansion requires n >= 1");
  Rat nn(static_cast<long>(n));
  Rat expansion = harmonic_exact(n) - 1 / (2 * nn) + 1 / (12 * nn * nn) -
                  1 / (120 * pow_rat(nn, 4)) + 1 / (252 * pow_rat(nn, 6));
  Rat rem = 1 / (240 * pow_rat(nn, 8));
  return Interval::point(expansion) - ln_enclosure(nn, ln_prec) -
         Interval(Rat(0), rem);
}

Interval gamma_enclosure(const Precision& prec) {
  std::lock_guard<std::mutex> lock(g_gamma.mu);
  if (!g_gamma.valid || g_gamma.value.width() > prec.eps) {
    Rat eps = prec.eps;
    Interval g = gamma_compute(eps);
    while (g.width() > prec.eps) {
      eps /= 4;
      g = gamma_compute(eps);
    }
    g_gamma.value = g;
    g_gamma.valid = true;
  }
  return g_gamma.value;
}

Interval psi_enclosure(const Rat& x, const Precision& prec) {
  if (x <= 0) throw std::domain_error("psi requires a positive argument");
  Rat eps = prec.eps;
  for (;;) {
    unsigned long cutoff = euler_maclaurin_cutoff(eps);
    Rat y = x;
    unsigned long k = 0;
    if (y < static_cast<long>(cutoff))
      k = ceil_int(Rat(static_cast<long>(cutoff)) - x).get_ui();
    y = x + static_cast<long>(k);
    Rat expansion = 1 / (2 * y) - 1 / (12 * y * y) + 1 / (120 * pow_rat(y, 4)) -
                    1 / (252 * pow_rat(y, 6));
    Rat rem = 1 / (240 * pow_rat(y, 8));
    Rat shift(0);
    for (unsigned long j = 1; j <= k; ++j) shift += 1 / (x + Rat(static_cast<long>(j)));
    Interval psi = ln_enclosure(y, Precision(eps * Rat(3, 8))) +
                   Interval(expansion, expansion + rem) - shift;
    psi = psi.outward_round(bits_for_eps(eps) + 5);
    if (psi.width() <= prec.eps) return psi;
    eps /= 4;
  }
}

Interval psi_prime_enclosure(const Rat& x, const Precision& prec) {
  if (x <= 0) throw std::domain_error("psi' requires a positive argument");
  Rat eps = prec.eps;
  for (;;) {
    // Smallest y with 1/(30 y^9) <= eps.
    Int c = ceil_int(1 / (30 * eps));
    Int root;
    mpz_root(root.get_mpz_t(), c.get_mpz_t(), 9);
    unsigned long cutoff = root.get_ui() + 1;
    unsigned long k = 0;
    if (x < static_cast<long>(cutoff))
      k = ceil_int(Rat(static_cast<long>(cutoff)) - x).get_ui();
    Rat y = x + static_cast<long>(k);
    Rat expansion = 1 / y - 1 / (2 * y * y) + 1 / (6 * pow_rat(y, 3)) -
                    1 / (30 * pow_rat(y, 5)) + 1 / (42 * pow_rat(y, 7));
    Rat rem = 1 / (30 * pow_rat(y, 9));
    Rat shift(0);
    for (unsigned long j = 1; j <= k; ++j) {
      Rat d = x + Rat(static_cast<long>(j));
      shift += 1 / (d * d);
    }
    Interval psi1 = Interval(expansion - rem, expansion) + shift;
    psi1 = psi1.outward_round(bits_for_eps(eps) + 5);
    if (psi1.width() <= prec.eps) return psi1;
    eps /= 4;
  }
}

Interval psi_series_oracle(const Rat& x, unsigned long N) {
  if (x <= 0) throw std::domain_error("psi series requires x > 0");
  if (N == 0) throw std::domain_error("psi series requires N >= 1");
  Rat tail_hi = x / Rat(static_cast<long>(N));
  Rat tail_lo = x / (Rat(static_cast<long>(N)) + x + 1);
  Rat tail_width = tail_hi - tail_lo;
  unsigned long bits =
      bits_for_eps(tail_width / (4 * Rat(static_cast<long>(N)))) + 8;
  Interval sum;
  for (unsigned long n = 1; n <= N; ++n) {
    Rat nn(static_cast<long>(n));
    sum = (sum + 1 / (nn * (x + nn))).outward_round(bits);
  }
  Interval gamma = gamma_enclosure(Precision(tail_width / 4));
  return -gamma - Interval::point(1 / x) + Interval::point(x) * sum +
         Interval(tail_lo, tail_hi);
}

}  // namespace hn
