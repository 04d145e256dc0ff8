#include "hn/approx.hpp"

#include <functional>
#include <stdexcept>

#include "hn/harmonic.hpp"

namespace hn {

namespace {

// Runs compute at a trial inner precision and tightens multiplicatively until
// the result meets the requested width. The reciprocal of a near-zero
// quantity is the dominant width amplifier, so the first trial usually lands
// within a factor of the goal and one correction suffices.
Interval refine_to_width(const Rat& eps, const Rat& inner_start,
                         const std::function<Interval(const Rat&)>& compute) {
  Rat inner = inner_start;
  for (int round = 0; round < 64; ++round) {
    Interval r = compute(inner);
    if (r.width() <= eps) return r;
    inner = inner * eps / (4 * r.width());
  }
  throw std::runtime_error("enclosure refinement did not converge");
}

Rat half() { return Rat(1, 2); }

// ln sqrt(n(n+1)) = ln(n(n+1)) / 2.
Interval ln_sqrt_m(unsigned long n, const Precision& prec) {
  Rat m = Rat(static_cast<long>(n)) * Rat(static_cast<long>(n) + 1);
  return ln_enclosure(m, Precision(prec.eps * 2)) * half();
}

Rat toth_mare_den(unsigned long n) {
  return 2 * Rat(static_cast<long>(n)) + Rat(1, 3);
}

Rat lodge_ramanujan_den(unsigned long n) {
  Rat m = Rat(static_cast<long>(n)) * Rat(static_cast<long>(n) + 1);
  return 6 * m + Rat(6, 5);
}

Rat detemple_wang_den(unsigned long n) {
  Rat y = Rat(static_cast<long>(n)) + half();
  return 24 * y * y + Rat(21, 5);
}

}  // namespace

Interval approx_value(unsigned long n, ApproxMethod m, const Precision& prec) {
  if (n == 0) throw std::domain_error("approximation requires n >= 1");
  return refine_to_width(prec.eps, prec.eps / 4, [&](const Rat& inner) {
    Precision p(inner / 2);
    Interval gamma = gamma_enclosure(p);
    switch (m) {
      case ApproxMethod::TothMare:
        return ln_enclosure(Rat(static_cast<long>(n)), p) + gamma +
               Interval::point(1 / toth_mare_den(n));
      case ApproxMethod::LodgeRamanujan:
        return ln_sqrt_m(n, p) + gamma +
               Interval::point(1 / lodge_ramanujan_den(n));
      case ApproxMethod::DeTempleWang:
        return ln_enclosure(Rat(static_cast<long>(n)) + half(), p) + gamma +
               Interval::point(1 / detemple_wang_den(n));
    }
    throw std::logic_error("unknown approximation method");
  });
}

Interval sharp_constant(Theorem t, const Precision& prec) {
  // Each constant is 1/u - c where u is the n = 1 residual; the reciprocal
  // amplifies width by roughly 1/u^2.
  Rat start;
  switch (t) {
    case Theorem::Thm1:
      start = prec.eps / 32;
      break;
    case Theorem::Thm2:
      start = prec.eps / 1024;
      break;
    case Theorem::Thm3:
      start = prec.eps / 16384;
      break;
  }
  return refine_to_width(prec.eps, start, [&](const Rat& inner) {
    Precision p(inner / 2);
    Interval gamma = gamma_enclosure(p);
    switch (t) {
      case Theorem::Thm1: {
        Interval u = Interval::point(Rat(1)) - gamma;
        return u.reciprocal() - Rat(2);
      }
      case Theorem::Thm2: {
        Interval u = Interval::point(Rat(1)) - gamma -
                     ln2_enclosure(p) * half();
        return u.reciprocal() - Rat(12);
      }
      case Theorem::Thm3: {
        Interval u = Interval::point(Rat(1)) - gamma -
                     ln_enclosure(Rat(3, 2), p);
        return u.reciprocal() - Rat(54);
      }
    }
    throw std::logic_error("unknown theorem");
  });
}

Interval theorem_target(unsigned long n, Theorem t, const Precision& prec) {
  return theorem_target_with_h(n, harmonic_exact(n), t, prec);
}

Interval theorem_target_with_h(unsigned long n, const Rat& h, Theorem t,
                               const Precision& prec) {
  if (n == 0) throw std::domain_error("theorem target requires n >= 1");
  Precision p(prec.eps * Rat(2, 5));
  Interval gamma = gamma_enclosure(p);
  Interval log_term;
  switch (t) {
    case Theorem::Thm1:
      log_term = ln_enclosure(Rat(static_cast<long>(n)), p);
      break;
    case Theorem::Thm2:
      log_term = ln_sqrt_m(n, p);
      break;
    case Theorem::Thm3:
      log_term = ln_enclosure(Rat(static_cast<long>(n)) + half(), p);
      break;
  }
  Interval target = Interval::point(h) - log_term - gamma;
  return target.outward_round(bits_for_eps(prec.eps) + 8);
}

BoundPair sharp_bounds(unsigned long n, Theorem t, const Precision& prec) {
  if (n == 0) throw std::domain_error("bounds require n >= 1");
  BoundPair pair;
  pair.equality_at_one = (n == 1);
  auto constant_side = [&](const Rat& base) {
    return refine_to_width(prec.eps, prec.eps / 4, [&](const Rat& inner) {
      Interval c = sharp_constant(t, Precision(inner));
      return (Interval::point(base) + c).reciprocal();
    });
  };
  switch (t) {
    case Theorem::Thm1:
      // 1/(2n + C1) <= H_n - ln n - gamma < 1/(2n + 1/3), equality below.
      pair.lower = constant_side(2 * Rat(static_cast<long>(n)));
      pair.upper = Interval::point(1 / toth_mare_den(n));
      pair.equality_side = BoundSide::Lower;
      break;
    case Theorem::Thm2:
      pair.lower = Interval::point(1 / lodge_ramanujan_den(n));
      pair.upper = constant_side(6 * Rat(static_cast<long>(n)) *
                                 Rat(static_cast<long>(n) + 1));
      pair.equality_side = BoundSide::Upper;
      break;
    case Theorem::Thm3: {
      Rat y = Rat(static_cast<long>(n)) + half();
      pair.lower = Interval::point(1 / detemple_wang_den(n));
      pair.upper = constant_side(24 * y * y);
      pair.equality_side = BoundSide::Upper;
      break;
    }
  }
  return pair;
}

namespace {

// 1/(H_n - log term - gamma) - subtrahend, with the inner width chosen
// adaptively: the reciprocal multiplies width by about 1/t^2 where t is the
// residual, so the first trial scales eps by the squared denominator size.
Interval correction_impl(unsigned long n, const Rat& h, Theorem t,
                         const Rat& subtrahend, const Precision& prec) {
  Rat scale = (subtrahend + 1) * (subtrahend + 1);
  return refine_to_width(prec.eps, prec.eps / (4 * scale),
                         [&](const Rat& inner) {
                           Interval target =
                               theorem_target_with_h(n, h, t, Precision(inner));
                           return target.reciprocal() - subtrahend;
                         });
}

}  // namespace

Interval correction_f_with_h(unsigned long n, const Rat& h,
                             const Precision& prec) {
  return correction_impl(n, h, Theorem::Thm1, 2 * Rat(static_cast<long>(n)),
                         prec);
}

Interval correction_lambda_with_h(unsigned long n, const Rat& h,
                                  const Precision& prec) {
  Rat m = Rat(static_cast<long>(n)) * Rat(static_cast<long>(n) + 1);
  return correction_impl(n, h, Theorem::Thm2, 6 * m, prec);
}

Interval correction_d_with_h(unsigned long n, const Rat& h,
                             const Precision& prec) {
  Rat y = Rat(static_cast<long>(n)) + half();
  return correction_impl(n, h, Theorem::Thm3, 24 * y * y, prec);
}

Interval correction_f(unsigned long n, const Precision& prec) {
  return correction_f_with_h(n, harmonic_exact(n), prec);
}

Interval correction_lambda(unsigned long n, const Precision& prec) {
  return correction_lambda_with_h(n, harmonic_exact(n), prec);
}

Interval correction_d(unsigned long n, const Precision& prec) {
  return correction_d_with_h(n, harmonic_exact(n), prec);
}

Interval lambda_cont(const Rat& x, const Precision& prec) {
  if (x <= 0) throw std::domain_error("Lambda_x requires x > 0");
  Rat q = 3 * x * (x + 1);
  Rat scale = (2 * q + 1) * (2 * q + 1);
  return refine_to_width(prec.eps, prec.eps / (4 * scale),
                         [&](const Rat& inner) {
                           Precision p(inner / 4);
                           Interval u = psi_enclosure(x, p) * Rat(2) -
                                        ln_enclosure(x * (x + 1), p);
                           return u.reciprocal() - q;
                         });
}

Interval d_cont(const Rat& x, const Precision& prec) {
  if (x <= 0) throw std::domain_error("d_x requires x > 0");
  Rat y = x + half();
  Rat q = 24 * y * y;
  Rat scale = (q + 1) * (q + 1);
  return refine_to_width(prec.eps, prec.eps / (4 * scale),
                         [&](const Rat& inner) {
                           Precision p(inner / 4);
                           Interval u =
                               psi_enclosure(x, p) - ln_enclosure(y, p);
                           return u.reciprocal() - q;
                         });
}

Interval error_order_product(unsigned long n, ApproxMethod m,
                             const Precision& prec) {
  if (n == 0) throw std::domain_error("error order requires n >= 1");
  Rat h = harmonic_exact(n);
  Rat nn(static_cast<long>(n));
  Rat factor;
  bool approx_minus_h = false;
  switch (m) {
    case ApproxMethod::TothMare:
      factor = 72 * pow_rat(nn, 3);
      approx_minus_h = true;  // Toth-Mare lies above H_n
      break;
    case ApproxMethod::LodgeRamanujan:
      factor = Rat(3150, 19) * pow_rat(nn * (nn + 1), 3);
      break;
    case ApproxMethod::DeTempleWang:
      factor = Rat(806400, 2071) * pow_rat(nn + half(), 6);
      break;
  }
  return refine_to_width(prec.eps, prec.eps / (4 * factor),
                         [&](const Rat& inner) {
                           Interval a = approx_value(n, m, Precision(inner));
                           Interval diff = approx_minus_h
                                               ? a - Interval::point(h)
                                               : Interval::point(h) - a;
                           return diff * factor;
                         });
}

}  // namespace hn
