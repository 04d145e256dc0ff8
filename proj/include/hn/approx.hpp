#pragma once

#include "hn/enclosure.hpp"

namespace hn {

enum class ApproxMethod { TothMare, LodgeRamanujan, DeTempleWang };
enum class Theorem { Thm1, Thm2, Thm3 };

// Which side of the theorem's bound pair is attained at n = 1. The n=1
// constant of Theorem 1 (f_1) sits in the lower bound; for Theorems 2 and 3
// the sequence constants (lambda_1, d_1) sit in the numerically larger side.
enum class BoundSide { Lower, Upper };

struct BoundPair {
  Interval lower;
  Interval upper;
  bool equality_at_one = false;
  BoundSide equality_side = BoundSide::Lower;
};

// Enclosure of the chosen approximation formula at n, width <= prec.eps:
//   TothMare:       ln n + gamma + 1/(2n + 1/3)
//   LodgeRamanujan: ln sqrt(n(n+1)) + gamma + 1/(6n(n+1) + 6/5)
//   DeTempleWang:   ln(n + 1/2) + gamma + 1/(24(n+1/2)^2 + 21/5)
Interval approx_value(unsigned long n, ApproxMethod m, const Precision& prec);

// Best constants, built structurally from the n = 1 identity (the value that
// makes the approximation exact at n = 1):
//   Thm1: 1/(1 - gamma) - 2
//   Thm2: 1/(1 - gamma - (ln 2)/2) - 12
//   Thm3: 1/(1 - ln(3/2) - gamma) - 54
Interval sharp_constant(Theorem t, const Precision& prec);

// Enclosures of both sides of the theorem's two-sided bound at n. The target
// quantity for containment checks is theorem_target below.
BoundPair sharp_bounds(unsigned long n, Theorem t, const Precision& prec);

// The bounded quantity: H_n - ln n - gamma (Thm1), H_n - ln sqrt(n(n+1)) -
// gamma (Thm2), H_n - ln(n+1/2) - gamma (Thm3, per the corrected Eq. form).
Interval theorem_target(unsigned long n, Theorem t, const Precision& prec);
Interval theorem_target_with_h(unsigned long n, const Rat& h, Theorem t,
                               const Precision& prec);

// Correction sequences (H_n exact):
//   f_n      = 1/(H_n - ln n - gamma) - 2n                       (decreasing)
//   lambda_n = 1/(H_n - ln sqrt(n(n+1)) - gamma) - 6n(n+1)       (increasing)
//   d_n      = 1/(H_n - ln(n+1/2) - gamma) - 24(n+1/2)^2         (increasing)
Interval correction_f(unsigned long n, const Precision& prec);
Interval correction_lambda(unsigned long n, const Precision& prec);
Interval correction_d(unsigned long n, const Precision& prec);

// Variants taking a precomputed exact H_n, for incremental sweeps.
Interval correction_f_with_h(unsigned long n, const Rat& h,
                             const Precision& prec);
Interval correction_lambda_with_h(unsigned long n, const Rat& h,
                                  const Precision& prec);
Interval correction_d_with_h(unsigned long n, const Rat& h,
                             const Precision& prec);

// Continuous versions for real x > 0:
//   Lambda_x = 1/(2 Psi(x+1) - ln x(x+1)) - 3x(x+1), with 2 Lambda_n = lambda_n
//   d_x      = 1/(Psi(x+1) - ln(x+1/2)) - 24(x+1/2)^2
Interval lambda_cont(const Rat& x, const Precision& prec);
Interval d_cont(const Rat& x, const Precision& prec);

// Normalized leading error, expected to approach 1 as n grows. Orientation
// follows the exact arithmetic (Theorems 1-3), not the narrative labels:
// the Toth-Mare formula overestimates H_n, the other two underestimate.
//   TothMare:       (approx - H_n) * 72 n^3
//   LodgeRamanujan: (H_n - approx) * 3150 [n(n+1)]^3 / 19
//   DeTempleWang:   (H_n - approx) * 806400 (n+1/2)^6 / 2071
Interval error_order_product(unsigned long n, ApproxMethod m,
                             const Precision& prec);

}  // namespace hn
