#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hn/polynomial.hpp"

namespace hn {

// Quotient of two polynomials in canonical form: gcd(num, den) = 1, both with
// integer primitive coefficients as a pair, den with positive leading
// coefficient. This reproduces printed forms like 1071x^6+.../66150x^7(x+1)^6
// coefficient-for-coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(Rat(1))) {}
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction from_poly(Polynomial p) {
    return RationalFunction(std::move(p), Polynomial::constant(Rat(1)));
  }
  // c / p
  static RationalFunction reciprocal_of(const Rat& c, Polynomial p) {
    return RationalFunction(Polynomial::constant(c), std::move(p));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Exact value num(x)/den(x); throws std::domain_error at a pole.
  Rat eval(const Rat& x) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);

  bool operator==(const RationalFunction& other) const = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

// Exact signed sum of terms over a common denominator, in canonical form.
RationalFunction ratfun_combine(
    const std::vector<std::pair<RationalFunction, int>>& terms);

}  // namespace hn
