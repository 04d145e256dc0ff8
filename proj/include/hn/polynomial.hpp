#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hn/rational.hpp"

namespace hn {

// Dense univariate polynomial with exact rational coefficients.
// coeffs_[k] is the coefficient of x^k. The zero polynomial is the empty
// coefficient sequence; every constructor trims trailing zeros so this is
// the single canonical representation.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs);
  Polynomial(std::initializer_list<Rat> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rat& c);
  // c * x^k
  static Polynomial monomial(const Rat& c, std::size_t k);
  // Ascending coefficients c0 + c1 x + ... given as longs, for test brevity.
  static Polynomial from_longs(std::initializer_list<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
  }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  Rat eval(const Rat& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rat& c) const;

  bool operator==(const Polynomial& other) const = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// Exact division with remainder: a = b*q + r, deg r < deg b.
// Throws std::domain_error if b is zero.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a,
                                              const Polynomial& b);

// q with q(x) = p(x + a), by repeated synthetic division by (x - a).
Polynomial poly_taylor_shift(const Polynomial& p, const Rat& a);

// Monic gcd (or zero if both inputs are zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// True iff b divides a exactly (b nonzero).
bool poly_divides(const Polynomial& b, const Polynomial& a);

}  // namespace hn
