#include "hn/rational_function.hpp"

namespace hn {

namespace {

// Least common multiple of the coefficient denominators.
Int coeff_den_lcm(const Polynomial& p, Int acc) {
  for (const Rat& c : p.coeffs()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
  return acc;
}

Int coeff_num_gcd(const Polynomial& p, Int acc) {
  for (const Rat& c : p.coeffs()) mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.get_num_mpz_t());
  return acc;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rat(1));
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divrem(num_, g).first;
    den_ = poly_divrem(den_, g).first;
  }
  // Scale to a primitive integer pair with positive leading den coefficient.
  Int lcm = coeff_den_lcm(num_, coeff_den_lcm(den_, Int(1)));
  num_ = num_.scaled(Rat(lcm));
  den_ = den_.scaled(Rat(lcm));
  Int gcd = coeff_num_gcd(num_, coeff_num_gcd(den_, Int(0)));
  if (gcd > 1) {
    Rat inv{Int(1), gcd};
    inv.canonicalize();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rat RationalFunction::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw std::domain_error("rational function pole at " + x.get_str());
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::to_string(const std::string& var) const {
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RationalFunction ratfun_combine(
    const std::vector<std::pair<RationalFunction, int>>& terms) {
  RationalFunction acc;
  for (const auto& [f, sign] : terms) {
    if (sign >= 0)
      acc = acc + f;
    else
      acc = acc - f;
  }
  return acc;
}

}  // namespace hn
