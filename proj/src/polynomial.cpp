#include "hn/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hn {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) {
  trim();
}

Polynomial Polynomial::constant(const Rat& c) {
  return Polynomial({c});
}

Polynomial Polynomial::monomial(const Rat& c, std::size_t k) {
  if (c == 0) return Polynomial();
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_longs(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Polynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rat> v(coeffs_);
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rat& c) const {
  if (c == 0) return Polynomial();
  std::vector<Rat> v(coeffs_);
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rat a = c;
    if (!first)
      out << (c < 0 ? " - " : " + ");
    else if (c < 0)
      out << "-";
    if (c < 0) a = -c;
    first = false;
    bool unit = (a == 1) && k > 0;
    if (!unit) out << a.get_str();
    if (k > 0) {
      if (!unit) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a,
                                              const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rat> rem(a.coeffs());
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                        Rat(0));
  const Rat lead = b.leading();
  const long db = b.degree();
  for (long k = a.degree(); k >= db; --k) {
    Rat c = rem[static_cast<std::size_t>(k)] / lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -=
          c * b.coeff(static_cast<std::size_t>(j));
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_taylor_shift(const Polynomial& p, const Rat& a) {
  if (p.is_zero() || a == 0) return p;
  // Write p(y) = sum q_k (y - a)^k; the q_k are successive remainders of
  // division by (y - a). Then p(x + a) = sum q_k x^k.
  Polynomial divisor({-a, Rat(1)});
  std::vector<Rat> shifted;
  Polynomial cur = p;
  while (!cur.is_zero()) {
    auto [q, r] = poly_divrem(cur, divisor);
    shifted.push_back(r.coeff(0));
    cur = q;
  }
  return Polynomial(std::move(shifted));
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = poly_divrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading());
}

bool poly_divides(const Polynomial& b, const Polynomial& a) {
  auto [q, r] = poly_divrem(a, b);
  (void)q;
  return r.is_zero();
}

}  // namespace hn
