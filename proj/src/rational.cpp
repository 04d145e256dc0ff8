#include "hn/rational.hpp"

#include <cctype>

namespace hn {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rat q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0)
      throw std::domain_error("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  auto dot = text.find('.');
  auto exp = text.find_first_of("eE");
  long e10 = 0;
  std::string digits = text;
  if (exp != std::string::npos) {
    e10 = std::stol(text.substr(exp + 1));
    digits = text.substr(0, exp);
    dot = digits.find('.');
  }
  if (dot != std::string::npos) {
    std::string mantissa = digits.substr(0, dot) + digits.substr(dot + 1);
    long frac = static_cast<long>(digits.size() - dot - 1);
    if (mantissa.empty() || mantissa == "-" || mantissa == "+")
      throw std::invalid_argument("bad rational literal: " + text);
    Rat q{Int(mantissa, 10)};  // explicit base (leading zeros are not octal)
    return Rat(q * pow10(e10 - frac));
  }
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad rational literal: " + text);
  return Rat(Rat(Int(digits, 10)) * pow10(e10));
}

Rat pow10(long k) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  Rat q(p);
  if (k < 0) q = 1 / q;
  return q;
}

Rat pow_rat(const Rat& q, long k) {
  if (k == 0) return Rat(1);
  if (q == 0 && k < 0) throw std::domain_error("0 raised to negative power");
  unsigned long a = static_cast<unsigned long>(k < 0 ? -k : k);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), a);
  if (k < 0) {
    Rat inv;
    mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
    return inv;
  }
  return r;
}

Rat round_down_dyadic(const Rat& q, unsigned long bits) {
  Int scaled_num = q.get_num() << bits;
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
  Rat r(f, Int(1) << bits);
  r.canonicalize();
  return r;
}

Rat round_up_dyadic(const Rat& q, unsigned long bits) {
  Int scaled_num = q.get_num() << bits;
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
  Rat r(c, Int(1) << bits);
  r.canonicalize();
  return r;
}

unsigned long bits_for_eps(const Rat& eps) {
  if (eps <= 0) throw std::domain_error("eps must be positive");
  Rat inv = 1 / eps;
  Int c = ceil_int(inv);
  return mpz_sizeinbase(c.get_mpz_t(), 2);
}

}  // namespace hn
