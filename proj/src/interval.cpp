#include "hn/interval.hpp"

#include <algorithm>

namespace hn {

Interval::Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
}

Interval operator*(const Interval& a, const Interval& b) {
  Rat p1 = a.lo_ * b.lo_;
  Rat p2 = a.lo_ * b.hi_;
  Rat p3 = a.hi_ * b.lo_;
  Rat p4 = a.hi_ * b.hi_;
  return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator*(const Interval& a, const Rat& b) {
  if (b >= 0) return Interval(a.lo_ * b, a.hi_ * b);
  return Interval(a.hi_ * b, a.lo_ * b);
}

Interval Interval::reciprocal() const {
  if (contains_zero())
    throw std::domain_error("reciprocal of interval containing zero");
  return Interval(1 / hi_, 1 / lo_);
}

Interval operator/(const Interval& a, const Interval& b) {
  return a * b.reciprocal();
}

Interval interval_arith(const Interval& a, const Interval& b, IntervalOp op) {
  switch (op) {
    case IntervalOp::add:
      return a + b;
    case IntervalOp::sub:
      return a - b;
    case IntervalOp::mul:
      return a * b;
    case IntervalOp::div:
      return a / b;
    case IntervalOp::reciprocal:
      return a.reciprocal();
  }
  throw std::logic_error("unknown interval op");
}

}  // namespace hn
