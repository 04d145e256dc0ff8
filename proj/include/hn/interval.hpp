#pragma once

#include <string>

#include "hn/rational.hpp"

namespace hn {

// Closed interval with exact rational endpoints. Arithmetic is exact (no
// rounding); outward_round is the only widening step and is always outward,
// so containment of the enclosed real value is preserved everywhere.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(Rat lo, Rat hi);

  static Interval point(const Rat& v) { return Interval(v, v); }

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat mid() const { return (lo_ + hi_) / 2; }

  bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool intersects(const Interval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }
  bool contains_zero() const { return contains(Rat(0)); }
  // Strictly positive / negative as a set.
  bool is_positive() const { return lo_ > 0; }
  bool is_negative() const { return hi_ < 0; }
  // Entirely below the other interval (strict separation).
  bool strictly_below(const Interval& other) const { return hi_ < other.lo_; }

  Interval operator-() const { return Interval(-hi_, -lo_); }
  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator+(const Interval& a, const Rat& b) {
    return Interval(a.lo_ + b, a.hi_ + b);
  }
  friend Interval operator-(const Interval& a, const Rat& b) {
    return Interval(a.lo_ - b, a.hi_ - b);
  }
  friend Interval operator*(const Interval& a, const Rat& b);

  // [1/hi, 1/lo]; throws std::domain_error if the interval contains 0.
  Interval reciprocal() const;

  // Endpoints moved outward to multiples of 2^-bits, bounding bit growth.
  Interval outward_round(unsigned long bits) const {
    return Interval(round_down_dyadic(lo_, bits), round_up_dyadic(hi_, bits));
  }

  std::string to_string() const {
    return "[" + lo_.get_str() + ", " + hi_.get_str() + "]";
  }

 private:
  Rat lo_, hi_;
};

enum class IntervalOp { add, sub, mul, div, reciprocal };

// Dispatch form used by the CLI and tests; b is ignored for reciprocal.
Interval interval_arith(const Interval& a, const Interval& b, IntervalOp op);

}  // namespace hn
