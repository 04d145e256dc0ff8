#include "hn/format.hpp"

namespace hn {

namespace {

std::string scaled_int_to_decimal(Int scaled, long places) {
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (places <= 0) return (neg ? "-" : "") + digits;
  if (static_cast<long>(digits.size()) <= places)
    digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
  digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
  return (neg ? "-" : "") + digits;
}

}  // namespace

std::string decimal_floor_string(const Rat& v, long places) {
  Rat scaled = v * pow10(places);
  return scaled_int_to_decimal(floor_int(scaled), places);
}

std::string exact_decimal(const Rat& v) {
  Int den = v.get_den();
  long places = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++places;
  }
  long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return {};
  if (fives > places) places = fives;
  Rat scaled = v * pow10(places);
  std::string s = scaled_int_to_decimal(floor_int(scaled), places);
  // Trim trailing zeros after the decimal point.
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::string render_interval(const Interval& iv, long places) {
  if (iv.lo() == iv.hi()) {
    std::string exact = exact_decimal(iv.lo());
    if (!exact.empty()) return exact;
  }
  std::string a = decimal_floor_string(iv.lo(), places);
  std::string b = decimal_floor_string(iv.hi(), places);
  if (a == b) return a;
  Rat half_width = iv.width() / 2;
  return decimal_floor_string(iv.mid(), places) + " ~ +/-" +
         decimal_floor_string(half_width, places + 4);
}

bool matches_printed_decimal(const Interval& enclosure, const Rat& printed,
                             long places) {
  Rat ulp = pow10(-places);
  return enclosure.lo() > printed - ulp && enclosure.hi() < printed + ulp;
}

}  // namespace hn
