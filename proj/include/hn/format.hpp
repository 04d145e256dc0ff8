#pragma once

#include <string>

#include "hn/interval.hpp"

namespace hn {

// Decimal string of floor(v * 10^places) / 10^places. With k printed places
// the string D asserts v in [D, D + 10^-k); truncation (not rounding) keeps
// that cell semantics exact for either sign.
std::string decimal_floor_string(const Rat& v, long places);

// Exact finite decimal if the denominator is of the form 2^a 5^b, otherwise
// empty.
std::string exact_decimal(const Rat& v);

// Enclosure-faithful rendering: the truncated digits common to both
// endpoints when they agree at this precision (the interval then lies inside
// the printed decimal cell), else "mid ~ +/-halfwidth".
std::string render_interval(const Interval& iv, long places);

// True iff the enclosure lies within one unit-in-the-last-place of the
// printed decimal value (printed has 10^-places resolution). Accommodates
// tables printed with either truncated or rounded last digits.
bool matches_printed_decimal(const Interval& enclosure, const Rat& printed,
                             long places);

}  // namespace hn
