#pragma once

#include <string>
#include <string_view>

#include "farey/rational.hpp"

namespace farey {

// Closed subinterval [lo, hi] of [0,1]. lo == hi is allowed so that point
// conditions can be expressed; enumeration needs lo < hi only to be useful.
struct Interval {
  Rational lo = 0;
  Rational hi = 1;

  Interval() = default;
  Interval(Rational lo_, Rational hi_);

  static Interval unit() { return {}; }

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational length() const { return hi - lo; }
  bool is_unit() const { return lo == 0 && hi == 1; }
};

// "a/b,c/d" or decimals.
Interval parse_interval(std::string_view text);
std::string format_interval(const Interval& i);

}  // namespace farey
