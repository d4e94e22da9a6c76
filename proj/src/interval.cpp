#include "farey/interval.hpp"

#include "farey/error.hpp"

namespace farey {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo < 0 || hi > 1 || hi < lo)
    throw Error(Errc::InvalidArgument, "interval must satisfy 0 <= lo <= hi <= 1");
}

Interval parse_interval(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw Error(Errc::InvalidArgument, "interval must be 'a/b,c/d': " + std::string(text));
  return Interval(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

std::string format_interval(const Interval& i) {
  return "[" + format_rational(i.lo) + "," + format_rational(i.hi) + "]";
}

}  // namespace farey
