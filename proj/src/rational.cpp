#include "farey/rational.hpp"

#include <cmath>
#include <cstdio>

#include "farey/error.hpp"

namespace farey {

Rational rat(std::int64_t p, std::int64_t q) {
  if (q == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rational r(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(Errc::InvalidArgument, "not an integer: " + std::string(s));
  BigInt z(std::string(s), 10);
  return neg ? BigInt(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::InvalidArgument, "empty rational");
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    BigInt p = parse_integer(text.substr(0, slash));
    BigInt q = parse_integer(text.substr(slash + 1));
    if (q == 0) throw Error(Errc::InvalidArgument, "zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_integer(text));
  std::string_view ip = text.substr(0, dot);
  std::string_view fp = text.substr(dot + 1);
  bool neg = !ip.empty() && ip[0] == '-';
  if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
  if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
      (!fp.empty() && !all_digits(fp)))
    throw Error(Errc::InvalidArgument, "not a decimal: " + std::string(text));
  BigInt num(ip.empty() ? std::string("0") : std::string(ip), 10);
  BigInt den = 1;
  for (char c : fp) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(neg ? BigInt(-num) : num, den);
  r.canonicalize();
  return r;
}

BigInt floor_of(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt ceil_of(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool fits_int64(const BigInt& z) {
  static const BigInt lo("-9223372036854775808", 10);
  static const BigInt hi("9223372036854775807", 10);
  return z >= lo && z <= hi;
}

std::int64_t to_int64(const BigInt& z) {
  if (!fits_int64(z)) throw Error(Errc::Overflow, "integer exceeds 64 bits: " + z.get_str());
  if (z.fits_slong_p()) return z.get_si();
  // long is 32-bit on some ABIs; go through the string form.
  return std::stoll(z.get_str());
}

double to_double(const Rational& r) { return r.get_d(); }

std::string format_decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace farey
