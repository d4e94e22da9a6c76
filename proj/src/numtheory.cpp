#include "farey/numtheory.hpp"

#include <cmath>
#include <numeric>
#include <numbers>

#include "farey/error.hpp"

namespace farey {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 2) throw Error(Errc::InvalidModulus, "modulus must be >= 2");
  std::int64_t r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw Error(Errc::NotInvertible, "gcd(a, m) != 1");
  t0 %= m;
  return t0 < 0 ? t0 + m : t0;
}

MobiusTable::MobiusTable(std::int64_t limit) {
  if (limit < 1) throw Error(Errc::InvalidArgument, "Mobius table needs N >= 1");
  std::size_t n = static_cast<std::size_t>(limit);
  mu_.assign(n + 1, 1);
  mu_[0] = 0;
  std::vector<bool> composite(n + 1, false);
  std::vector<std::size_t> primes;
  // linear sieve
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu_[i] = -1;
    }
    for (std::size_t p : primes) {
      std::size_t ip = i * p;
      if (ip > n) break;
      composite[ip] = true;
      if (i % p == 0) {
        mu_[ip] = 0;
        break;
      }
      mu_[ip] = static_cast<std::int8_t>(-mu_[i]);
    }
  }
}

std::vector<int> MobiusTable::values() const {
  return std::vector<int>(mu_.begin() + 1, mu_.end());
}

MobiusTable mobius_table(std::int64_t limit) { return MobiusTable(limit); }

namespace {

bool parity_ok(std::int64_t v, Parity p) { return ((v & 1) == 0) == (p == Parity::Even); }

// Calls fn(x_lo, x_hi, y) for each integer row of the closure, with the exact
// integer x-range; endpoints are re-tested against strict lines by the caller.
template <class Fn>
void for_each_row(const ConvexPolygon& region, Fn&& fn) {
  if (region.closure_empty()) return;
  const auto& v = region.vertices();
  std::int64_t y0 = to_int64(ceil_of(region.min_y()));
  std::int64_t y1 = to_int64(floor_of(region.max_y()));
  for (std::int64_t y = y0; y <= y1; ++y) {
    Rational Y(static_cast<long>(y));
    bool have = false;
    Rational lo, hi;
    auto take = [&](const Rational& x) {
      if (!have) {
        lo = hi = x;
        have = true;
      } else {
        if (x < lo) lo = x;
        if (x > hi) hi = x;
      }
    };
    std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = v[i];
      const auto& q = v[(i + 1) % n];
      if (p.y == Y) take(p.x);
      if ((p.y < Y && Y < q.y) || (q.y < Y && Y < p.y))
        take(p.x + (Y - p.y) * (q.x - p.x) / (q.y - p.y));
    }
    if (!have) continue;
    std::int64_t xl = to_int64(ceil_of(lo));
    std::int64_t xh = to_int64(floor_of(hi));
    if (xl <= xh) fn(xl, xh, y);
  }
}

bool on_strict_row(const ConvexPolygon& region, std::int64_t y) {
  for (const auto& h : region.strict_lines())
    if (h.a == 0 && h.b * y + h.c == 0) return true;
  return false;
}

template <class Accept>
std::int64_t count_rows(const ConvexPolygon& region, Accept&& accept) {
  std::int64_t total = 0;
  for_each_row(region, [&](std::int64_t xl, std::int64_t xh, std::int64_t y) {
    if (on_strict_row(region, y)) return;
    bool check_l = !region.strict_lines().empty();
    for (std::int64_t x = xl; x <= xh; ++x) {
      if (!accept(x, y)) continue;
      if (check_l && (x == xl || x == xh) &&
          !region.contains({Rational(static_cast<long>(x)), Rational(static_cast<long>(y))}))
        continue;
      ++total;
    }
  });
  return total;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace

LatticeCount count_parity_coprime(const ConvexPolygon& region, ParityPair parity) {
  LatticeCount out;
  out.count = count_rows(region, [&](std::int64_t x, std::int64_t y) {
    return parity_ok(x, parity.x) && parity_ok(y, parity.y) && gcd64(x, y) == 1;
  });
  out.main_term = 2.0 * to_double(area(region)) / (std::numbers::pi * std::numbers::pi);
  return out;
}

std::int64_t count_coprime(const ConvexPolygon& region) {
  return count_rows(region, [](std::int64_t x, std::int64_t y) { return gcd64(x, y) == 1; });
}

LatticeCount constrained_count(const ConvexPolygon& region, const Interval& interval) {
  LatticeCount out;
  using i128 = __int128;
  i128 ln = to_int64(interval.lo.get_num()), ld = to_int64(interval.lo.get_den());
  i128 hn = to_int64(interval.hi.get_num()), hd = to_int64(interval.hi.get_den());
  out.count = count_rows(region, [&](std::int64_t x, std::int64_t y) {
    if ((x & 1) != 0 || (y & 1) == 0 || gcd64(x, y) != 1) return false;
    i128 inv = y == 1 ? 0 : mod_inverse(x, y);
    return y * ln <= inv * ld && inv * hd <= y * hn;
  });
  out.main_term = to_double(interval.length()) * 2.0 * to_double(area(region)) /
                  (std::numbers::pi * std::numbers::pi);
  return out;
}

}  // namespace farey
