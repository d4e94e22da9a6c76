#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include "farey/interval.hpp"

namespace farey {

// Orders above this bound are rejected so that k*q and cross products stay
// well inside 64 bits (k*q <= 2Q, a*q <= Q^2).
inline constexpr std::int64_t kMaxOrder = 1'000'000'000;

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool anchor = false;  // 0/1 emitted only as a recurrence seed

  Rational value() const { return rat(num, den); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

enum class Subset { All, OddDen, EvenDen };

Subset parse_subset(std::string_view text);
const char* subset_name(Subset s);
inline bool subset_accepts(Subset s, std::int64_t den) {
  return s == Subset::All || ((den & 1) == 0) == (s == Subset::EvenDen);
}

// Consecutive pair (L, R) of F_Q with L < x <= R, for 0 < x <= 1.
std::pair<Fraction, Fraction> bracket(std::int64_t Q, const Rational& x);

// Single-consumer iterator over F_Q intersected with a closed interval,
// driven by the next-term recurrence.
class FareyWalker {
 public:
  FareyWalker(std::int64_t Q, const Interval& interval, bool include_zero = false);

  bool next(Fraction& out);
  // Predecessor of the most recently returned fraction in F_Q (0/1 before 1/Q).
  const Fraction& previous() const { return prev_; }

 private:
  std::int64_t Q_;
  __int128 hn_, hd_;
  Fraction prev_;
  Fraction cur_;
  bool emit_zero_ = false;
  bool done_ = false;
  bool started_ = false;
};

std::vector<Fraction> enumerate(std::int64_t Q, Subset subset, const Interval& interval,
                                bool include_zero = false);

// Test oracle: double loop, gcd filter and sort.
std::vector<Fraction> enumerate_brute(std::int64_t Q, Subset subset, const Interval& interval,
                                      bool include_zero = false);

std::int64_t count_fractions(std::int64_t Q, Subset subset, const Interval& interval);

Fraction next_fraction(std::int64_t Q, const Fraction& prev, const Fraction& cur);

std::int64_t index_of(std::int64_t Q, std::int64_t q_prev, std::int64_t q_cur);

// Numerators (a_prev, a_cur) of the unique consecutive pair with these denominators.
std::pair<std::int64_t, std::int64_t> numerators_from_pair(std::int64_t q_prev,
                                                           std::int64_t q_cur);

struct DenominatorChain {
  std::int64_t Q = 0;
  std::vector<std::int64_t> dens;
  std::vector<std::int64_t> ks;
};

DenominatorChain chain(std::int64_t Q, std::int64_t q_prev, std::int64_t q_cur,
                       std::int64_t steps);

void write_fractions_csv(std::ostream& os, const std::vector<Fraction>& fractions);

}  // namespace farey
