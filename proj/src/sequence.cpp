#include "farey/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "farey/error.hpp"
#include "farey/numtheory.hpp"

namespace farey {

namespace {

void check_order(std::int64_t Q) {
  if (Q < 1) throw Error(Errc::InvalidArgument, "order Q must be >= 1");
  if (Q > kMaxOrder) throw Error(Errc::Overflow, "order Q exceeds the supported bound");
}

void small_ratio(const Rational& x, __int128& n, __int128& d) {
  n = to_int64(x.get_num());
  d = to_int64(x.get_den());
}

}  // namespace

Subset parse_subset(std::string_view text) {
  if (text == "all") return Subset::All;
  if (text == "odd") return Subset::OddDen;
  if (text == "even") return Subset::EvenDen;
  throw Error(Errc::InvalidArgument, "subset must be all|odd|even");
}

const char* subset_name(Subset s) {
  switch (s) {
    case Subset::All: return "all";
    case Subset::OddDen: return "odd";
    case Subset::EvenDen: return "even";
  }
  return "all";
}

std::pair<Fraction, Fraction> bracket(std::int64_t Q, const Rational& x) {
  check_order(Q);
  if (x <= 0 || x > 1) throw Error(Errc::InvalidArgument, "bracket needs 0 < x <= 1");
  __int128 n, d;
  small_ratio(x, n, d);
  // Stern-Brocot descent in runs: each phase moves one endpoint as far as it can.
  __int128 la = 0, lq = 1, ra = 1, rq = 1;
  for (;;) {
    __int128 A = n * lq - d * la;  // > 0 since L < x
    __int128 B = d * ra - n * rq;  // >= 0 since R >= x
    __int128 t1 = std::min<__int128>(B / A, (Q - rq) / lq);
    if (t1 >= 1) {
      ra += t1 * la;
      rq += t1 * lq;
      continue;
    }
    __int128 lim = (Q - lq) / rq;
    __int128 t2 = B == 0 ? lim : std::min<__int128>((A - 1) / B, lim);
    if (t2 >= 1) {
      la += t2 * ra;
      lq += t2 * rq;
      continue;
    }
    break;
  }
  return {Fraction{static_cast<std::int64_t>(la), static_cast<std::int64_t>(lq), la == 0},
          Fraction{static_cast<std::int64_t>(ra), static_cast<std::int64_t>(rq)}};
}

FareyWalker::FareyWalker(std::int64_t Q, const Interval& interval, bool include_zero) : Q_(Q) {
  check_order(Q);
  small_ratio(interval.hi, hn_, hd_);
  if (interval.lo == 0) {
    prev_ = Fraction{0, 1, true};
    cur_ = Fraction{1, Q};
    emit_zero_ = include_zero;
  } else {
    auto [l, r] = bracket(Q, interval.lo);
    prev_ = l;
    cur_ = r;
  }
}

bool FareyWalker::next(Fraction& out) {
  if (done_) return false;
  if (emit_zero_) {
    emit_zero_ = false;
    out = prev_;
    return true;
  }
  if (started_) {
    if (cur_.num == 1 && cur_.den == 1) {
      done_ = true;
      return false;
    }
    std::int64_t k = (Q_ + prev_.den) / cur_.den;
    Fraction nxt{k * cur_.num - prev_.num, k * cur_.den - prev_.den};
    prev_ = cur_;
    cur_ = nxt;
  }
  started_ = true;
  if (static_cast<__int128>(cur_.num) * hd_ > hn_ * cur_.den) {
    done_ = true;
    return false;
  }
  out = cur_;
  return true;
}

std::vector<Fraction> enumerate(std::int64_t Q, Subset subset, const Interval& interval,
                                bool include_zero) {
  std::vector<Fraction> out;
  FareyWalker w(Q, interval, include_zero);
  Fraction f;
  while (w.next(f))
    if (f.anchor || subset_accepts(subset, f.den)) out.push_back(f);
  return out;
}

std::vector<Fraction> enumerate_brute(std::int64_t Q, Subset subset, const Interval& interval,
                                      bool include_zero) {
  check_order(Q);
  std::vector<Fraction> out;
  if (include_zero && interval.lo == 0) out.push_back(Fraction{0, 1, true});
  for (std::int64_t q = 1; q <= Q; ++q) {
    if (!subset_accepts(subset, q)) continue;
    for (std::int64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      Rational v = rat(a, q);
      if (interval.contains(v)) out.push_back(Fraction{a, q});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_fractions(std::int64_t Q, Subset subset, const Interval& interval) {
  std::int64_t n = 0;
  FareyWalker w(Q, interval);
  Fraction f;
  while (w.next(f))
    if (subset_accepts(subset, f.den)) ++n;
  return n;
}

Fraction next_fraction(std::int64_t Q, const Fraction& prev, const Fraction& cur) {
  check_order(Q);
  if (prev.den < 1 || cur.den < 1 || prev.den > Q || cur.den > Q)
    throw Error(Errc::NotConsecutive, "denominators must lie in [1, Q]");
  if (static_cast<__int128>(cur.num) * prev.den - static_cast<__int128>(prev.num) * cur.den != 1 ||
      prev.den + cur.den <= Q)
    throw Error(Errc::NotConsecutive, "fractions are not neighbors in F_Q");
  if (cur.num == 1 && cur.den == 1) throw Error(Errc::EndOfSequence, "1/1 has no successor");
  std::int64_t k = (Q + prev.den) / cur.den;
  return Fraction{k * cur.num - prev.num, k * cur.den - prev.den};
}

std::int64_t index_of(std::int64_t Q, std::int64_t q_prev, std::int64_t q_cur) {
  check_order(Q);
  if (q_prev < 1 || q_cur < 1 || q_prev > Q || q_cur > Q || std::gcd(q_prev, q_cur) != 1 ||
      q_prev + q_cur <= Q)
    throw Error(Errc::NotNeighborPair, "not a neighbor denominator pair of F_Q");
  return (Q + q_prev) / q_cur;
}

std::pair<std::int64_t, std::int64_t> numerators_from_pair(std::int64_t q_prev,
                                                           std::int64_t q_cur) {
  if (q_prev < 1 || q_cur < 1) throw Error(Errc::InvalidArgument, "denominators must be positive");
  if (std::gcd(q_prev, q_cur) != 1) throw Error(Errc::NotCoprime, "denominators share a factor");
  std::int64_t a_cur = q_cur == 1 ? 1 : mod_inverse(q_prev, q_cur);
  std::int64_t a_prev = static_cast<std::int64_t>(
      (static_cast<__int128>(a_cur) * q_prev - 1) / q_cur);
  return {a_prev, a_cur};
}

DenominatorChain chain(std::int64_t Q, std::int64_t q_prev, std::int64_t q_cur,
                       std::int64_t steps) {
  if (steps < 0) throw Error(Errc::InvalidArgument, "steps must be >= 0");
  index_of(Q, q_prev, q_cur);
  DenominatorChain c;
  c.Q = Q;
  c.dens = {q_prev, q_cur};
  for (std::int64_t s = 0; s < steps; ++s) {
    std::int64_t a = c.dens[c.dens.size() - 2];
    std::int64_t b = c.dens.back();
    if (b == 1) throw Error(Errc::ChainLeavesRange, "chain would pass 1/1");
    std::int64_t k = (Q + a) / b;
    c.ks.push_back(k);
    c.dens.push_back(k * b - a);
  }
  return c;
}

void write_fractions_csv(std::ostream& os, const std::vector<Fraction>& fractions) {
  os << "a,q\n";
  for (const auto& f : fractions) os << f.num << ',' << f.den << '\n';
}

}  // namespace farey
