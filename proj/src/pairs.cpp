#include "farey/pairs.hpp"

#include <algorithm>
#include <ostream>

#include "farey/error.hpp"
#include "farey/sequence.hpp"
#include "json.hpp"

namespace farey {

void for_each_even_pair(std::int64_t Q, const Interval& interval,
                        const std::function<void(const TypedPair&)>& fn) {
  if (Q < 2) throw Error(Errc::InvalidArgument, "pairs need Q >= 2");
  FareyWalker w(Q, interval);
  Fraction f;
  bool have_even = false;
  Fraction last_even;
  int odd_since = 0;
  while (w.next(f)) {
    if (f.den & 1) {
      ++odd_since;
      continue;
    }
    if (have_even) fn(TypedPair{Q, last_even.den, f.den, odd_since, last_even.num, f.num});
    have_even = true;
    last_even = f;
    odd_since = 0;
  }
}

std::vector<TypedPair> even_pairs(std::int64_t Q, const Interval& interval) {
  std::vector<TypedPair> out;
  for_each_even_pair(Q, interval, [&](const TypedPair& p) { out.push_back(p); });
  if (out.empty()) throw Error(Errc::EmptyResult, "fewer than two even fractions");
  return out;
}

void EmpiricalSummary::add(const TypedPair& p) {
  Q = p.Q;
  ++total_pairs;
  ++per_type[p.r];
  if (p.q_prev + p.q_next <= p.Q) ++small_sum_count;
}

void EmpiricalSummary::merge(const EmpiricalSummary& other) {
  if (other.total_pairs == 0) return;
  if (total_pairs != 0 && Q != other.Q)
    throw Error(Errc::InvalidArgument, "cannot merge summaries of different orders");
  Q = other.Q;
  total_pairs += other.total_pairs;
  small_sum_count += other.small_sum_count;
  for (auto [r, c] : other.per_type) per_type[r] += c;
}

std::string EmpiricalSummary::to_json() const {
  nlohmann::ordered_json j;
  j["Q"] = Q;
  j["total_pairs"] = total_pairs;
  nlohmann::ordered_json types = nlohmann::ordered_json::object();
  for (auto [r, c] : per_type) types[std::to_string(r)] = c;
  j["per_type"] = types;
  j["small_sum_count"] = small_sum_count;
  return j.dump(2);
}

EmpiricalSummary summarize(std::int64_t Q, const Interval& interval) {
  EmpiricalSummary s;
  s.Q = Q;
  for_each_even_pair(Q, interval, [&](const TypedPair& p) { s.add(p); });
  return s;
}

EmpiricalSummary summarize(const std::vector<TypedPair>& pairs, std::int64_t Q) {
  EmpiricalSummary s;
  s.Q = Q;
  for (const auto& p : pairs) s.add(p);
  return s;
}

std::map<int, Rational> type_histogram(const EmpiricalSummary& s) {
  if (s.total_pairs == 0) throw Error(Errc::EmptyInput, "no pairs");
  std::map<int, Rational> out;
  for (auto [r, c] : s.per_type) out[r] = rat(c, s.total_pairs);
  return out;
}

std::map<int, Rational> type_histogram(const std::vector<TypedPair>& pairs) {
  if (pairs.empty()) throw Error(Errc::EmptyInput, "no pairs");
  return type_histogram(summarize(pairs, pairs.front().Q));
}

Rational local_density_estimate(const std::vector<TypedPair>& pairs, std::int64_t Q,
                                const Box& box) {
  if (pairs.empty()) throw Error(Errc::EmptyInput, "no pairs");
  if (box.half_side <= 0) throw Error(Errc::ZeroArea, "box half side must be positive");
  Rational x0 = std::max(Rational(0), Rational(box.center.x - box.half_side));
  Rational x1 = std::min(Rational(1), Rational(box.center.x + box.half_side));
  Rational y0 = std::max(Rational(0), Rational(box.center.y - box.half_side));
  Rational y1 = std::min(Rational(1), Rational(box.center.y + box.half_side));
  if (x1 <= x0 || y1 <= y0) throw Error(Errc::ZeroArea, "box misses the unit square");
  Rational a = (x1 - x0) * (y1 - y0);
  // compare q/Q against scaled bounds exactly
  Rational qx0 = x0 * Q, qx1 = x1 * Q, qy0 = y0 * Q, qy1 = y1 * Q;
  std::int64_t hits = 0;
  for (const auto& p : pairs) {
    Rational u(static_cast<long>(p.q_prev)), v(static_cast<long>(p.q_next));
    if (qx0 <= u && u <= qx1 && qy0 <= v && v <= qy1) ++hits;
  }
  return Rational(static_cast<long>(hits)) / (Rational(static_cast<long>(pairs.size())) * a);
}

Rational small_sum_probability(const EmpiricalSummary& s) {
  if (s.total_pairs == 0) throw Error(Errc::EmptyInput, "no pairs");
  return rat(s.small_sum_count, s.total_pairs);
}

Rational small_sum_probability(const std::vector<TypedPair>& pairs, std::int64_t Q) {
  return small_sum_probability(summarize(pairs, Q));
}

std::vector<std::int64_t> grid_counts(const std::vector<TypedPair>& pairs, std::int64_t Q,
                                      std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "grid needs n >= 1");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n * n), 0);
  // floor(q n / Q) is the exact cell of q/Q; q = Q lands in cell n-1.
  auto cell = [&](std::int64_t q) {
    std::int64_t c = static_cast<std::int64_t>(static_cast<__int128>(q) * n / Q);
    return std::min(c, n - 1);
  };
  for (const auto& p : pairs) ++counts[static_cast<std::size_t>(cell(p.q_prev) * n + cell(p.q_next))];
  return counts;
}

void write_pairs_csv(std::ostream& os, const std::vector<TypedPair>& pairs) {
  os << "Q,q_prev,q_next,r,a_prev,a_next\n";
  for (const auto& p : pairs)
    os << p.Q << ',' << p.q_prev << ',' << p.q_next << ',' << p.r << ',' << p.a_prev << ','
       << p.a_next << '\n';
}

void write_grid_csv(std::ostream& os, const std::vector<std::int64_t>& counts, std::int64_t n) {
  os << "i,j,count\n";
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      os << i << ',' << j << ',' << counts[static_cast<std::size_t>(i * n + j)] << '\n';
}

}  // namespace farey
