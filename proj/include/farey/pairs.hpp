#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "farey/geometry.hpp"
#include "farey/interval.hpp"

namespace farey {

// Consecutive even-denominator fractions a_prev/q_prev < a_next/q_next with
// exactly r odd-denominator fractions of F_Q between them.
struct TypedPair {
  std::int64_t Q = 0;
  std::int64_t q_prev = 0;
  std::int64_t q_next = 0;
  int r = 0;
  std::int64_t a_prev = 0;
  std::int64_t a_next = 0;

  friend bool operator==(const TypedPair&, const TypedPair&) = default;
};

// One pass over F_Q restricted to the interval; both fractions of a pair must lie in it.
void for_each_even_pair(std::int64_t Q, const Interval& interval,
                        const std::function<void(const TypedPair&)>& fn);

std::vector<TypedPair> even_pairs(std::int64_t Q, const Interval& interval);

struct Box {
  RatPoint center;
  Rational half_side;
};

struct EmpiricalSummary {
  std::int64_t Q = 0;
  std::int64_t total_pairs = 0;
  std::map<int, std::int64_t> per_type;
  std::int64_t small_sum_count = 0;

  void add(const TypedPair& p);
  void merge(const EmpiricalSummary& other);
  std::string to_json() const;
};

EmpiricalSummary summarize(std::int64_t Q, const Interval& interval);
EmpiricalSummary summarize(const std::vector<TypedPair>& pairs, std::int64_t Q);

std::map<int, Rational> type_histogram(const std::vector<TypedPair>& pairs);
std::map<int, Rational> type_histogram(const EmpiricalSummary& s);

// Points (q_prev/Q, q_next/Q) in the closed box, over total * Area(box and unit square).
Rational local_density_estimate(const std::vector<TypedPair>& pairs, std::int64_t Q,
                                const Box& box);

Rational small_sum_probability(const std::vector<TypedPair>& pairs, std::int64_t Q);
Rational small_sum_probability(const EmpiricalSummary& s);

// Row-major n*n counts; cell (i,j) holds q_prev/Q in [i/n,(i+1)/n) and
// q_next/Q in [j/n,(j+1)/n), coordinate 1 going to the last cell.
std::vector<std::int64_t> grid_counts(const std::vector<TypedPair>& pairs, std::int64_t Q,
                                      std::int64_t n);

void write_pairs_csv(std::ostream& os, const std::vector<TypedPair>& pairs);
void write_grid_csv(std::ostream& os, const std::vector<std::int64_t>& counts, std::int64_t n);

}  // namespace farey
