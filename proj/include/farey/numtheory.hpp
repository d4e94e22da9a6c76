#pragma once

#include <cstdint>
#include <vector>

#include "farey/geometry.hpp"
#include "farey/interval.hpp"

namespace farey {

// Representative of a^{-1} mod m in [0, m).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

class MobiusTable {
 public:
  explicit MobiusTable(std::int64_t limit);

  std::int64_t limit() const { return static_cast<std::int64_t>(mu_.size()) - 1; }
  int operator[](std::int64_t d) const { return mu_.at(static_cast<std::size_t>(d)); }
  // mu(1..limit)
  std::vector<int> values() const;

 private:
  std::vector<std::int8_t> mu_;  // index 0 unused
};

MobiusTable mobius_table(std::int64_t limit);

enum class Parity { Even, Odd };

struct ParityPair {
  Parity x;
  Parity y;
};

struct LatticeCount {
  std::int64_t count = 0;
  double main_term = 0;  // 2 Area / pi^2, scaled by |I| for constrained counts
};

// Lattice points of the region (closed edges included, strict edges excluded)
// with the given coordinate parities and gcd(x, y) = 1.
LatticeCount count_parity_coprime(const ConvexPolygon& region, ParityPair parity);

// Coprime lattice points of any parity.
std::int64_t count_coprime(const ConvexPolygon& region);

// Points with x even, y odd, gcd 1 and (x^{-1} mod y) in [y lo, y hi].
// For y = 1 the inverse is taken to be 0.
LatticeCount constrained_count(const ConvexPolygon& region, const Interval& interval);

}  // namespace farey
