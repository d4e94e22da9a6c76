#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "farey/geometry.hpp"
#include "farey/interval.hpp"

namespace farey {

struct CheckRow {
  std::string group;
  std::string label;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckRow> rows;

  bool ok() const { return failures() == 0; }
  std::size_t failures() const;
  void add(std::string group, std::string label, bool pass, std::string detail = {});
  void append(const VerifyReport& other);
};

// Vertex sets of every cell-catalog row, then per-level completeness: the
// admissible cells with entries <= max_param are exactly the catalog tuples.
VerifyReport verify_cell_catalog(std::int64_t max_param, int max_level);

// Every vertex-weight catalog entry against vertex_alpha.
VerifyReport verify_weight_catalog(std::int64_t max_param, int max_level);

// checksum = 4/p or 2/p for all admissible cells with entries <= max_entry.
VerifyReport verify_checksums(std::int64_t max_entry, int max_level);

struct DensityPoint {
  RatPoint p;
  std::string kind;
};

// Deterministic sample of [0,1]^2 with denominators <= max_den. Roughly a
// third are generic; the rest sit on support edges, the z = 1 edges, the
// jump lines (j+1) z + zbar = j, U-region vertices and puzzle vertices.
std::vector<DensityPoint> density_test_points(std::size_t count, std::uint64_t seed,
                                              std::int64_t max_den = 1000);

// Closed form against the level sums, exactly.
VerifyReport verify_density(const std::vector<DensityPoint>& points, int threads = 1);

// Type shares (r <= 4) and small-sum fraction on the interval against [0,1].
VerifyReport verify_interval(std::int64_t Q, const Interval& interval, double band = 0.02);

}  // namespace farey
