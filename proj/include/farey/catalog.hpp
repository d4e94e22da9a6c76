#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "farey/geometry.hpp"
#include "farey/tessellation.hpp"

namespace farey {

// Reference vertex lists of the admissible cells, expanded for parametric
// rows up to max_param and for the two level-r families up to max_level.
struct CellRow {
  std::string family;
  KTuple tuple;
  std::vector<RatPoint> vertices;
};

// Reference vertex weights.
struct WeightRow {
  std::string family;
  KTuple tuple;
  RatPoint vertex;
  Rational alpha;
  // Set on the one entry whose commonly quoted formula fails the checksum.
  std::optional<Rational> quoted_alpha;
};

std::vector<CellRow> cell_catalog(std::int64_t max_param, int max_level);
std::vector<WeightRow> weight_catalog(std::int64_t max_param, int max_level);

}  // namespace farey
