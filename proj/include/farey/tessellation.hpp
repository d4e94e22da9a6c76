#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "farey/geometry.hpp"

namespace farey {

using KTuple = std::vector<std::int64_t>;

// (even) at level 1; (odd, even, ..., even, odd) from level 2 on.
bool admissible(const KTuple& ks);

// p_0 = 1, p_1 = k_1, p_r = k_r p_{r-1} - p_{r-2}. Throws Overflow past 64 bits.
std::int64_t p_value(const KTuple& ks);

// (p(k_1..k_r), p(k_2..k_r)): the last denominator of a chain with these
// indices is pr*q'' - pr1*q'.
std::pair<std::int64_t, std::int64_t> last_coeffs(const KTuple& ks);

// T(x,y) = (y, floor((1+x)/y) y - x). Accepts the closed triangle minus y = 0.
RatPoint t_map(const RatPoint& p);
// Inverse on the half-open triangle {0 < x,y <= 1, x+y > 1}.
RatPoint t_inv(const RatPoint& p);

// Farey triangle with its open edge x + y = 1.
ConvexPolygon farey_triangle();

// {k y <= 1 + x < (k+1) y} inside the Farey triangle.
ConvexPolygon base_cell(std::int64_t k);

// T_{k1} intersected with the preimages of T_{k2}, ... along the branch maps.
// Memoized; safe to call from several threads.
ConvexPolygon cell(const KTuple& ks);

std::string format_tuple(const KTuple& ks);
KTuple parse_tuple(std::string_view text);

struct Cell {
  KTuple tuple;
  ConvexPolygon polygon;
};

struct CellQuery {
  int level = 1;
  // Emit every level in [min_level, level] in one pass; 0 means level only.
  int min_level = 0;
  // Keep cells whose closure meets the closed strip lo <= x <= hi.
  std::optional<std::pair<Rational, Rational>> x_window;
  // 0 means no cap; an unbounded branch without a cap throws TruncationUnsound.
  std::int64_t max_entry = 0;
  bool admissible_only = true;
};

struct CellEnumeration {
  std::vector<Cell> cells;
  bool truncated = false;
  // Upper bound on the total area of matching cells dropped by the cap.
  Rational tail_area_bound = 0;
};

// Branch-and-prune over positive-area cells, ordered lexicographically by tuple.
CellEnumeration enumerate_cells(const CellQuery& query);

CellEnumeration admissible_cells(int level,
                                 std::optional<std::pair<Rational, Rational>> x_window = {},
                                 std::int64_t max_entry = 0);

RatPoint probe_center(const KTuple& ks, const RatPoint& anchor);

struct VertexWeight {
  KTuple tuple;
  RatPoint vertex;
  Rational alpha;
};

VertexWeight vertex_alpha(const Cell& c, std::size_t vertex_index);

// Sum of all vertex weights; 4/p for quadrilaterals and 2/p for triangles.
Rational checksum(const Cell& c);

// Image of the cell under (x,y) -> (x, pr y - pr1 x).
ConvexPolygon u_region(const KTuple& ks);

// 2 * (total area of admissible level-r cells), the limiting share of
// type r pairs. Entries above cap are dropped; the bound is returned too.
struct TypeShare {
  Rational share;
  Rational tail_bound;  // share is within [share, share + tail_bound]
};
TypeShare type_share_prediction(int level, std::int64_t cap);

std::string cell_json(const KTuple& ks, const ConvexPolygon& poly);

}  // namespace farey
