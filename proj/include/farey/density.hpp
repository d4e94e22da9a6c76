#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "farey/geometry.hpp"
#include "farey/tessellation.hpp"

namespace farey {

struct DensityValue {
  bool infinite = false;
  Rational value = 0;

  static DensityValue inf() { return {true, 0}; }
  std::string exact() const;    // "p/q" or "inf"
  std::string decimal() const;  // 12 significant digits or "inf"
  double to_double() const;

  friend bool operator==(const DensityValue& a, const DensityValue& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

// Harmonic number H_n, cached.
Rational harmonic(std::int64_t n);

// Closed form of the limiting density, with phi(cond) true when the
// condition holds for (z, zbar) = (u, v) or (v, u) and phi~ when it holds
// for both orderings. Infinite only at (1,1).
DensityValue g_closed(const Rational& u, const Rational& v);

// The closed form restricted to summation indices j in [j_lo, j_hi]
// (j_hi = nullopt for no upper limit), evaluated term by term.
DensityValue closed_component(const Rational& u, const Rational& v, std::int64_t j_lo,
                              std::optional<std::int64_t> j_hi);

// Baby-puzzle component over odd i >= 5 (i = 2j + 1 against the closed form).
DensityValue h_u_closed(const Rational& u, const Rational& v);
// Big-puzzle component: tuples whose index polynomial equals 2.
DensityValue g_du_closed(const Rational& u, const Rational& v);
// Contribution of the two level-r families for r >= 5.
Rational g_u_tail_closed(const Rational& u, const Rational& v);

struct DensityTerm {
  KTuple tuple;
  PointLocation location;
  Rational contribution;
};

struct DensityGroups {
  Rational h1u = 0;  // level 1, k >= 4
  Rational h2u = 0;  // (1,l), (k,1) with k, l >= 5
  Rational h3u = 0;  // (1,l,1) with l >= 6
  Rational hd = 0;   // (2), (1,3), (3,1), (1,2,3), (3,2,1), (1,4,1)
  Rational g4 = 0;   // level 4
  Rational gu = 0;   // levels >= 5
  Rational other = 0;

  Rational hu() const { return h1u + h2u + h3u; }
  Rational gdu() const { return hd + g4 + gu; }
  void add(const KTuple& ks, const Rational& c);
};

struct DensityBreakdown {
  RatPoint point;
  DensityValue total;
  std::vector<DensityTerm> terms;
  DensityGroups groups;

  std::string to_json() const;
};

// Level-r part of the density: interior 2/p, edge 1/p, vertex alpha/2.
Rational g_level(int r, const Rational& u, const Rational& v, DensityBreakdown* breakdown = nullptr);

// Smallest level count that captures every nonzero level at a point with
// min(u,v) = m > 0: ceil(max(3, 1/(2m) + 3)).
int level_bound(const Rational& m);

// Sum of all levels. At (0,1), (1,0) and (1,1) the level sums do not
// terminate and the closed-form special values are returned instead.
DensityValue g_sum(const Rational& u, const Rational& v, std::optional<int> r_max = {},
                   DensityBreakdown* breakdown = nullptr);

enum class SupportClass { Interior, Boundary, Outside };
const char* support_name(SupportClass s);

// {x <= 1, y <= 1, 2x + y >= 1, x + 2y >= 1}
ConvexPolygon support_region();
SupportClass support_contains(const Rational& u, const Rational& v);

// Quadrilateral G_i for odd i >= 3; i = 3 is the support itself.
ConvexPolygon puzzle_region(std::int64_t i);

struct IntegrationOptions {
  int threads = 1;
};

// Midpoint rule on an n x n grid over the region's bounding box. Subcells
// cut by the region boundary are weighted by their covered fraction.
double integrate_g(const ConvexPolygon& region, std::int64_t n, const IntegrationOptions& opt = {});

// Long-format CSV "u,v,g" on the grid (i/(n-1), j/(n-1)).
void write_density_grid(std::ostream& os, std::int64_t n, int threads = 1);

}  // namespace farey
