#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

struct RatPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const RatPoint& a, const RatPoint& b) { return !(a == b); }
  friend bool operator<(const RatPoint& a, const RatPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

RatPoint pt(std::int64_t xn, std::int64_t xd, std::int64_t yn, std::int64_t yd);

// {(x,y) : a x + b y + c >= 0}, or > 0 when strict.
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;
  bool strict = false;

  Rational eval(const RatPoint& p) const { return a * p.x + b * p.y + c; }
  bool contains(const RatPoint& p) const;
  HalfPlane complement() const { return {-a, -b, -c, !strict}; }
};

HalfPlane half_plane(const Rational& a, const Rational& b, const Rational& c, bool strict = false);

enum class LocationTag { Interior, OnEdge, AtVertex, Outside };

struct PointLocation {
  LocationTag tag = LocationTag::Outside;
  std::size_t index = 0;  // edge or vertex index when relevant

  friend bool operator==(const PointLocation& a, const PointLocation& b) {
    return a.tag == b.tag && (a.tag == LocationTag::Interior || a.tag == LocationTag::Outside ||
                              a.index == b.index);
  }
};

std::string location_name(const PointLocation& loc);

// Convex polygon kept as the CCW vertex list of its closure plus the strict
// supporting lines that touch the closure. A point belongs to the set iff it
// lies in the closure and on none of the strict lines, so half-open cells and
// degenerate pieces keep exact boundary ownership.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  // Vertices in CCW order. edge_strict[i] marks edge v[i] -> v[i+1] as open.
  static ConvexPolygon from_vertices(std::vector<RatPoint> vertices,
                                     const std::vector<bool>& edge_strict = {});
  static ConvexPolygon box(const Rational& x0, const Rational& y0, const Rational& x1,
                           const Rational& y1);

  const std::vector<RatPoint>& vertices() const { return vertices_; }
  const std::vector<HalfPlane>& strict_lines() const { return strict_; }
  std::size_t size() const { return vertices_.size(); }

  // Closure is empty.
  bool closure_empty() const { return vertices_.empty(); }
  // No point belongs to the set.
  bool empty() const;
  bool degenerate() const { return vertices_.size() < 3; }

  bool edge_strict(std::size_t i) const;
  std::vector<bool> edge_strictness() const;

  bool contains(const RatPoint& p) const;
  bool closure_contains(const RatPoint& p) const;

  // Closure H-representation followed by the strict supporting lines.
  std::vector<HalfPlane> half_planes() const;

  // Rational bounding box; requires a nonempty closure.
  Rational min_x() const;
  Rational max_x() const;
  Rational min_y() const;
  Rational max_y() const;

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b);

 private:
  friend ConvexPolygon clip(const ConvexPolygon&, const HalfPlane&);
  friend ConvexPolygon map_affine(const ConvexPolygon&, const Rational (&)[2][2],
                                  const Rational (&)[2]);

  void normalize();
  void prune_strict();

  std::vector<RatPoint> vertices_;
  std::vector<HalfPlane> strict_;
};

ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& hp);
ConvexPolygon intersect(const ConvexPolygon& a, const ConvexPolygon& b);

// Image under p -> M p + t. M must be invertible.
ConvexPolygon map_affine(const ConvexPolygon& poly, const Rational (&m)[2][2],
                         const Rational (&t)[2]);

Rational area(const ConvexPolygon& poly);

PointLocation locate(const ConvexPolygon& poly, const RatPoint& p);

// Area of the cone swept counterclockwise from dir1 to dir2 intersected with
// the parallelogram {|x| <= 1, |pr*y - pr1*x| <= 1}.
Rational cone_clip_area(const RatPoint& vertex, const RatPoint& dir1, const RatPoint& dir2,
                        std::int64_t pr, std::int64_t pr1);

// The parallelogram {|x| <= 1, |pr*y - pr1*x| <= 1}.
ConvexPolygon probe_parallelogram(std::int64_t pr, std::int64_t pr1);

// The cone piece itself; cone_clip_area is its area for cones of angle <= pi.
ConvexPolygon cone_clip(const RatPoint& dir1, const RatPoint& dir2, std::int64_t pr,
                        std::int64_t pr1);

std::string format_point(const RatPoint& p);
RatPoint parse_point(std::string_view text);

}  // namespace farey
