#include "farey/geometry.hpp"

#include <algorithm>

#include "farey/error.hpp"

namespace farey {

RatPoint pt(std::int64_t xn, std::int64_t xd, std::int64_t yn, std::int64_t yd) {
  return {rat(xn, xd), rat(yn, yd)};
}

bool HalfPlane::contains(const RatPoint& p) const {
  int s = sgn(eval(p));
  return strict ? s > 0 : s >= 0;
}

HalfPlane half_plane(const Rational& a, const Rational& b, const Rational& c, bool strict) {
  if (a == 0 && b == 0) throw Error(Errc::InvalidArgument, "half-plane with zero normal");
  return {a, b, c, strict};
}

std::string location_name(const PointLocation& loc) {
  switch (loc.tag) {
    case LocationTag::Interior: return "interior";
    case LocationTag::OnEdge: return "edge";
    case LocationTag::AtVertex: return "vertex";
    case LocationTag::Outside: return "outside";
  }
  return "outside";
}

namespace {

Rational cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Line scaled so the first nonzero normal coefficient is +1; used to compare lines.
// Scaled so the leading nonzero coefficient has magnitude 1; orientation kept.
HalfPlane canonical_line(const HalfPlane& h) {
  Rational s = h.a != 0 ? h.a : h.b;
  if (s < 0) s = -s;
  return {h.a / s, h.b / s, h.c / s, h.strict};
}

// Same supporting line, either orientation.
bool same_line(const HalfPlane& g, const HalfPlane& h) {
  HalfPlane a = canonical_line(g), b = canonical_line(h);
  return (a.a == b.a && a.b == b.b && a.c == b.c) || (a.a == -b.a && a.b == -b.b && a.c == -b.c);
}

HalfPlane edge_line(const RatPoint& p, const RatPoint& q, bool strict) {
  Rational a = -(q.y - p.y);
  Rational b = q.x - p.x;
  Rational c = -(a * p.x + b * p.y);
  return {a, b, c, strict};
}

}  // namespace

void ConvexPolygon::normalize() {
  std::vector<RatPoint> v;
  v.reserve(vertices_.size());
  for (auto& p : vertices_)
    if (v.empty() || v.back() != p) v.push_back(std::move(p));
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  if (v.size() >= 3) {
    bool collinear = true;
    for (std::size_t i = 2; i < v.size() && collinear; ++i)
      if (cross(v[0], v[1], v[i]) != 0) collinear = false;
    if (collinear) {
      auto [lo, hi] = std::minmax_element(v.begin(), v.end());
      RatPoint a = *lo, b = *hi;
      v.clear();
      v.push_back(a);
      if (b != a) v.push_back(b);
    } else {
      bool changed = true;
      while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
          const auto& a = v[(i + v.size() - 1) % v.size()];
          const auto& c = v[(i + 1) % v.size()];
          if (cross(a, v[i], c) == 0) {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
          }
        }
      }
    }
  }
  vertices_ = std::move(v);
}

void ConvexPolygon::prune_strict() {
  std::vector<HalfPlane> kept;
  for (const auto& h : strict_) {
    bool touches = false;
    for (const auto& p : vertices_)
      if (h.eval(p) == 0) {
        touches = true;
        break;
      }
    if (!touches) continue;
    bool dup = false;
    for (const auto& k : kept)
      if (same_line(k, h)) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(canonical_line(h));
  }
  strict_ = std::move(kept);
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<RatPoint> vertices,
                                           const std::vector<bool>& edge_strict) {
  ConvexPolygon poly;
  std::size_t n = vertices.size();
  if (!edge_strict.empty() && edge_strict.size() != n)
    throw Error(Errc::InvalidArgument, "edge strictness does not match vertex count");
  for (std::size_t i = 0; n >= 2 && i < edge_strict.size(); ++i)
    if (edge_strict[i] && vertices[i] != vertices[(i + 1) % n])
      poly.strict_.push_back(edge_line(vertices[i], vertices[(i + 1) % n], true));
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i)
      if (cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]) < 0)
        throw Error(Errc::InvalidArgument, "vertices are not in convex CCW order");
  }
  poly.vertices_ = std::move(vertices);
  poly.normalize();
  poly.prune_strict();
  return poly;
}

ConvexPolygon ConvexPolygon::box(const Rational& x0, const Rational& y0, const Rational& x1,
                                 const Rational& y1) {
  if (x1 < x0 || y1 < y0) throw Error(Errc::InvalidArgument, "inverted box");
  return from_vertices({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

bool ConvexPolygon::empty() const {
  if (vertices_.empty()) return true;
  if (vertices_.size() == 1) return !strict_.empty();
  if (vertices_.size() == 2) {
    for (const auto& h : strict_)
      if (h.eval(vertices_[0]) == 0 && h.eval(vertices_[1]) == 0) return true;
  }
  return false;
}

bool ConvexPolygon::edge_strict(std::size_t i) const {
  if (vertices_.size() < 2) return false;
  const auto& p = vertices_[i % vertices_.size()];
  const auto& q = vertices_[(i + 1) % vertices_.size()];
  for (const auto& h : strict_)
    if (h.eval(p) == 0 && h.eval(q) == 0) return true;
  return false;
}

std::vector<bool> ConvexPolygon::edge_strictness() const {
  std::vector<bool> out(vertices_.size() >= 3 ? vertices_.size() : 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = edge_strict(i);
  return out;
}

bool ConvexPolygon::closure_contains(const RatPoint& p) const {
  std::size_t n = vertices_.size();
  if (n == 0) return false;
  if (n == 1) return vertices_[0] == p;
  if (n == 2) {
    const auto& a = vertices_[0];
    const auto& b = vertices_[1];
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (cross(vertices_[i], vertices_[(i + 1) % n], p) < 0) return false;
  return true;
}

bool ConvexPolygon::contains(const RatPoint& p) const {
  if (!closure_contains(p)) return false;
  for (const auto& h : strict_)
    if (h.eval(p) == 0) return false;
  return true;
}

std::vector<HalfPlane> ConvexPolygon::half_planes() const {
  std::vector<HalfPlane> out;
  std::size_t n = vertices_.size();
  if (n == 0) {
    out.push_back({1, 0, -1, false});
    out.push_back({-1, 0, 0, false});
    return out;
  }
  if (n == 1) {
    const auto& p = vertices_[0];
    out.push_back({1, 0, -p.x, false});
    out.push_back({-1, 0, p.x, false});
    out.push_back({0, 1, -p.y, false});
    out.push_back({0, -1, p.y, false});
  } else if (n == 2) {
    const auto& p = vertices_[0];
    const auto& q = vertices_[1];
    HalfPlane l = edge_line(p, q, false);
    out.push_back(l);
    out.push_back({-l.a, -l.b, -l.c, false});
    Rational dx = q.x - p.x, dy = q.y - p.y;
    out.push_back({dx, dy, -(dx * p.x + dy * p.y), false});
    out.push_back({-dx, -dy, dx * q.x + dy * q.y, false});
  } else {
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(edge_line(vertices_[i], vertices_[(i + 1) % n], edge_strict(i)));
  }
  for (const auto& h : strict_) {
    bool is_edge = false;
    for (const auto& e : out)
      if (e.strict && same_line(e, h)) {
        is_edge = true;
        break;
      }
    if (!is_edge) out.push_back(h);
  }
  return out;
}

Rational ConvexPolygon::min_x() const {
  if (vertices_.empty()) throw Error(Errc::DegeneratePolygon, "empty polygon has no extent");
  Rational m = vertices_[0].x;
  for (const auto& p : vertices_) m = std::min(m, p.x);
  return m;
}
Rational ConvexPolygon::max_x() const {
  if (vertices_.empty()) throw Error(Errc::DegeneratePolygon, "empty polygon has no extent");
  Rational m = vertices_[0].x;
  for (const auto& p : vertices_) m = std::max(m, p.x);
  return m;
}
Rational ConvexPolygon::min_y() const {
  if (vertices_.empty()) throw Error(Errc::DegeneratePolygon, "empty polygon has no extent");
  Rational m = vertices_[0].y;
  for (const auto& p : vertices_) m = std::min(m, p.y);
  return m;
}
Rational ConvexPolygon::max_y() const {
  if (vertices_.empty()) throw Error(Errc::DegeneratePolygon, "empty polygon has no extent");
  Rational m = vertices_[0].y;
  for (const auto& p : vertices_) m = std::max(m, p.y);
  return m;
}

bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.vertices_.size() != b.vertices_.size()) return false;
  std::size_t n = a.vertices_.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = a.vertices_[i] == b.vertices_[(i + shift) % n];
    if (ok) return true;
  }
  return false;
}

ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& hp) {
  ConvexPolygon out;
  const auto& v = poly.vertices_;
  std::size_t n = v.size();
  if (n == 1) {
    if (sgn(hp.eval(v[0])) >= 0) out.vertices_ = v;
  } else if (n >= 2) {
    out.vertices_.reserve(n + 2);
    std::vector<Rational> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = hp.eval(v[i]);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = (i + 1) % n;
      if (sgn(s[i]) >= 0) out.vertices_.push_back(v[i]);
      if ((sgn(s[i]) > 0 && sgn(s[j]) < 0) || (sgn(s[i]) < 0 && sgn(s[j]) > 0)) {
        Rational t = s[i] / (s[i] - s[j]);
        out.vertices_.push_back({v[i].x + t * (v[j].x - v[i].x), v[i].y + t * (v[j].y - v[i].y)});
      }
    }
  }
  out.normalize();
  out.strict_ = poly.strict_;
  if (hp.strict) out.strict_.push_back(hp);
  out.prune_strict();
  return out;
}

ConvexPolygon intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
  ConvexPolygon out = a;
  for (const auto& h : b.half_planes()) {
    out = clip(out, h);
    if (out.closure_empty()) break;
  }
  return out;
}

ConvexPolygon map_affine(const ConvexPolygon& poly, const Rational (&m)[2][2],
                         const Rational (&t)[2]) {
  Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det == 0) throw Error(Errc::InvalidArgument, "singular affine map");
  ConvexPolygon out;
  out.vertices_.reserve(poly.vertices_.size());
  for (const auto& p : poly.vertices_)
    out.vertices_.push_back(
        {m[0][0] * p.x + m[0][1] * p.y + t[0], m[1][0] * p.x + m[1][1] * p.y + t[1]});
  if (det < 0) std::reverse(out.vertices_.begin(), out.vertices_.end());
  // (a,b) . M^{-1}
  Rational i00 = m[1][1] / det, i01 = -m[0][1] / det, i10 = -m[1][0] / det, i11 = m[0][0] / det;
  for (const auto& h : poly.strict_) {
    Rational a = h.a * i00 + h.b * i10;
    Rational b = h.a * i01 + h.b * i11;
    Rational c = h.c - a * t[0] - b * t[1];
    out.strict_.push_back({a, b, c, true});
  }
  out.prune_strict();
  return out;
}

Rational area(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  if (v.size() < 3) return 0;
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    twice += p.x * q.y - p.y * q.x;
  }
  Rational a = twice / 2;
  return a < 0 ? Rational(-a) : a;
}

PointLocation locate(const ConvexPolygon& poly, const RatPoint& p) {
  const auto& v = poly.vertices();
  if (v.size() < 3) throw Error(Errc::DegeneratePolygon, "locate needs a polygon with interior");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == p) return {LocationTag::AtVertex, i};
  std::size_t edge = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    int s = sgn(cross(v[i], v[(i + 1) % v.size()], p));
    if (s < 0) return {LocationTag::Outside, 0};
    if (s == 0) edge = i;
  }
  if (edge < v.size()) return {LocationTag::OnEdge, edge};
  return {LocationTag::Interior, 0};
}

ConvexPolygon probe_parallelogram(std::int64_t pr, std::int64_t pr1) {
  if (pr < 1) throw Error(Errc::InvalidArgument, "probe needs pr >= 1");
  return ConvexPolygon::from_vertices({{-1, rat(-pr1 - 1, pr)},
                                       {1, rat(pr1 - 1, pr)},
                                       {1, rat(pr1 + 1, pr)},
                                       {-1, rat(1 - pr1, pr)}});
}

ConvexPolygon cone_clip(const RatPoint& d1, const RatPoint& d2, std::int64_t pr,
                        std::int64_t pr1) {
  if ((d1.x == 0 && d1.y == 0) || (d2.x == 0 && d2.y == 0))
    throw Error(Errc::InvalidArgument, "zero cone direction");
  Rational c = d1.x * d2.y - d1.y * d2.x;
  Rational dot = d1.x * d2.x + d1.y * d2.y;
  if (c == 0 && dot > 0) throw Error(Errc::ParallelDirections, "cone directions coincide");
  if (c < 0) throw Error(Errc::InvalidArgument, "reflex cone is not convex");
  ConvexPolygon par = probe_parallelogram(pr, pr1);
  ConvexPolygon out = clip(par, {-d1.y, d1.x, 0, false});
  if (c > 0) out = clip(out, {d2.y, -d2.x, 0, false});
  return out;
}

Rational cone_clip_area(const RatPoint& /*vertex*/, const RatPoint& dir1, const RatPoint& dir2,
                        std::int64_t pr, std::int64_t pr1) {
  Rational c = dir1.x * dir2.y - dir1.y * dir2.x;
  if (c < 0) return area(probe_parallelogram(pr, pr1)) - area(cone_clip(dir2, dir1, pr, pr1));
  return area(cone_clip(dir1, dir2, pr, pr1));
}

std::string format_point(const RatPoint& p) {
  return "(" + format_rational(p.x) + "," + format_rational(p.y) + ")";
}

RatPoint parse_point(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw Error(Errc::InvalidArgument, "point must be 'u,v': " + std::string(text));
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

}  // namespace farey
