#include "farey/tessellation.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "farey/error.hpp"
#include "json.hpp"

namespace farey {

namespace {

bool entry_admissible(std::int64_t k, std::size_t pos, std::size_t level) {
  if (level == 1) return k % 2 == 0;
  bool end = pos == 1 || pos == level;
  return end ? (k % 2 != 0) : (k % 2 == 0);
}

// 1 + x - k y >= 0 and (k+1) y - 1 - x > 0
HalfPlane lower_side(std::int64_t k) { return half_plane(1, -k, 1, false); }
HalfPlane upper_side(std::int64_t k, bool strict) { return half_plane(-1, k + 1, -1, strict); }

void branch_map(std::int64_t k, Rational (&m)[2][2]) {
  m[0][0] = 0;
  m[0][1] = 1;
  m[1][0] = -1;
  m[1][1] = k;
}

void branch_inverse(std::int64_t k, Rational (&m)[2][2]) {
  m[0][0] = k;
  m[0][1] = -1;
  m[1][0] = 1;
  m[1][1] = 0;
}

const Rational kZero[2] = {0, 0};

ConvexPolygon closure_of(const ConvexPolygon& p) {
  if (p.closure_empty()) return {};
  auto v = p.vertices();
  if (v.size() < 3) {
    // segments and points: rebuild through clipping a box so the shape survives
    ConvexPolygon out = ConvexPolygon::box(p.min_x(), p.min_y(), p.max_x(), p.max_y());
    for (const auto& h : p.half_planes())
      if (!h.strict) out = clip(out, h);
    return out;
  }
  return ConvexPolygon::from_vertices(std::move(v));
}

struct Node {
  ConvexPolygon image;
  std::optional<ConvexPolygon> window;
  Rational minv[2][2];
  KTuple prefix;
};

class CellSearch {
 public:
  explicit CellSearch(const CellQuery& q)
      : q_(q), min_level_(q.min_level > 0 ? q.min_level : q.level) {}

  CellEnumeration run() {
    if (q_.level < 1 || min_level_ > q_.level)
      throw Error(Errc::InvalidArgument, "level range must satisfy 1 <= min_level <= level");
    Node root;
    root.image = farey_triangle();
    if (q_.x_window) {
      const auto& [lo, hi] = *q_.x_window;
      if (lo > hi) throw Error(Errc::InvalidArgument, "empty x window");
      root.window = intersect(ConvexPolygon::box(lo, 0, hi, 1), closure_of(root.image));
      if (root.window->closure_empty()) return std::move(out_);
    }
    root.minv[0][0] = 1;
    root.minv[0][1] = 0;
    root.minv[1][0] = 0;
    root.minv[1][1] = 1;
    visit(root);
    return std::move(out_);
  }

 private:
  // The tuple can still be completed into an admissible tuple of a level in range.
  bool extendable(const KTuple& t) const {
    if (t.size() >= static_cast<std::size_t>(q_.level)) return false;
    if (!q_.admissible_only) return true;
    if (t[0] % 2 == 0) return false;
    for (std::size_t i = 1; i < t.size(); ++i)
      if (t[i] % 2 != 0) return false;
    return true;
  }

  bool emittable(const KTuple& t) const {
    if (t.size() < static_cast<std::size_t>(min_level_)) return false;
    return !q_.admissible_only || admissible(t);
  }

  void visit(const Node& n) {
    const std::size_t pos = n.prefix.size() + 1;
    const ConvexPolygon& src = n.window ? *n.window : n.image;

    bool unbounded = false;
    std::optional<Rational> tmin, tmax;
    for (const auto& v : src.vertices()) {
      if (v.y == 0) {
        unbounded = true;
        continue;
      }
      Rational t = (1 + v.x) / v.y;
      if (!tmin || t < *tmin) tmin = t;
      if (!tmax || t > *tmax) tmax = t;
    }
    std::int64_t lo = 1;
    if (tmin) lo = std::max<std::int64_t>(1, to_int64(ceil_of(*tmin)) - 1);
    std::int64_t hi = std::numeric_limits<std::int64_t>::max();
    if (!unbounded && tmax) {
      BigInt f = floor_of(*tmax);
      if (fits_int64(f)) hi = to_int64(f);
    }
    // An index >= 6 forces the next index to be 1, which cannot sit in the
    // middle of an admissible tuple.
    if (q_.admissible_only && static_cast<std::size_t>(min_level_) >= pos + 2)
      hi = std::min<std::int64_t>(hi, 5);
    if (q_.max_entry > 0 && hi > q_.max_entry) {
      Rational a = area(clip(n.image, lower_side(q_.max_entry + 1)));
      if (a > 0) {
        out_.truncated = true;
        out_.tail_area_bound += a;
      }
      hi = q_.max_entry;
    } else if (hi == std::numeric_limits<std::int64_t>::max()) {
      throw Error(Errc::TruncationUnsound,
                  "unbounded branch after (" + format_tuple(n.prefix) + ") needs an entry cap");
    }

    KTuple tuple = n.prefix;
    tuple.push_back(0);
    for (std::int64_t k = lo; k <= hi; ++k) {
      tuple.back() = k;
      bool emit = emittable(tuple), extend = extendable(tuple);
      if (!emit && !extend) continue;
      ConvexPolygon piece = clip(clip(n.image, lower_side(k)), upper_side(k, true));
      if (piece.degenerate()) continue;
      std::optional<ConvexPolygon> w;
      if (n.window) {
        w = intersect(*n.window, closure_of(piece));
        if (w->closure_empty()) continue;
      }
      if (emit) out_.cells.push_back({tuple, map_affine(piece, n.minv, kZero)});
      if (!extend) continue;
      Rational a[2][2], ainv[2][2];
      branch_map(k, a);
      branch_inverse(k, ainv);
      Node child;
      child.image = map_affine(piece, a, kZero);
      if (w) child.window = map_affine(*w, a, kZero);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) child.minv[i][j] = n.minv[i][0] * ainv[0][j] + n.minv[i][1] * ainv[1][j];
      child.prefix = tuple;
      visit(child);
    }
  }

  const CellQuery& q_;
  int min_level_;
  CellEnumeration out_;
};

}  // namespace

bool admissible(const KTuple& ks) {
  if (ks.empty()) return false;
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (ks[i] < 1 || !entry_admissible(ks[i], i + 1, ks.size())) return false;
  return true;
}

std::int64_t p_value(const KTuple& ks) {
  std::int64_t prev = 1, cur = 1;  // p_{-1} is unused: p_1 = k_1 * p_0 - 0
  bool first = true;
  for (std::int64_t k : ks) {
    if (k < 1) throw Error(Errc::InvalidK, "tuple entries must be >= 1");
    std::int64_t next;
    std::int64_t back = first ? 0 : prev;
    if (__builtin_mul_overflow(k, cur, &next) || __builtin_sub_overflow(next, back, &next))
      throw Error(Errc::Overflow, "index polynomial exceeds 64 bits");
    prev = cur;
    cur = next;
    first = false;
  }
  return cur;
}

std::pair<std::int64_t, std::int64_t> last_coeffs(const KTuple& ks) {
  if (ks.empty()) throw Error(Errc::InvalidArgument, "empty tuple");
  return {p_value(ks), p_value(KTuple(ks.begin() + 1, ks.end()))};
}

RatPoint t_map(const RatPoint& p) {
  if (p.y <= 0 || p.y > 1 || p.x < 0 || p.x > 1 || p.x + p.y < 1)
    throw Error(Errc::OutsideDomain, "point outside the Farey triangle: " + format_point(p));
  BigInt k = floor_of((1 + p.x) / p.y);
  return {p.y, Rational(k) * p.y - p.x};
}

RatPoint t_inv(const RatPoint& p) {
  if (p.x <= 0 || p.x > 1 || p.y <= 0 || p.y > 1 || p.x + p.y <= 1)
    throw Error(Errc::OutsideDomain, "point outside the Farey triangle: " + format_point(p));
  BigInt k = floor_of((1 + p.y) / p.x);
  return {Rational(k) * p.x - p.y, p.x};
}

ConvexPolygon farey_triangle() {
  return clip(ConvexPolygon::box(0, 0, 1, 1), half_plane(1, 1, -1, true));
}

ConvexPolygon base_cell(std::int64_t k) {
  if (k < 1) throw Error(Errc::InvalidK, "cell index must be >= 1");
  return clip(clip(farey_triangle(), lower_side(k)), upper_side(k, true));
}

ConvexPolygon cell(const KTuple& ks) {
  static std::shared_mutex mu;
  static std::map<KTuple, ConvexPolygon> memo;
  if (ks.empty()) throw Error(Errc::InvalidArgument, "empty tuple");
  {
    std::shared_lock lock(mu);
    auto it = memo.find(ks);
    if (it != memo.end()) return it->second;
  }
  ConvexPolygon result;
  if (ks.size() == 1) {
    result = base_cell(ks[0]);
  } else {
    ConvexPolygon rest = cell(KTuple(ks.begin() + 1, ks.end()));
    ConvexPolygon head = base_cell(ks[0]);
    if (!rest.closure_empty()) {
      Rational ainv[2][2];
      branch_inverse(ks[0], ainv);
      result = intersect(head, map_affine(rest, ainv, kZero));
    }
  }
  std::unique_lock lock(mu);
  return memo.try_emplace(ks, std::move(result)).first->second;
}

std::string format_tuple(const KTuple& ks) {
  std::string s;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ks[i]);
  }
  return s;
}

KTuple parse_tuple(std::string_view text) {
  KTuple out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto part = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    Rational r = parse_rational(part);
    if (r.get_den() != 1 || r < 1) throw Error(Errc::InvalidK, "tuple entries must be positive integers");
    out.push_back(to_int64(r.get_num()));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

CellEnumeration enumerate_cells(const CellQuery& query) { return CellSearch(query).run(); }

CellEnumeration admissible_cells(int level, std::optional<std::pair<Rational, Rational>> x_window,
                                 std::int64_t max_entry) {
  CellQuery q;
  q.level = level;
  q.x_window = std::move(x_window);
  q.max_entry = max_entry;
  q.admissible_only = true;
  return enumerate_cells(q);
}

RatPoint probe_center(const KTuple& ks, const RatPoint& anchor) {
  auto [pr, pr1] = last_coeffs(ks);
  if (pr < 1) throw Error(Errc::InvalidArgument, "probe needs p >= 1");
  return {anchor.x, (Rational(static_cast<long>(pr1)) * anchor.x + anchor.y) / static_cast<long>(pr)};
}

VertexWeight vertex_alpha(const Cell& c, std::size_t vertex_index) {
  const auto& v = c.polygon.vertices();
  if (v.size() < 3) throw Error(Errc::DegenerateCell, "cell (" + format_tuple(c.tuple) + ") has no interior");
  if (vertex_index >= v.size()) throw Error(Errc::InvalidArgument, "vertex index out of range");
  auto [pr, pr1] = last_coeffs(c.tuple);
  const RatPoint& V = v[vertex_index];
  const RatPoint& next = v[(vertex_index + 1) % v.size()];
  const RatPoint& prev = v[(vertex_index + v.size() - 1) % v.size()];
  RatPoint d1{next.x - V.x, next.y - V.y};
  RatPoint d2{prev.x - V.x, prev.y - V.y};
  return {c.tuple, V, cone_clip_area(V, d1, d2, pr, pr1)};
}

Rational checksum(const Cell& c) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.polygon.size(); ++i) s += vertex_alpha(c, i).alpha;
  if (c.polygon.size() < 3) throw Error(Errc::DegenerateCell, "cell has no interior");
  return s;
}

ConvexPolygon u_region(const KTuple& ks) {
  ConvexPolygon c = cell(ks);
  if (c.degenerate()) throw Error(Errc::EmptyCell, "cell (" + format_tuple(ks) + ") is empty");
  auto [pr, pr1] = last_coeffs(ks);
  Rational m[2][2] = {{1, 0}, {Rational(static_cast<long>(-pr1)), Rational(static_cast<long>(pr))}};
  return map_affine(c, m, kZero);
}

TypeShare type_share_prediction(int level, std::int64_t cap) {
  if (cap < 2) throw Error(Errc::InvalidArgument, "cap must be >= 2");
  CellEnumeration e = admissible_cells(level, std::nullopt, cap);
  TypeShare out{0, 2 * e.tail_area_bound};
  for (const auto& c : e.cells) out.share += 2 * area(c.polygon);
  return out;
}

std::string cell_json(const KTuple& ks, const ConvexPolygon& poly) {
  nlohmann::ordered_json j;
  j["tuple"] = ks;
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const auto& v : poly.vertices()) verts.push_back({format_rational(v.x), format_rational(v.y)});
  j["vertices"] = verts;
  return j.dump();
}

}  // namespace farey
