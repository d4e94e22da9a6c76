#include "farey/density.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <thread>

#include "farey/error.hpp"
#include "farey/kernels.hpp"
#include "json.hpp"

namespace farey {

namespace {

void check_unit(const Rational& u, const Rational& v) {
  if (u < 0 || u > 1 || v < 0 || v > 1)
    throw Error(Errc::OutOfDomain, "point outside [0,1]^2: (" + format_rational(u) + "," +
                                       format_rational(v) + ")");
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

template <class Cond>
bool phi(const Rational& u, const Rational& v, Cond c) {
  return c(u, v) || c(v, u);
}

template <class Cond>
bool phi_both(const Rational& u, const Rational& v, Cond c) {
  return c(u, v) && c(v, u);
}

// Number of j >= 1 with j < q.
std::int64_t count_below(const Rational& q) {
  if (q <= 1) return 0;
  return to_int64(ceil_of(q)) - 1;
}

// Upper summation index past which every closed-form term vanishes.
std::int64_t closed_index_bound(const Rational& u, const Rational& v) {
  std::int64_t b = 1;
  for (const Rational& w : {u, v})
    if (w < 1) b = std::max(b, to_int64(floor_of((1 + w) / (1 - w))) + 2);
  return b;
}

Rational r64(std::int64_t n, std::int64_t d = 1) { return rat(n, d); }

}  // namespace

std::string DensityValue::exact() const { return infinite ? "inf" : format_rational(value); }
std::string DensityValue::decimal() const { return infinite ? "inf" : format_decimal(value.get_d()); }
double DensityValue::to_double() const {
  return infinite ? std::numeric_limits<double>::infinity() : value.get_d();
}

Rational harmonic(std::int64_t n) {
  static std::shared_mutex mu;
  static std::vector<Rational> table{Rational(0)};
  if (n < 0) throw Error(Errc::InvalidArgument, "harmonic index must be >= 0");
  {
    std::shared_lock lock(mu);
    if (static_cast<std::size_t>(n) < table.size()) return table[static_cast<std::size_t>(n)];
  }
  std::unique_lock lock(mu);
  while (table.size() <= static_cast<std::size_t>(n)) {
    Rational next = table.back() + rat(1, static_cast<std::int64_t>(table.size()));
    table.push_back(next);
  }
  return table[static_cast<std::size_t>(n)];
}

DensityValue g_closed(const Rational& u, const Rational& v) {
  check_unit(u, v);
  if (u == 1 && v == 1) return DensityValue::inf();
  Rational s = 0;

  // first sum: j < (u+v)/(1 - min(u,v)) for both orderings
  if (u < 1 && v < 1) s += harmonic(count_below((u + v) / (1 - std::min(u, v))));

  // second sum, edge lines (j+1) z + zbar = j inside (j-1)/(j+1) < z < j/(j+2)
  std::set<std::int64_t> edge_js;
  auto edge_j = [&](const Rational& z, const Rational& zb) {
    if (z >= 1) return;
    Rational q = (z + zb) / (1 - z);
    if (!is_integer(q) || q < 1) return;
    std::int64_t j = to_int64(q.get_num());
    if (r64(j - 1, j + 1) < z && z < r64(j, j + 2)) edge_js.insert(j);
  };
  edge_j(u, v);
  edge_j(v, u);
  for (std::int64_t j : edge_js) s += r64(1, 2 * j);
  // second sum, z = 1 with (j-1)/(j+1) < zbar < 1
  if (u == 1 || v == 1) {
    const Rational& zb = u == 1 ? v : u;
    s += harmonic(count_below((1 + zb) / (1 - zb))) / 2;
  }

  // third sum: vertices ((j-1)/(j+1), 1) and the diagonal points j/(j+2)
  if (u == 1 || v == 1) {
    const Rational& z = u == 1 ? v : u;
    Rational q = (1 + z) / (1 - z);
    if (is_integer(q)) {
      std::int64_t j = to_int64(q.get_num());
      s += r64(2 * j + 1, 8 * j * (j + 1));
    }
  }
  if (u == v && u < 1) {
    Rational q = 2 * u / (1 - u);
    if (is_integer(q) && q >= 1) {
      std::int64_t j = to_int64(q.get_num());
      s += r64(j + 2, 4 * j * (j + 1));
    }
  }
  return {false, s};
}

DensityValue closed_component(const Rational& u, const Rational& v, std::int64_t j_lo,
                              std::optional<std::int64_t> j_hi) {
  check_unit(u, v);
  j_lo = std::max<std::int64_t>(j_lo, 1);
  if (u == 1 && v == 1 && !j_hi) return DensityValue::inf();
  std::int64_t hi = closed_index_bound(u, v);
  if (j_hi) hi = std::min(hi, *j_hi);
  Rational s = 0;
  for (std::int64_t j = j_lo; j <= hi; ++j) {
    Rational lo_b = r64(j - 1, j + 1), mid_b = r64(j, j + 2);
    if (phi_both(u, v, [&](const Rational& z, const Rational& zb) {
          return z < 1 && zb < 1 && Rational(j) < (z + zb) / (1 - z);
        }))
      s += r64(1, j);
    int edges = 0;
    edges += phi(u, v, [&](const Rational& z, const Rational& zb) {
      return (j + 1) * z + zb == j && lo_b < z && z < mid_b;
    });
    edges += phi(u, v, [&](const Rational& z, const Rational& zb) {
      return z == 1 && lo_b < zb && zb < 1;
    });
    s += Rational(edges) / (2 * j);
    if (phi(u, v, [&](const Rational& z, const Rational& zb) { return z == lo_b && zb == 1; }))
      s += r64(2 * j + 1, 8 * j * (j + 1));
    if (phi_both(u, v, [&](const Rational& z, const Rational&) { return z == mid_b; }))
      s += r64(j + 2, 4 * j * (j + 1));
    if (phi_both(u, v, [&](const Rational& z, const Rational&) { return z == 1; }))
      s += r64(1, 4 * j);
  }
  return {false, s};
}

DensityValue h_u_closed(const Rational& u, const Rational& v) {
  check_unit(u, v);
  if (u == 1 && v == 1) return DensityValue::inf();
  std::int64_t i_hi = 2 * closed_index_bound(u, v) + 1;
  Rational s = 0;
  for (std::int64_t i = 5; i <= i_hi; i += 2) {
    Rational lo_b = r64(i - 3, i + 1), mid_b = r64(i - 1, i + 3);
    if (phi_both(u, v, [&](const Rational& z, const Rational& zb) {
          return z < 1 && Rational(i) < (z + 2 * zb + 1) / (1 - z);
        }))
      s += r64(2, i - 1);
    int edges = 0;
    edges += phi(u, v, [&](const Rational& z, const Rational& zb) {
      return (i + 1) * z + 2 * zb == i - 1 && lo_b < z && z < mid_b;
    });
    edges += phi(u, v, [&](const Rational& z, const Rational& zb) {
      return z == 1 && lo_b < zb && zb < 1;
    });
    s += Rational(edges) / (i - 1);
    if (phi(u, v, [&](const Rational& z, const Rational& zb) { return z == lo_b && zb == 1; }))
      s += r64(i, 2 * (i - 1) * (i + 1));
    if (phi_both(u, v, [&](const Rational& z, const Rational&) { return z == mid_b; }))
      s += r64(i + 3, 2 * (i - 1) * (i + 1));
  }
  return {false, s};
}

DensityValue g_du_closed(const Rational& u, const Rational& v) {
  check_unit(u, v);
  Rational s = 0;
  if (phi_both(u, v, [](const Rational& z, const Rational& zb) { return z < 1 && 2 * z + zb > 1; }))
    s += 1;
  if (phi(u, v, [](const Rational& z, const Rational& zb) {
        return 2 * z + zb == 1 && 0 < z && z < rat(1, 3);
      }))
    s += rat(1, 2);
  if (phi(u, v, [](const Rational& z, const Rational& zb) { return z == 1 && 0 < zb && zb < 1; }))
    s += rat(1, 2);
  if (phi(u, v, [](const Rational& z, const Rational& zb) { return z == 0 && zb == 1; }))
    s += rat(3, 16);
  if (phi_both(u, v, [](const Rational& z, const Rational&) { return z == rat(1, 3); }))
    s += rat(3, 8);
  if (phi_both(u, v, [](const Rational& z, const Rational&) { return z == 1; })) s += rat(1, 4);
  return {false, s};
}

Rational g_u_tail_closed(const Rational& u, const Rational& v) {
  check_unit(u, v);
  std::int64_t r_hi = 0;
  for (const Rational& z : {u, v})
    if (z > 0) r_hi = std::max(r_hi, to_int64(ceil_of((1 / z + 3) / 2)) + 1);
  Rational s = 0;
  for (std::int64_t r = 5; r <= r_hi; ++r) {
    Rational a = r64(1, 2 * r + 1), b = r64(1, 2 * r - 1), c = r64(1, 2 * r - 3);
    if (phi(u, v, [&](const Rational& z, const Rational& zb) {
          return zb < 1 && 1 < 2 * z + zb && (2 * r - 1) * z + zb < 2 && 2 < (2 * r + 1) * z + zb;
        }))
      s += 1;
    int edges = 0;
    edges += phi(u, v, [&](const Rational& z, const Rational& zb) {
      return (2 * r + 1) * z + zb == 2 && a < z && z < b;
    });
    edges += phi(u, v, [&](const Rational& z, const Rational& zb) {
      return 2 * z + zb == 1 && b < z && z < c;
    });
    edges += phi(u, v, [&](const Rational& z, const Rational& zb) {
      return (2 * r - 1) * z + zb == 2 && b < z && z < c;
    });
    edges += phi(u, v, [&](const Rational& z, const Rational& zb) { return zb == 1 && a < z && z < b; });
    s += Rational(edges) / 2;
    if (phi(u, v, [&](const Rational& z, const Rational& zb) { return z == a && zb == 1; }))
      s += r64(4 * r + 1, 8 * (2 * r + 1));
    if (phi(u, v, [&](const Rational& z, const Rational& zb) {
          return z == b && zb == r64(2 * r - 3, 2 * r - 1);
        }))
      s += r64(14 * r + 9, 16 * (2 * r + 1));
    if (phi(u, v, [&](const Rational& z, const Rational& zb) {
          return z == c && zb == r64(2 * r - 5, 2 * r - 3);
        }))
      s += r64(2 * r - 3, 16 * (2 * r - 1));
    if (phi(u, v, [&](const Rational& z, const Rational& zb) { return z == b && zb == 1; }))
      s += r64(4 * r - 1, 8 * (2 * r - 1));
  }
  return s;
}

void DensityGroups::add(const KTuple& ks, const Rational& c) {
  const std::size_t r = ks.size();
  auto is = [&](std::initializer_list<std::int64_t> t) { return KTuple(t) == ks; };
  if (r == 1) {
    (ks[0] >= 4 ? h1u : ks[0] == 2 ? hd : other) += c;
  } else if (r == 2) {
    if ((ks[0] == 1 && ks[1] >= 5) || (ks[1] == 1 && ks[0] >= 5))
      h2u += c;
    else if (is({1, 3}) || is({3, 1}))
      hd += c;
    else
      other += c;
  } else if (r == 3) {
    if (ks[0] == 1 && ks[2] == 1 && ks[1] >= 6)
      h3u += c;
    else if (is({1, 2, 3}) || is({3, 2, 1}) || is({1, 4, 1}))
      hd += c;
    else
      other += c;
  } else if (r == 4) {
    g4 += c;
  } else {
    gu += c;
  }
}

std::string DensityBreakdown::to_json() const {
  nlohmann::ordered_json j;
  j["point"] = {format_rational(point.x), format_rational(point.y)};
  j["total"] = total.exact();
  j["decimal"] = total.decimal();
  nlohmann::ordered_json terms_j = nlohmann::ordered_json::array();
  for (const auto& t : terms) {
    nlohmann::ordered_json e;
    e["tuple"] = t.tuple;
    e["location"] = location_name(t.location);
    e["contribution"] = format_rational(t.contribution);
    terms_j.push_back(e);
  }
  j["terms"] = terms_j;
  nlohmann::ordered_json g;
  g["h1u"] = format_rational(groups.h1u);
  g["h2u"] = format_rational(groups.h2u);
  g["h3u"] = format_rational(groups.h3u);
  g["hu"] = format_rational(groups.hu());
  g["hd"] = format_rational(groups.hd);
  g["g4"] = format_rational(groups.g4);
  g["gu"] = format_rational(groups.gu);
  g["gdu"] = format_rational(groups.gdu());
  j["groups"] = g;
  return j.dump(2);
}

namespace {

// Sum of the level terms for lo <= r <= hi, found in one windowed cell search.
Rational level_range(int lo, int hi, const Rational& u0, const Rational& v0, DensityBreakdown* breakdown) {
  // every level is symmetric in (u,v); the strip x = 1 is unbounded, x = v is not
  Rational u = u0, v = v0;
  if (u == 1) std::swap(u, v);
  if (u == 0 || v == 0) return 0;  // centers (0, v/p) with v < 1 miss every cell closure
  CellQuery q;
  q.level = hi;
  q.min_level = lo;
  q.x_window = std::make_pair(u, u);
  q.admissible_only = true;
  CellEnumeration e = enumerate_cells(q);
  Rational total = 0;
  std::vector<DensityTerm> terms;
  for (const auto& c : e.cells) {
    RatPoint center = probe_center(c.tuple, {u, v});
    PointLocation loc = locate(c.polygon, center);
    std::int64_t p = p_value(c.tuple);
    Rational contrib = 0;
    switch (loc.tag) {
      case LocationTag::Interior: contrib = rat(2, p); break;
      case LocationTag::OnEdge: contrib = rat(1, p); break;
      case LocationTag::AtVertex: contrib = vertex_alpha(c, loc.index).alpha / 2; break;
      case LocationTag::Outside: break;
    }
    if (contrib == 0) continue;
    total += contrib;
    if (breakdown) terms.push_back({c.tuple, loc, contrib});
  }
  if (breakdown) {
    std::stable_sort(terms.begin(), terms.end(), [](const DensityTerm& a, const DensityTerm& b) {
      return a.tuple.size() != b.tuple.size() ? a.tuple.size() < b.tuple.size() : a.tuple < b.tuple;
    });
    for (auto& t : terms) {
      breakdown->groups.add(t.tuple, t.contribution);
      breakdown->terms.push_back(std::move(t));
    }
  }
  return total;
}

}  // namespace

Rational g_level(int r, const Rational& u0, const Rational& v0, DensityBreakdown* breakdown) {
  check_unit(u0, v0);
  if (r < 1) throw Error(Errc::InvalidArgument, "level must be >= 1");
  if ((u0 == 1 && v0 == 1) || (u0 == 0 && v0 == 1) || (u0 == 1 && v0 == 0))
    throw Error(Errc::OutOfDomain, "level sums do not terminate at this corner");
  return level_range(r, r, u0, v0, breakdown);
}

int level_bound(const Rational& m) {
  if (m <= 0) throw Error(Errc::InvalidArgument, "level bound needs a positive coordinate");
  Rational b = 1 / (2 * m) + 3;
  if (b < 3) b = 3;
  return static_cast<int>(to_int64(ceil_of(b)));
}

DensityValue g_sum(const Rational& u, const Rational& v, std::optional<int> r_max,
                   DensityBreakdown* breakdown) {
  check_unit(u, v);
  if (breakdown) breakdown->point = {u, v};
  if ((u == 1 && v == 1) || (u == 0 && v == 1) || (u == 1 && v == 0)) {
    DensityValue d = g_closed(u, v);
    if (breakdown) breakdown->total = d;
    return d;
  }
  Rational m = std::min(u, v);
  if (m == 0) {
    if (breakdown) breakdown->total = {};
    return {};
  }
  int bound = level_bound(m);
  if (r_max && *r_max < bound)
    throw Error(Errc::TruncationUnsound, "level cap " + std::to_string(*r_max) +
                                             " is below the strip bound " + std::to_string(bound));
  int levels = r_max ? *r_max : bound;
  DensityValue d{false, level_range(1, levels, u, v, breakdown)};
  if (breakdown) breakdown->total = d;
  return d;
}

const char* support_name(SupportClass s) {
  switch (s) {
    case SupportClass::Interior: return "interior";
    case SupportClass::Boundary: return "boundary";
    case SupportClass::Outside: return "outside";
  }
  return "?";
}

ConvexPolygon support_region() {
  return ConvexPolygon::from_vertices({{rat(1, 3), rat(1, 3)}, {1, 0}, {1, 1}, {0, 1}});
}

SupportClass support_contains(const Rational& u, const Rational& v) {
  if (u < 0 || u > 1 || v < 0 || v > 1) return SupportClass::Outside;
  std::array<Rational, 4> slack = {1 - u, 1 - v, 2 * u + v - 1, u + 2 * v - 1};
  bool strict = true;
  for (const auto& s : slack) {
    if (s < 0) return SupportClass::Outside;
    if (s == 0) strict = false;
  }
  return strict ? SupportClass::Interior : SupportClass::Boundary;
}

ConvexPolygon puzzle_region(std::int64_t i) {
  if (i < 3 || i % 2 == 0) throw Error(Errc::InvalidParity, "puzzle index must be odd and >= 3");
  return ConvexPolygon::from_vertices({{rat(i - 1, i + 3), rat(i - 1, i + 3)},
                                       {1, rat(i - 3, i + 1)},
                                       {1, 1},
                                       {rat(i - 3, i + 1), 1}});
}

namespace {

struct IntHalfPlane {
  __int128 a, b, c;  // a U + b V + c N >= 0
};

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t out;
  if (__builtin_mul_overflow(a / g, b, &out)) throw Error(Errc::Overflow, "grid denominator too large");
  return out;
}

std::int64_t den64(const Rational& q) { return to_int64(BigInt(q.get_den())); }

// Fraction of the square [cu-hu, cu+hu] x [cv-hv, cv+hv] covered by the
// half-planes; coordinates are shifted to the square center for accuracy.
double covered_fraction(const std::vector<IntHalfPlane>& hps, std::int64_t cu, std::int64_t cv,
                        std::int64_t hu, std::int64_t hv, std::int64_t n) {
  std::vector<std::array<double, 2>> poly = {{-double(hu), -double(hv)},
                                             {double(hu), -double(hv)},
                                             {double(hu), double(hv)},
                                             {-double(hu), double(hv)}};
  for (const auto& h : hps) {
    // value at center is exact in 128 bits; the offsets are small
    double c0 = static_cast<double>(h.a * cu + h.b * cv + h.c * n);
    double a = static_cast<double>(h.a), b = static_cast<double>(h.b);
    std::vector<std::array<double, 2>> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& p = poly[i];
      const auto& q = poly[(i + 1) % poly.size()];
      double sp = a * p[0] + b * p[1] + c0, sq = a * q[0] + b * q[1] + c0;
      if (sp >= 0) out.push_back(p);
      if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
        double t = sp / (sp - sq);
        out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
      }
    }
    poly = std::move(out);
    if (poly.size() < 3) return 0;
  }
  double a2 = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    a2 += p[0] * q[1] - p[1] * q[0];
  }
  return std::clamp(a2 / 2 / (4.0 * double(hu) * double(hv)), 0.0, 1.0);
}

}  // namespace

double integrate_g(const ConvexPolygon& region_in, std::int64_t n, const IntegrationOptions& opt) {
  if (n < 16) throw Error(Errc::InvalidArgument, "integration grid needs n >= 16");
  ConvexPolygon region = intersect(region_in, ConvexPolygon::box(0, 0, 1, 1));
  if (region.degenerate()) return 0;
  Rational x0 = region.min_x(), x1 = region.max_x(), y0 = region.min_y(), y1 = region.max_y();
  std::int64_t L = 1;
  for (const Rational& q : {x0, x1, y0, y1}) L = lcm64(L, den64(q));
  std::int64_t N;
  if (__builtin_mul_overflow(2 * n, L, &N) || N >= kernels::kMaxDenominator)
    throw Error(Errc::Overflow, "integration grid denominator too large");
  const std::int64_t hu = to_int64(BigInt(Rational((x1 - x0) * L).get_num()));
  const std::int64_t hv = to_int64(BigInt(Rational((y1 - y0) * L).get_num()));
  const std::int64_t ubase = to_int64(BigInt(Rational(x0 * N).get_num()));
  const std::int64_t vbase = to_int64(BigInt(Rational(y0 * N).get_num()));

  std::vector<IntHalfPlane> hps;
  for (const auto& h : region.half_planes()) {
    if (h.strict) continue;
    BigInt d = lcm(lcm(BigInt(h.a.get_den()), BigInt(h.b.get_den())), BigInt(h.c.get_den()));
    BigInt a(Rational(h.a * d)), b(Rational(h.b * d)), c(Rational(h.c * d));
    hps.push_back({to_int64(a), to_int64(b), to_int64(c)});
  }

  // largest index at the top-right midpoint; H_J grows without bound near (1,1)
  std::int64_t umax = ubase + (2 * n - 1) * hu, vmax = vbase + (2 * n - 1) * hv;
  std::int64_t jmax = (umax + vmax) / std::max<std::int64_t>(1, N - std::min(umax, vmax)) + 2;
  std::vector<double> H(static_cast<std::size_t>(jmax + 1), 0.0);
  for (std::size_t j = 1; j < H.size(); ++j) H[j] = H[j - 1] + 1.0 / static_cast<double>(j);

  auto point_value = [&](std::int64_t U, std::int64_t V) -> double {
    std::int64_t b = N - std::min(U, V);
    std::int64_t s = U + V;
    if (s % b != 0) return H[static_cast<std::size_t>((s - 1) / b)];
    // on a jump line: shift by half a subcell, else evaluate exactly
    std::int64_t U2 = U + hu, V2 = V + hv;
    if (U2 < N && V2 < N) {
      std::int64_t b2 = N - std::min(U2, V2), s2 = U2 + V2;
      std::int64_t j2 = (s2 - 1) / b2;
      if (s2 % b2 != 0 && j2 < static_cast<std::int64_t>(H.size())) return H[static_cast<std::size_t>(j2)];
    }
    return g_closed(rat(U, N), rat(V, N)).to_double();
  };

  std::vector<double> row_sums(static_cast<std::size_t>(n), 0.0);
  auto do_row = [&](std::int64_t r) {
    std::int64_t V = vbase + (2 * r + 1) * hv;
    kernels::HarmonicRow row{ubase + hu, 2 * hu, V, N, static_cast<std::size_t>(n)};
    std::vector<std::int32_t> J(row.count);
    std::vector<std::uint8_t> line(row.count);
    kernels::harmonic_index_row(row, J.data(), line.data());
    double acc = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      std::int64_t U = row.u0 + row.du * i;
      int inside = 0, outside = 0;
      bool partial = false;
      for (const auto& h : hps) {
        int pos = 0, neg = 0;
        for (int cu = -1; cu <= 1; cu += 2)
          for (int cv = -1; cv <= 1; cv += 2) {
            __int128 val = h.a * (U + cu * hu) + h.b * (V + cv * hv) + h.c * N;
            if (val > 0) ++pos;
            if (val < 0) ++neg;
          }
        if (neg == 0) {
          ++inside;
        } else if (pos == 0) {
          ++outside;
          break;
        } else {
          partial = true;
        }
      }
      if (outside) continue;
      double w = partial ? covered_fraction(hps, U, V, hu, hv, N) : 1.0;
      if (w == 0) continue;
      double g = line[static_cast<std::size_t>(i)] ? point_value(U, V)
                                                   : H[static_cast<std::size_t>(J[static_cast<std::size_t>(i)])];
      acc += w * g;
    }
    row_sums[static_cast<std::size_t>(r)] = acc;
  };

  int threads = std::max(1, opt.threads);
  if (threads == 1) {
    for (std::int64_t r = 0; r < n; ++r) do_row(r);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::int64_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        try {
          for (std::int64_t r = next++; r < n; r = next++) do_row(r);
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (!err) err = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  double total = 0;
  for (double s : row_sums) total += s;
  double cell = Rational((x1 - x0) * (y1 - y0)).get_d() / static_cast<double>(n) / static_cast<double>(n);
  return total * cell;
}

void write_density_grid(std::ostream& os, std::int64_t n, int threads) {
  if (n < 2) throw Error(Errc::InvalidArgument, "density grid needs n >= 2");
  std::vector<std::string> rows(static_cast<std::size_t>(n));
  auto do_row = [&](std::int64_t i) {
    std::string s;
    Rational u = rat(i, n - 1);
    std::string us = format_decimal(u.get_d());
    for (std::int64_t j = 0; j < n; ++j) {
      Rational v = rat(j, n - 1);
      s += us;
      s += ',';
      s += format_decimal(v.get_d());
      s += ',';
      s += g_closed(u, v).decimal();
      s += '\n';
    }
    rows[static_cast<std::size_t>(i)] = std::move(s);
  };
  threads = std::max(1, threads);
  std::vector<std::thread> pool;
  std::atomic<std::int64_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      try {
        for (std::int64_t i = next++; i < n; i = next++) do_row(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  os << "u,v,g\n";
  for (const auto& r : rows) os << r;
}

}  // namespace farey
