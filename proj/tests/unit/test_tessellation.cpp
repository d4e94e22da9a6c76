#include <map>
#include <random>
#include <set>
#include <thread>

#include "doctest.h"
#include "farey/error.hpp"
#include "farey/sequence.hpp"
#include "farey/tessellation.hpp"

using namespace farey;

namespace {

ConvexPolygon poly(std::vector<RatPoint> v) { return ConvexPolygon::from_vertices(std::move(v)); }

std::set<RatPoint> vset(const ConvexPolygon& p) { return {p.vertices().begin(), p.vertices().end()}; }

std::set<KTuple> tuples(const CellEnumeration& e) {
  std::set<KTuple> out;
  for (const auto& c : e.cells) out.insert(c.tuple);
  return out;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

KTuple twos(std::int64_t first, std::int64_t last, int r) {
  KTuple t(static_cast<std::size_t>(r), 2);
  t.front() = first;
  t.back() = last;
  return t;
}

Rational alpha_at(const KTuple& t, const RatPoint& v) {
  Cell c{t, cell(t)};
  const auto& vs = c.polygon.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == v) return vertex_alpha(c, i).alpha;
  FAIL("vertex not found");
  return 0;
}

}  // namespace

TEST_CASE("index polynomial") {
  for (int r = 2; r <= 30; ++r) {
    CHECK(p_value(twos(1, 3, r)) == 2);
    KTuple t(static_cast<std::size_t>(r), 2);
    t.back() = 3;
    CHECK(p_value(t) == 2 * r + 1);
  }
  CHECK(p_value({1, 4, 1}) == 2);
  CHECK(p_value({7}) == 7);
  CHECK(code_of([] { p_value(KTuple(80, 1000)); }) == Errc::Overflow);
  CHECK(code_of([] { p_value({2, 0}); }) == Errc::InvalidK);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    KTuple t(1 + rng() % 8);
    for (auto& k : t) k = 1 + static_cast<std::int64_t>(rng() % 9);
    KTuple rev(t.rbegin(), t.rend());
    REQUIRE(p_value(t) == p_value(rev));
  }
}

TEST_CASE("admissibility") {
  CHECK(admissible({2}));
  CHECK_FALSE(admissible({3}));
  CHECK(admissible({1, 3}));
  CHECK(admissible({3, 2, 2, 1}));
  CHECK_FALSE(admissible({1, 3, 1}));
  CHECK_FALSE(admissible({2, 1}));
  CHECK_FALSE(admissible({}));
}

TEST_CASE("last coefficients") {
  for (int r = 2; r <= 12; ++r) {
    CHECK(last_coeffs(twos(1, 3, r)) == std::pair<std::int64_t, std::int64_t>{2, 2 * r - 1});
    CHECK(last_coeffs(twos(3, 1, r)) == std::pair<std::int64_t, std::int64_t>{2, 1});
  }
  CHECK(last_coeffs({6}) == std::pair<std::int64_t, std::int64_t>{6, 1});
  // the last denominator of an actual chain
  const std::int64_t Q = 97;
  auto f = enumerate(Q, Subset::All, Interval::unit());
  for (std::size_t i = 0; i + 6 < f.size(); i += 5) {
    auto c = chain(Q, f[i].den, f[i + 1].den, 5);
    KTuple ks(c.ks.begin(), c.ks.end());
    auto [pr, pr1] = last_coeffs(ks);
    REQUIRE(c.dens.back() == pr * c.dens[1] - pr1 * c.dens[0]);
  }
}

TEST_CASE("the map and its inverse") {
  CHECK(t_map(pt(1, 3, 2, 3)) == pt(2, 3, 1, 1));
  CHECK(t_map(pt(1, 1, 1, 1)) == pt(1, 1, 1, 1));
  // the inverse lands in the half-open triangle
  CHECK(t_inv(pt(2, 3, 1, 1)) == pt(1, 1, 2, 3));
  CHECK(code_of([] { t_map(pt(1, 1, 0, 1)); }) == Errc::OutsideDomain);
  CHECK(code_of([] { t_inv(pt(1, 2, 1, 2)); }) == Errc::OutsideDomain);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 300);
    RatPoint p{rat(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d)), d),
               rat(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d)), d)};
    if (p.x + p.y <= 1) continue;
    RatPoint q = t_map(p);
    REQUIRE(farey_triangle().contains(q));
    REQUIRE(t_inv(q) == p);
  }
}

TEST_CASE("base cells") {
  CHECK(vset(base_cell(1)) == vset(poly({pt(0, 1, 1, 1), pt(1, 3, 2, 3), pt(1, 1, 1, 1)})));
  CHECK(vset(base_cell(2)) == vset(poly({pt(1, 3, 2, 3), pt(1, 2, 1, 2), pt(1, 1, 2, 3), pt(1, 1, 1, 1)})));
  for (std::int64_t k = 2; k <= 30; ++k)
    CHECK(vset(base_cell(k)) ==
          vset(poly({pt(k - 1, k + 1, 2, k + 1), pt(k, k + 2, 2, k + 2), pt(1, 1, 2, k + 1), pt(1, 1, 2, k)})));
  Rational s = 0;
  for (std::int64_t k = 1; k <= 400; ++k) s += area(base_cell(k));
  // the remainder is {401 y <= 1 + x}
  CHECK(s == rat(1, 2) - area(clip(farey_triangle(), half_plane(1, -401, 1))));
  CHECK(code_of([] { base_cell(0); }) == Errc::InvalidK);
}

TEST_CASE("cells by recursion") {
  CHECK(vset(cell({1, 3})) == vset(poly({pt(1, 5, 4, 5), pt(2, 7, 5, 7), pt(1, 2, 1, 1), pt(1, 3, 1, 1)})));
  CHECK(vset(cell({1, 6, 1})) == vset(poly({pt(3, 7, 5, 7), pt(1, 2, 3, 4), pt(5, 7, 1, 1), pt(2, 3, 1, 1)})));
  CHECK(vset(cell({1, 2, 4, 1})) == vset(poly({pt(1, 5, 4, 5), pt(1, 3, 1, 1), pt(2, 7, 1, 1)})));
  CHECK(cell({6, 2}).empty());
  CHECK(cell({8, 3}).empty());
  CHECK(cell({1, 3}) == cell({1, 3}));
}

TEST_CASE("cells are built safely from several threads") {
  std::vector<std::thread> ts;
  std::vector<ConvexPolygon> got(8);
  for (int i = 0; i < 8; ++i)
    ts.emplace_back([&, i] { got[static_cast<std::size_t>(i)] = cell(twos(1, 3, 9 + i % 3)); });
  for (auto& t : ts) t.join();
  for (int i = 0; i < 8; ++i) CHECK(got[static_cast<std::size_t>(i)] == cell(twos(1, 3, 9 + i % 3)));
}

TEST_CASE("admissible cells per level") {
  std::set<KTuple> two = tuples(admissible_cells(2, std::nullopt, 41));
  std::set<KTuple> want;
  for (std::int64_t l = 3; l <= 41; l += 2) want.insert({1, l});
  for (std::int64_t k = 3; k <= 41; k += 2) want.insert({k, 1});
  CHECK(two == want);
  CHECK(tuples(admissible_cells(4)) == std::set<KTuple>{{1, 2, 2, 3}, {1, 2, 4, 1}, {1, 4, 2, 1}, {3, 2, 2, 1}});
  CHECK(tuples(admissible_cells(7)) == std::set<KTuple>{twos(1, 3, 7), twos(3, 1, 7)});
  CHECK(code_of([] { admissible_cells(1); }) == Errc::TruncationUnsound);
  auto capped = admissible_cells(1, std::nullopt, 10);
  CHECK(capped.truncated);
  CHECK(capped.tail_area_bound > 0);
}

TEST_CASE("windowed cells meet the strip") {
  for (auto [lo, hi] : std::vector<std::pair<Rational, Rational>>{
           {rat(7, 10), rat(7, 10)}, {rat(1, 5), rat(1, 5)}, {rat(1, 9), rat(1, 7)}, {rat(1, 100), rat(1, 50)}}) {
    for (int r = 2; r <= 6; ++r) {
      auto w = admissible_cells(r, std::make_pair(lo, hi));
      for (const auto& c : w.cells) REQUIRE(!intersect(c.polygon, ConvexPolygon::box(lo, 0, hi, 1)).closure_empty());
      if (r >= 4) {
        std::set<KTuple> all;
        for (const auto& c : admissible_cells(r).cells)
          if (!intersect(c.polygon, ConvexPolygon::box(lo, 0, hi, 1)).closure_empty()) all.insert(c.tuple);
        REQUIRE(tuples(w) == all);
      }
    }
  }
  CHECK(admissible_cells(6, std::make_pair(rat(7, 10), rat(7, 10))).cells.empty());
}

TEST_CASE("one pass over a level range equals the single levels") {
  for (auto u : {rat(1, 23), rat(3, 10), rat(1, 7), rat(2, 3)}) {
    CellQuery q;
    q.level = 14;
    q.min_level = 1;
    q.x_window = std::make_pair(u, u);
    auto range = enumerate_cells(q);
    std::set<KTuple> want;
    for (int r = 1; r <= 14; ++r)
      for (const auto& c : admissible_cells(r, std::make_pair(u, u)).cells) want.insert(c.tuple);
    CHECK(tuples(range) == want);
    CHECK(range.cells.size() == want.size());
  }
}

TEST_CASE("cells of all tuples tile the triangle") {
  // Every point of T belongs to exactly the cell named by its orbit.
  std::vector<CellEnumeration> levels;
  for (int r = 1; r <= 3; ++r) {
    CellQuery q;
    q.level = r;
    q.max_entry = 60;
    q.admissible_only = false;
    levels.push_back(enumerate_cells(q));
  }
  std::mt19937_64 rng(3);
  int tested = 0;
  while (tested < 150) {
    std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 200);
    RatPoint p{rat(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d)), d),
               rat(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d)), d)};
    if (p.x + p.y <= 1) continue;
    KTuple orbit;
    RatPoint z = p;
    bool in_range = true;
    for (int r = 0; r < 3; ++r) {
      std::int64_t k = to_int64(floor_of((1 + z.x) / z.y));
      in_range &= k <= 60;
      orbit.push_back(k);
      z = t_map(z);
    }
    if (!in_range) continue;
    ++tested;
    for (int r = 1; r <= 3; ++r) {
      KTuple prefix(orbit.begin(), orbit.begin() + r);
      int hits = 0;
      for (const auto& c : levels[static_cast<std::size_t>(r - 1)].cells)
        if (c.polygon.contains(p)) {
          ++hits;
          REQUIRE(c.tuple == prefix);
        }
      REQUIRE(hits == 1);
    }
  }
}

TEST_CASE("cell areas of a level sum to the triangle up to the dropped tail") {
  for (int r = 1; r <= 3; ++r) {
    CellQuery q;
    q.level = r;
    q.max_entry = 200;
    q.admissible_only = false;
    auto e = enumerate_cells(q);
    Rational s = 0;
    for (const auto& c : e.cells) s += area(c.polygon);
    CHECK(s <= rat(1, 2));
    CHECK(s + e.tail_area_bound >= rat(1, 2));
  }
}

TEST_CASE("cells of one level have disjoint interiors") {
  for (auto [r, cap] : std::vector<std::pair<int, std::int64_t>>{{1, 80}, {2, 40}, {3, 16}}) {
    CellQuery q;
    q.level = r;
    q.max_entry = cap;
    q.admissible_only = false;
    auto cells = enumerate_cells(q).cells;
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        const auto& a = cells[i].polygon;
        const auto& b = cells[j].polygon;
        if (a.max_x() <= b.min_x() || b.max_x() <= a.min_x() || a.max_y() <= b.min_y() || b.max_y() <= a.min_y())
          continue;
        REQUIRE(area(intersect(a, b)) == 0);
      }
  }
}

TEST_CASE("cell areas reach one half within 1e-6 once entries up to 4000 are kept") {
  for (int r = 1; r <= 5; ++r) {
    CellQuery q;
    q.level = r;
    q.max_entry = 4000;
    q.admissible_only = false;
    auto e = enumerate_cells(q);
    Rational s = 0;
    for (const auto& c : e.cells) s += area(c.polygon);
    CHECK(s <= rat(1, 2));
    CHECK(to_double(rat(1, 2) - s) < 1e-6);
  }
}

TEST_CASE("consecutive denominators land in their index cell") {
  std::map<std::int64_t, ConvexPolygon> cells;
  for (std::int64_t Q = 2; Q <= 200; ++Q) {
    auto f = enumerate(Q, Subset::All, Interval::unit());
    for (std::size_t i = 0; i + 2 < f.size(); ++i) {
      std::int64_t k = index_of(Q, f[i].den, f[i + 1].den);
      auto it = cells.try_emplace(k, base_cell(k)).first;
      REQUIRE(it->second.contains({rat(f[i].den, Q), rat(f[i + 1].den, Q)}));
    }
  }
}

TEST_CASE("probe centers") {
  CHECK(probe_center({2}, pt(7, 10, 9, 10)) == pt(7, 10, 4, 5));
  auto u = rat(1, 5), v = rat(3, 7);
  CHECK(probe_center({1, 3}, {u, v}) == RatPoint{u, (3 * u + v) / 2});
  // anchor on the image line maps back to the cell point
  KTuple t = {1, 4, 1};
  auto [pr, pr1] = last_coeffs(t);
  RatPoint c = pt(3, 7, 5, 7);
  RatPoint anchor{c.x, static_cast<long>(pr) * c.y - static_cast<long>(pr1) * c.x};
  CHECK(probe_center(t, anchor) == c);
}

TEST_CASE("vertex weights") {
  for (std::int64_t k = 2; k <= 12; k += 2) CHECK(alpha_at({k}, pt(1, 1, 2, k)) == rat(1, k));
  CHECK(alpha_at({1, 2, 2, 3}, pt(1, 5, 1, 1)) == rat(5, 56));
  CHECK(alpha_at({1, 6, 1}, pt(3, 7, 5, 7)) == rat(11, 60));
  Cell seg{{9}, ConvexPolygon::box(0, 0, 1, 0)};
  CHECK(code_of([&] { vertex_alpha(seg, 0); }) == Errc::DegenerateCell);
}

TEST_CASE("checksums") {
  CHECK(checksum({{1, 6, 1}, cell({1, 6, 1})}) == 1);
  CHECK(checksum({{1, 2, 4, 1}, cell({1, 2, 4, 1})}) == 1);
  CHECK(checksum({{2}, cell({2})}) == 2);
  for (int r = 1; r <= 8; ++r)
    for (const auto& c : admissible_cells(r, std::nullopt, 25).cells)
      REQUIRE(checksum(c) == rat(c.polygon.size() == 3 ? 2 : 4, p_value(c.tuple)));
}

TEST_CASE("image regions") {
  CHECK(vset(u_region({2})) == vset(poly({pt(1, 3, 1, 1), pt(1, 2, 1, 2), pt(1, 1, 1, 3), pt(1, 1, 1, 1)})));
  CHECK(vset(u_region({1, 3})) == vset(poly({pt(1, 5, 1, 1), pt(2, 7, 4, 7), pt(1, 2, 1, 2), pt(1, 3, 1, 1)})));
  CHECK(vset(u_region({1, 2, 2, 3})) == vset(poly({pt(1, 9, 1, 1), pt(1, 7, 5, 7), pt(1, 5, 3, 5), pt(1, 7, 1, 1)})));
  CHECK(code_of([] { u_region({6, 2}); }) == Errc::EmptyCell);
}

TEST_CASE("type share prediction") {
  auto s = type_share_prediction(1, 200);
  Rational want = 0;
  for (std::int64_t k = 2; k <= 200; k += 2) want += 2 * area(base_cell(k));
  CHECK(s.share == want);
  CHECK(s.tail_bound > 0);
  Rational total = 0;
  for (int r = 1; r <= 12; ++r) total += type_share_prediction(r, 200).share;
  CHECK(total < 1);
  CHECK(total > rat(99, 100));
}

TEST_CASE("tuple text and cell json") {
  CHECK(format_tuple({1, 2, 3}) == "1,2,3");
  CHECK(parse_tuple("1,20,3") == KTuple{1, 20, 3});
  CHECK(code_of([] { parse_tuple("1,0"); }) == Errc::InvalidK);
  CHECK(cell_json({2}, cell({2})).find("\"tuple\":[2]") != std::string::npos);
  CHECK(cell_json({2}, cell({2})).find("\"1/2\"") != std::string::npos);
}
