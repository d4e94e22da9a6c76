#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "farey/density.hpp"
#include "farey/error.hpp"

using namespace farey;

namespace {

DensityValue G(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return g_closed(rat(a, b), rat(c, d)); }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

bool corner(const Rational& u, const Rational& v) {
  return (u == 1 && v == 1) || (u == 0 && v == 1) || (u == 1 && v == 0);
}

}  // namespace

TEST_CASE("closed form values") {
  CHECK(G(0, 1, 1, 1).value == rat(3, 16));
  CHECK(G(1, 1, 0, 1).value == rat(3, 16));
  CHECK(G(1, 1, 1, 1).infinite);
  CHECK(G(9, 10, 19, 20).value == harmonic(18));
  CHECK(G(1, 2, 1, 2).value == rat(7, 6));
  CHECK(G(1, 5, 3, 5).value == rat(1, 2));
  CHECK(G(1, 1, 4, 5).value == harmonic(8) / 2 + rat(19, 720));
  CHECK(G(1, 3, 1, 3).value == rat(3, 8));
  CHECK(G(2, 7, 4, 7).value == 1);
  CHECK(G(1, 10, 1, 10).value == 0);
  CHECK(code_of([] { g_closed(rat(-1, 2), 0); }) == Errc::OutOfDomain);
  CHECK(code_of([] { g_closed(0, rat(3, 2)); }) == Errc::OutOfDomain);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(4) == rat(25, 12));
}

TEST_CASE("value formatting") {
  CHECK(DensityValue::inf().exact() == "inf");
  CHECK(DensityValue::inf().decimal() == "inf");
  DensityValue d{false, rat(3, 16)};
  CHECK(d.exact() == "3/16");
  CHECK(d.decimal() == "0.1875");
  CHECK(d.to_double() == 0.1875);
}

TEST_CASE("level terms") {
  DensityBreakdown b;
  CHECK(g_level(1, rat(7, 10), rat(9, 10), &b) > 0);
  bool saw = false;
  for (const auto& t : b.terms)
    if (t.tuple == KTuple{2}) {
      saw = true;
      CHECK(t.location.tag == LocationTag::Interior);
      CHECK(t.contribution == 1);
    }
  CHECK(saw);

  DensityBreakdown h;
  g_level(2, rat(1, 2), rat(1, 2), &h);
  bool vertex = false;
  for (const auto& t : h.terms)
    if (t.tuple == KTuple{1, 3}) {
      vertex = true;
      CHECK(t.location.tag == LocationTag::AtVertex);
      CHECK(t.contribution == rat(1, 6));
    }
  CHECK(vertex);

  CHECK(g_level(6, rat(7, 10), rat(9, 10)) == 0);
  CHECK(code_of([] { g_level(3, 1, 1); }) == Errc::OutOfDomain);
  CHECK(g_level(2, 0, rat(1, 2)) == 0);
}

TEST_CASE("terms add up to the total") {
  for (auto [u, v] : std::vector<std::pair<Rational, Rational>>{
           {rat(7, 10), rat(9, 10)}, {rat(1, 3), rat(1, 3)}, {rat(1, 9), rat(5, 7)}, {rat(3, 4), 1}}) {
    DensityBreakdown b;
    DensityValue s = g_sum(u, v, std::nullopt, &b);
    Rational t = 0;
    for (const auto& term : b.terms) {
      t += term.contribution;
      std::int64_t p = p_value(term.tuple);
      if (term.location.tag == LocationTag::Interior) CHECK(term.contribution == rat(2, p));
      if (term.location.tag == LocationTag::OnEdge) CHECK(term.contribution == rat(1, p));
    }
    CHECK(t == s.value);
    CHECK(b.total == s);
    CHECK(b.to_json().find("\"terms\"") != std::string::npos);
  }
}

TEST_CASE("level sums agree with the closed form") {
  std::vector<std::pair<Rational, Rational>> pts = {
      {rat(7, 10), rat(9, 10)}, {rat(9, 10), rat(19, 20)}, {rat(1, 2), rat(1, 2)}, {rat(1, 5), rat(3, 5)},
      {1, rat(4, 5)},           {rat(2, 7), rat(4, 7)},    {rat(1, 3), rat(1, 3)}, {0, 1},
      {1, 1},                   {1, 0},                    {rat(1, 7), rat(1, 1)}, {rat(3, 11), rat(8, 9)}};
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 300);
    pts.push_back({rat(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d + 1)), d),
                   rat(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d + 1)), d)});
  }
  for (auto [u, v] : pts) {
    DensityValue c = g_closed(u, v);
    REQUIRE(g_sum(u, v) == c);
    REQUIRE(closed_component(u, v, 1, std::nullopt) == c);
    REQUIRE(g_closed(v, u) == c);
  }
}

TEST_CASE("component groups match their closed forms") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 100) {
    std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 200);
    Rational u = rat(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d + 1)), d);
    Rational v = rat(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d + 1)), d);
    if (corner(u, v)) continue;
    ++checked;
    DensityBreakdown b;
    g_sum(u, v, std::nullopt, &b);
    REQUIRE(b.groups.other == 0);
    REQUIRE(b.groups.hu() == h_u_closed(u, v).value);
    REQUIRE(h_u_closed(u, v) == closed_component(u, v, 2, std::nullopt));
    REQUIRE(b.groups.gdu() == g_du_closed(u, v).value);
    REQUIRE(b.groups.gu == g_u_tail_closed(u, v));
  }
}

TEST_CASE("truncation bound") {
  CHECK(level_bound(rat(1, 2)) == 4);
  CHECK(level_bound(1) == 4);
  CHECK(level_bound(rat(1, 20)) == 13);
  CHECK(code_of([] { g_sum(rat(1, 20), rat(1, 2), 5); }) == Errc::TruncationUnsound);
  CHECK(g_sum(rat(1, 20), rat(19, 20), 40) == g_sum(rat(1, 20), rat(19, 20)));
  for (auto [u, v] : std::vector<std::pair<Rational, Rational>>{
           {rat(1, 20), rat(19, 20)}, {rat(1, 9), 1}, {rat(2, 5), rat(3, 5)}, {rat(1, 11), rat(10, 11)}}) {
    int R = level_bound(std::min(u, v));
    for (int r = R + 1; r <= R + 5; ++r) REQUIRE(g_level(r, u, v) == 0);
  }
}

TEST_CASE("staircase toward the divergent corner") {
  Rational prev = 0;
  for (std::int64_t m = 2; m <= 60; ++m) {
    DensityValue g = G(m - 1, m, m - 1, m);
    REQUIRE(!g.infinite);
    REQUIRE(g.value >= prev);
    prev = g.value;
  }
}

TEST_CASE("support") {
  CHECK(support_contains(rat(1, 2), rat(1, 2)) == SupportClass::Interior);
  CHECK(support_contains(rat(1, 5), rat(3, 5)) == SupportClass::Boundary);
  CHECK(support_contains(rat(1, 10), rat(1, 10)) == SupportClass::Outside);
  CHECK(support_contains(2, rat(1, 2)) == SupportClass::Outside);
  CHECK(std::string(support_name(SupportClass::Boundary)) == "boundary");
  CHECK(intersect(support_region(), puzzle_region(3)) == support_region());
  CHECK(area(support_region()) == area(puzzle_region(3)));

  std::mt19937_64 rng(23);
  int inside = 0, outside = 0;
  while (inside < 2000 || outside < 2000) {
    std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 999);
    Rational u = rat(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d + 1)), d);
    Rational v = rat(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d + 1)), d);
    auto s = support_contains(u, v);
    DensityValue g = g_closed(u, v);
    if (s == SupportClass::Outside) {
      REQUIRE(g.value == 0);
      ++outside;
    } else if (s == SupportClass::Interior) {
      REQUIRE((g.infinite || g.value > 0));
      ++inside;
    }
  }
}

TEST_CASE("puzzles") {
  auto vs = [](const ConvexPolygon& p) { return std::set<RatPoint>(p.vertices().begin(), p.vertices().end()); };
  CHECK(vs(puzzle_region(3)) == std::set<RatPoint>{{0, 1}, {rat(1, 3), rat(1, 3)}, {1, 0}, {1, 1}});
  CHECK(vs(puzzle_region(5)) == std::set<RatPoint>{{rat(1, 3), 1}, {rat(1, 2), rat(1, 2)}, {1, rat(1, 3)}, {1, 1}});
  for (std::int64_t i = 3; i <= 21; i += 2) {
    auto outer = puzzle_region(i), inner = puzzle_region(i + 2);
    REQUIRE(intersect(outer, inner) == inner);
    REQUIRE(area(inner) < area(outer));
  }
  CHECK(code_of([] { puzzle_region(4); }) == Errc::InvalidParity);
  CHECK(code_of([] { puzzle_region(1); }) == Errc::InvalidParity);
}

TEST_CASE("integration") {
  auto tri = ConvexPolygon::from_vertices({{rat(1, 3), rat(1, 3)}, {1, 0}, {0, 1}});
  CHECK(std::fabs(integrate_g(tri, 1000, {2}) - 1.0 / 6) < 0.002);
  CHECK(std::fabs(integrate_g(ConvexPolygon::box(0, 0, 1, 1), 400) - 1) < 0.01);
  CHECK(integrate_g(ConvexPolygon::box(0, 0, rat(1, 4), rat(1, 4)), 64) == 0);
  CHECK(integrate_g(tri, 200, {1}) == integrate_g(tri, 200, {3}));
  CHECK(code_of([&] { integrate_g(tri, 8); }) == Errc::InvalidArgument);
}

TEST_CASE("density grid") {
  std::ostringstream os;
  write_density_grid(os, 5, 2);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "u,v,g");
  std::vector<std::string> rows;
  while (std::getline(is, line)) rows.push_back(line);
  CHECK(rows.size() == 25);
  CHECK(rows.front() == "0,0,0");
  CHECK(rows.back() == "1,1,inf");
  CHECK(rows[4] == "0,1,0.1875");
}
