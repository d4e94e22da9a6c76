#include "farey/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "farey/catalog.hpp"
#include "farey/density.hpp"
#include "farey/error.hpp"
#include "farey/pairs.hpp"
#include "farey/tessellation.hpp"

namespace farey {

namespace {

std::string format_points(std::vector<RatPoint> v) {
  std::sort(v.begin(), v.end());
  std::string s;
  for (const auto& p : v) s += format_point(p);
  return s;
}

bool small_den(const RatPoint& p, std::int64_t max_den) {
  return p.x.get_den() <= max_den && p.y.get_den() <= max_den;
}

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; }));
}

void VerifyReport::add(std::string group, std::string label, bool pass, std::string detail) {
  rows.push_back({std::move(group), std::move(label), pass, std::move(detail)});
}

void VerifyReport::append(const VerifyReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

VerifyReport verify_cell_catalog(std::int64_t max_param, int max_level) {
  if (max_param < 5) throw Error(Errc::InvalidArgument, "parameter bound must be >= 5");
  if (max_level < 4) throw Error(Errc::InvalidArgument, "level bound must be >= 4");
  VerifyReport rep;
  std::map<std::size_t, std::set<KTuple>> expected;
  for (const auto& row : cell_catalog(max_param, max_level)) {
    ConvexPolygon c = cell(row.tuple);
    std::string got = format_points(c.vertices()), want = format_points(row.vertices);
    rep.add("cells", row.family + " (" + format_tuple(row.tuple) + ")", got == want,
            got == want ? "" : "got " + got + " want " + want);
    expected[row.tuple.size()].insert(row.tuple);
  }
  for (int r = 1; r <= max_level; ++r) {
    std::set<KTuple> found;
    for (const auto& c : admissible_cells(r, std::nullopt, max_param).cells) found.insert(c.tuple);
    const auto& want = expected[static_cast<std::size_t>(r)];
    std::string detail;
    for (const auto& t : found)
      if (!want.count(t)) detail += " extra (" + format_tuple(t) + ")";
    for (const auto& t : want)
      if (!found.count(t)) detail += " missing (" + format_tuple(t) + ")";
    rep.add("completeness", "level " + std::to_string(r), detail.empty(),
            detail.empty() ? std::to_string(found.size()) + " cells" : detail.substr(1));
  }
  return rep;
}

VerifyReport verify_weight_catalog(std::int64_t max_param, int max_level) {
  if (max_param < 5) throw Error(Errc::InvalidArgument, "parameter bound must be >= 5");
  VerifyReport rep;
  for (const auto& row : weight_catalog(max_param, max_level)) {
    Cell c{row.tuple, cell(row.tuple)};
    std::string label = row.family + " (" + format_tuple(row.tuple) + ") at " + format_point(row.vertex);
    const auto& v = c.polygon.vertices();
    auto it = std::find(v.begin(), v.end(), row.vertex);
    if (it == v.end()) {
      rep.add("weights", label, false, "not a vertex of the cell");
      continue;
    }
    Rational a = vertex_alpha(c, static_cast<std::size_t>(it - v.begin())).alpha;
    std::string detail = a == row.alpha ? "" : "got " + format_rational(a) + " want " + format_rational(row.alpha);
    if (row.quoted_alpha && a == row.alpha)
      detail = "quoted " + format_rational(*row.quoted_alpha) + " breaks the checksum";
    rep.add("weights", label, a == row.alpha, detail);
  }
  return rep;
}

VerifyReport verify_checksums(std::int64_t max_entry, int max_level) {
  VerifyReport rep;
  for (int r = 1; r <= max_level; ++r) {
    for (const auto& c : admissible_cells(r, std::nullopt, max_entry).cells) {
      Rational s = checksum(c);
      std::int64_t p = p_value(c.tuple);
      Rational want = rat(c.polygon.size() == 3 ? 2 : 4, p);
      bool shape_ok = c.polygon.size() == 3 || c.polygon.size() == 4;
      rep.add("checksum", "(" + format_tuple(c.tuple) + ")", shape_ok && s == want,
              "sum " + format_rational(s) + " over " + std::to_string(c.polygon.size()) + " vertices");
    }
  }
  return rep;
}

std::vector<DensityPoint> density_test_points(std::size_t count, std::uint64_t seed, std::int64_t max_den) {
  if (max_den < 8) throw Error(Errc::InvalidArgument, "denominator bound must be >= 8");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto frac_in_unit = [&](std::int64_t max_d) {
    std::int64_t d = uniform(2, max_d);
    return rat(uniform(0, d), d);
  };
  auto maybe_swap = [&](RatPoint p) {
    if (rng() & 1) std::swap(p.x, p.y);
    return p;
  };

  // Vertices of U-regions and puzzles with small enough denominators.
  std::vector<RatPoint> special;
  for (const auto& row : cell_catalog(41, 12))
    for (const auto& v : u_region(row.tuple).vertices())
      if (small_den(v, max_den) && v.x >= 0 && v.x <= 1 && v.y >= 0 && v.y <= 1) special.push_back(v);
  for (std::int64_t i = 3; i <= 41; i += 2)
    for (const auto& v : puzzle_region(i).vertices())
      if (small_den(v, max_den)) special.push_back(v);
  for (std::int64_t m = 2; m <= 40; ++m) special.push_back({rat(m - 1, m), rat(m - 1, m)});
  std::sort(special.begin(), special.end());
  special.erase(std::unique(special.begin(), special.end()), special.end());

  std::vector<DensityPoint> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    switch (n % 6) {
      case 0:
      case 1:
        out.push_back({{frac_in_unit(max_den), frac_in_unit(max_den)}, "generic"});
        break;
      case 2: {
        Rational z = frac_in_unit(max_den / 2) / 2;
        out.push_back({maybe_swap({z, 1 - 2 * z}), "support edge"});
        break;
      }
      case 3:
        out.push_back({maybe_swap({1, frac_in_unit(max_den)}), "unit edge"});
        break;
      case 4: {
        std::int64_t j = uniform(1, 20);
        Rational t = frac_in_unit(max_den / (j + 1));
        out.push_back({maybe_swap({(j - 1 + t) / (j + 1), 1 - t}), "jump line"});
        break;
      }
      default:
        out.push_back({maybe_swap(special[static_cast<std::size_t>(rng() % special.size())]), "vertex"});
        break;
    }
  }
  return out;
}

VerifyReport verify_density(const std::vector<DensityPoint>& points, int threads) {
  std::vector<CheckRow> rows(points.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < points.size();) {
      const RatPoint& p = points[i].p;
      CheckRow& row = rows[i];
      row.group = "density";
      row.label = points[i].kind + " " + format_point(p);
      try {
        DensityValue c = g_closed(p.x, p.y), s = g_sum(p.x, p.y);
        row.pass = c == s;
        row.detail = "closed " + c.exact() + (row.pass ? "" : " levels " + s.exact());
      } catch (const Error& e) {
        row.pass = false;
        row.detail = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, threads); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  VerifyReport rep;
  rep.rows = std::move(rows);
  return rep;
}

VerifyReport verify_interval(std::int64_t Q, const Interval& interval, double band) {
  if (Q < 2) throw Error(Errc::InvalidArgument, "Q must be >= 2");
  EmpiricalSummary full = summarize(Q, Interval::unit());
  EmpiricalSummary part = summarize(Q, interval);
  if (part.total_pairs == 0) throw Error(Errc::EmptyResult, "no even pairs in the interval");
  auto hf = type_histogram(full), hp = type_histogram(part);
  VerifyReport rep;
  auto row = [&](const std::string& label, double a, double b) {
    std::ostringstream d;
    d << "interval " << format_decimal(a) << " full " << format_decimal(b);
    rep.add("interval", label, std::fabs(a - b) <= band, d.str());
  };
  for (int r = 1; r <= 4; ++r) {
    double a = hp.count(r) ? to_double(hp[r]) : 0.0, b = hf.count(r) ? to_double(hf[r]) : 0.0;
    row("type " + std::to_string(r) + " share", a, b);
  }
  row("small-sum fraction", to_double(small_sum_probability(part)), to_double(small_sum_probability(full)));
  return rep;
}

}  // namespace farey
