#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "farey/density.hpp"
#include "farey/error.hpp"
#include "farey/io.hpp"
#include "farey/pairs.hpp"
#include "farey/sequence.hpp"
#include "farey/tessellation.hpp"
#include "farey/verify.hpp"
#include "json.hpp"

using namespace farey;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBadArgs = 2, kIoError = 3 };

struct Config {
  std::int64_t q = 0;
  std::string subset = "all";
  std::string interval;
  std::string point;
  std::int64_t n = 0;
  std::int64_t max_param = 41;
  int level = 0;
  int threads = 0;
  std::uint64_t seed = 20240607;
  std::string out;
  std::string format;
  bool cross_check = false;
  std::size_t points = 200;
};

int default_threads() {
  if (const char* env = std::getenv("FAREY_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw Error(Errc::InvalidArgument, "FAREY_THREADS must be a positive integer");
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

int threads_of(const Config& c) { return c.threads > 0 ? c.threads : default_threads(); }

Interval interval_of(const Config& c) { return c.interval.empty() ? Interval::unit() : parse_interval(c.interval); }

void require_q(const Config& c, std::int64_t min) {
  if (c.q < min) throw Error(Errc::InvalidArgument, "--q must be >= " + std::to_string(min));
  if (c.q > kMaxOrder) throw Error(Errc::InvalidArgument, "--q is above the supported order");
}

void emit(const Config& c, const std::function<void(std::ostream&)>& fill) {
  if (c.out.empty()) {
    fill(std::cout);
    std::cout.flush();
    if (!std::cout) throw Error(Errc::Io, "write to stdout failed");
  } else {
    write_file_atomic(c.out, fill);
  }
}

std::string format_of(const Config& c, const std::string& fallback) {
  std::string f = c.format.empty() ? fallback : c.format;
  if (f != "csv" && f != "json") throw Error(Errc::InvalidArgument, "--format must be csv or json");
  return f;
}

int cmd_enumerate(const Config& c) {
  require_q(c, 1);
  auto fr = enumerate(c.q, parse_subset(c.subset), interval_of(c));
  emit(c, [&](std::ostream& os) { write_fractions_csv(os, fr); });
  return kOk;
}

int cmd_pairs(const Config& c) {
  require_q(c, 2);
  auto pairs = even_pairs(c.q, interval_of(c));
  if (c.n > 0) {
    auto counts = grid_counts(pairs, c.q, c.n);
    emit(c, [&](std::ostream& os) { write_grid_csv(os, counts, c.n); });
  } else {
    emit(c, [&](std::ostream& os) { write_pairs_csv(os, pairs); });
  }
  return kOk;
}

int cmd_types(const Config& c) {
  require_q(c, 2);
  Interval iv = interval_of(c);
  EmpiricalSummary s = summarize(c.q, iv);
  if (s.total_pairs == 0) throw Error(Errc::EmptyResult, "no even pairs for this Q and interval");
  auto hist = type_histogram(s);
  std::int64_t cap = std::max<std::int64_t>(c.max_param, 200);
  int max_r = std::max(6, hist.empty() ? 0 : hist.rbegin()->first);
  std::string fmt = format_of(c, "json");
  struct Row {
    int r;
    std::int64_t count;
    double share, predicted, tail;
  };
  std::vector<Row> rows;
  for (int r = 1; r <= max_r; ++r) {
    TypeShare pred = type_share_prediction(r, cap);
    auto it = s.per_type.find(r);
    std::int64_t count = it == s.per_type.end() ? 0 : it->second;
    rows.push_back({r, count, hist.count(r) ? to_double(hist[r]) : 0.0, to_double(pred.share),
                    to_double(pred.tail_bound)});
  }
  emit(c, [&](std::ostream& os) {
    if (fmt == "csv") {
      os << "r,count,share,predicted,predicted_tail\n";
      for (const auto& r : rows)
        os << r.r << ',' << r.count << ',' << format_decimal(r.share) << ',' << format_decimal(r.predicted) << ','
           << format_decimal(r.tail) << '\n';
      return;
    }
    nlohmann::ordered_json j;
    j["Q"] = c.q;
    j["interval"] = format_interval(iv);
    j["total_pairs"] = s.total_pairs;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"r", r.r},
                     {"count", r.count},
                     {"share", format_decimal(r.share)},
                     {"predicted", format_decimal(r.predicted)},
                     {"predicted_tail", format_decimal(r.tail)}});
    j["types"] = arr;
    j["small_sum_fraction"] = format_decimal(to_double(small_sum_probability(s)));
    os << j.dump(2) << '\n';
  });
  return kOk;
}

int cmd_corollary2(const Config& c) {
  require_q(c, 2);
  EmpiricalSummary s = summarize(c.q, interval_of(c));
  if (s.total_pairs == 0) throw Error(Errc::EmptyResult, "no even pairs for this Q and interval");
  double f = to_double(small_sum_probability(s));
  emit(c, [&](std::ostream& os) {
    os << "fraction " << format_decimal(f) << '\n'
       << "target 1/6 " << format_decimal(1.0 / 6.0) << '\n'
       << "gap " << format_decimal(std::fabs(f - 1.0 / 6.0)) << '\n';
  });
  return kOk;
}

int cmd_density_eval(const Config& c) {
  if (c.point.empty()) throw Error(Errc::InvalidArgument, "--point is required");
  RatPoint p = parse_point(c.point);
  DensityValue g = g_closed(p.x, p.y);
  DensityBreakdown b;
  g_sum(p.x, p.y, std::nullopt, &b);
  b.total = g;
  std::string fmt = format_of(c, "csv");
  emit(c, [&](std::ostream& os) {
    if (fmt == "json") {
      os << b.to_json() << '\n';
      return;
    }
    os << g.exact() << '\n' << g.decimal() << '\n';
    for (const auto& t : b.terms)
      os << '(' << format_tuple(t.tuple) << ") " << location_name(t.location) << ' '
         << format_rational(t.contribution) << '\n';
  });
  return kOk;
}

int cmd_density_grid(const Config& c) {
  if (c.n < 2) throw Error(Errc::InvalidArgument, "--n must be >= 2");
  int threads = threads_of(c);
  emit(c, [&](std::ostream& os) { write_density_grid(os, c.n, threads); });
  return kOk;
}

int cmd_regions(const Config& c) {
  if (c.level < 1) throw Error(Errc::InvalidArgument, "--level must be >= 1");
  if (c.max_param < 2) throw Error(Errc::InvalidArgument, "--max-param must be >= 2");
  CellEnumeration e = admissible_cells(c.level, std::nullopt, c.max_param);
  std::string fmt = format_of(c, "json");
  emit(c, [&](std::ostream& os) {
    if (fmt == "csv") {
      os << "tuple,p,area,vertex,x,y\n";
      for (const auto& cell : e.cells) {
        std::string t = '"' + format_tuple(cell.tuple) + '"';
        const auto& v = cell.polygon.vertices();
        for (std::size_t i = 0; i < v.size(); ++i)
          os << t << ',' << p_value(cell.tuple) << ',' << format_rational(area(cell.polygon)) << ',' << i << ','
             << format_rational(v[i].x) << ',' << format_rational(v[i].y) << '\n';
      }
      return;
    }
    nlohmann::ordered_json j;
    j["level"] = c.level;
    j["max_entry"] = c.max_param;
    j["truncated"] = e.truncated;
    j["tail_area_bound"] = format_rational(e.tail_area_bound);
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& cell : e.cells) {
      auto cj = nlohmann::ordered_json::parse(cell_json(cell.tuple, cell.polygon));
      cj["p"] = p_value(cell.tuple);
      cj["area"] = format_rational(area(cell.polygon));
      cells.push_back(cj);
    }
    j["cells"] = cells;
    os << j.dump(2) << '\n';
  });
  return kOk;
}

int cmd_verify(const Config& c) {
  if (c.max_param < 5) throw Error(Errc::InvalidArgument, "--max-param must be >= 5");
  VerifyReport rep;
  rep.append(verify_cell_catalog(c.max_param, 20));
  rep.append(verify_weight_catalog(c.max_param, 20));
  rep.append(verify_checksums(c.max_param, 20));
  if (c.cross_check) rep.append(verify_density(density_test_points(c.points, c.seed), threads_of(c)));
  if (!c.interval.empty()) {
    require_q(c, 2);
    rep.append(verify_interval(c.q, interval_of(c)));
  }
  std::ostringstream text;
  for (const auto& r : rep.rows) {
    text << (r.pass ? "PASS " : "FAIL ") << r.group << ' ' << r.label;
    if (!r.detail.empty()) text << ": " << r.detail;
    text << '\n';
  }
  text << rep.rows.size() - rep.failures() << '/' << rep.rows.size() << " checks passed\n";
  emit(c, [&](std::ostream& os) { os << text.str(); });
  return rep.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Even-denominator Farey pairs: enumeration, tessellation and limiting density"};
  app.require_subcommand(1);

  auto add_q = [&](CLI::App* s) { s->add_option("--q", c.q, "Order Q")->required(); };
  auto add_interval = [&](CLI::App* s) { s->add_option("--interval", c.interval, "Interval a/b,c/d"); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out, "Output path (default stdout)"); };
  auto add_threads = [&](CLI::App* s) {
    s->add_option("--threads", c.threads, "Worker threads (default FAREY_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
  };

  auto* en = app.add_subcommand("enumerate", "Fractions of F_Q as a CSV");
  add_q(en);
  en->add_option("--subset", c.subset, "all|odd|even");
  add_interval(en);
  add_out(en);

  auto* pa = app.add_subcommand("pairs", "Consecutive even-denominator pairs");
  add_q(pa);
  add_interval(pa);
  pa->add_option("--n", c.n, "Emit an n x n count grid instead of the pair list")->check(CLI::PositiveNumber);
  add_out(pa);

  auto* ty = app.add_subcommand("types", "Type histogram against the cell-area prediction");
  add_q(ty);
  add_interval(ty);
  ty->add_option("--format", c.format, "json|csv");
  ty->add_option("--max-param", c.max_param, "Entry cap for the prediction (at least 200 is used)");
  add_out(ty);

  auto* co = app.add_subcommand("corollary2", "Fraction of pairs with q' + q'' <= Q");
  add_q(co);
  add_interval(co);
  add_out(co);

  auto* de = app.add_subcommand("density", "Limiting density");
  de->require_subcommand(1);
  auto* ev = de->add_subcommand("eval", "Exact value and level breakdown at a point");
  ev->add_option("--point", c.point, "u,v")->required();
  ev->add_option("--format", c.format, "csv (plain text) or json");
  add_out(ev);
  auto* gr = de->add_subcommand("grid", "CSV grid u,v,g");
  gr->add_option("--n", c.n, "Grid points per axis")->required();
  add_threads(gr);
  add_out(gr);

  auto* re = app.add_subcommand("regions", "Admissible cells of one level");
  re->add_option("--level", c.level, "Level r")->required();
  re->add_option("--max-param", c.max_param, "Entry cap");
  re->add_option("--format", c.format, "json|csv");
  add_out(re);

  auto* ve = app.add_subcommand("verify", "Re-derive the cell and vertex-weight catalogs");
  ve->add_option("--max-param", c.max_param, "Parameter bound (>= 5)");
  ve->add_flag("--cross-check-density", c.cross_check, "Compare closed form and level sums");
  ve->add_option("--points", c.points, "Sampled density points");
  ve->add_option("--seed", c.seed, "Seed for sampled points");
  ve->add_option("--q", c.q, "Order for the interval check");
  add_interval(ve);
  add_threads(ve);
  add_out(ve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kBadArgs;
  }

  try {
    if (*en) return cmd_enumerate(c);
    if (*pa) return cmd_pairs(c);
    if (*ty) return cmd_types(c);
    if (*co) return cmd_corollary2(c);
    if (*ev) return cmd_density_eval(c);
    if (*gr) return cmd_density_grid(c);
    if (*re) return cmd_regions(c);
    if (*ve) return cmd_verify(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::Io ? kIoError : kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  }
  return kBadArgs;
}
