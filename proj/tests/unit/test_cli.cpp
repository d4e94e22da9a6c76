#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(FAREY_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::filesystem::path scratch_dir() {
  auto d = std::filesystem::temp_directory_path() / "farey_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("enumerate command") {
  auto r = run("enumerate --q 6 --subset even");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"a,q", "1,6", "1,4", "1,2", "3,4", "5,6"});
  auto empty = run("enumerate --q 1 --subset even");
  CHECK(empty.code == 0);
  CHECK(lines(empty.out) == std::vector<std::string>{"a,q"});
  CHECK(run("enumerate --q 0").code == 2);
  CHECK(run("enumerate --q 5 --subset prime").code == 2);
  CHECK(run("enumerate --q 5 --interval 3/4,1/4").code == 2);
  CHECK(lines(run("enumerate --q 6 --interval 1/4,1/2").out) == std::vector<std::string>{"a,q", "1,4", "1,3", "2,5", "1,2"});
}

TEST_CASE("argument errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("pairs").code == 2);
  CHECK(run("density eval --point 1/2").code == 2);
  CHECK(run("density eval --point 2,1/2").code == 2);
  CHECK(run("verify --max-param 4").code == 2);
}

TEST_CASE("pairs, types and corollary") {
  auto p = run("pairs --q 6");
  CHECK(p.code == 0);
  CHECK(lines(p.out).size() == 5);
  CHECK(lines(p.out)[1] == "6,6,4,1,1,1");
  auto g = run("pairs --q 6 --n 3");
  CHECK(lines(g.out).size() == 10);
  auto c = run("corollary2 --q 6");
  CHECK(c.code == 0);
  CHECK(lines(c.out)[0] == "fraction 0.5");
  auto t = run("types --q 200 --format csv");
  CHECK(t.code == 0);
  CHECK(lines(t.out)[0] == "r,count,share,predicted,predicted_tail");
  auto tj = run("types --q 200");
  CHECK(tj.out.find("\"types\"") != std::string::npos);
  CHECK(run("types --q 2").code == 2);
}

TEST_CASE("density command") {
  auto a = run("density eval --point 0/1,1/1");
  CHECK(a.code == 0);
  CHECK(lines(a.out)[0] == "3/16");
  auto b = run("density eval --point 1/1,1/1");
  CHECK(lines(b.out)[0] == "inf");
  auto c = run("density eval --point 1/3,1/3");
  CHECK(lines(c.out)[0] == "3/8");
  CHECK(lines(c.out).size() > 2);
  auto j = run("density eval --point 0.5,0.5 --format json");
  CHECK(j.out.find("\"total\": \"7/6\"") != std::string::npos);
  auto grid = run("density grid --n 8 --threads 2");
  CHECK(lines(grid.out).size() == 65);
}

TEST_CASE("density grid file of 512 squared rows") {
  auto path = scratch_dir() / "grid512.csv";
  auto r = run("density grid --n 512 --out " + path.string());
  CHECK(r.code == 0);
  CHECK(lines(slurp(path)).size() == 512 * 512 + 1);
}

TEST_CASE("regions command") {
  auto r = run("regions --level 4");
  CHECK(r.code == 0);
  std::size_t tuples = 0;
  for (auto pos = r.out.find("\"tuple\""); pos != std::string::npos; pos = r.out.find("\"tuple\"", pos + 1)) ++tuples;
  CHECK(tuples == 4);
  auto csv = run("regions --level 7 --format csv");
  CHECK(lines(csv.out).size() == 1 + 8);
}

TEST_CASE("verify command") {
  auto r = run("verify --max-param 9");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS cells") != std::string::npos);
  auto d = run("verify --max-param 5 --cross-check-density --points 12 --seed 5 --threads 2");
  CHECK(d.code == 0);
  CHECK(d.out.find("PASS density") != std::string::npos);
  auto i = run("verify --max-param 5 --interval 1/10,9/20 --q 600");
  CHECK(i.code == 0);
  CHECK(i.out.find("PASS interval") != std::string::npos);
}

TEST_CASE("output files are deterministic and never partial") {
  auto dir = scratch_dir();
  auto a = dir / "a.csv", b = dir / "b.csv";
  CHECK(run("pairs --q 150 --out " + a.string()).code == 0);
  CHECK(run("pairs --q 150 --out " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run("verify --max-param 5 --cross-check-density --points 6 --out " + a.string()).code == 0);
  CHECK(run("verify --max-param 5 --cross-check-density --points 6 --out " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));

  auto missing = dir / "no_such_dir" / "x.csv";
  CHECK(run("enumerate --q 5 --out " + missing.string()).code == 3);
  CHECK_FALSE(std::filesystem::exists(missing));
  // a failing command leaves an existing file untouched
  std::string before = slurp(a);
  CHECK(run("enumerate --q 0 --out " + a.string()).code == 2);
  CHECK(slurp(a) == before);
}

TEST_CASE("thread count from the environment") {
  CHECK(run("density grid --n 4").code == 0);
  std::string cmd = std::string("FAREY_THREADS=3 ") + FAREY_CLI_PATH + " density grid --n 4 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  std::string bad = std::string("FAREY_THREADS=zero ") + FAREY_CLI_PATH + " density grid --n 4 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(bad.c_str())) == 2);
}
