#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "confsched/cli.hpp"
#include "confsched/instgen.hpp"
#include "confsched/milp.hpp"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;
using namespace confsched;

struct Run {
  int code;
  std::string out, err;
};

static Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

static fs::path scratch(const std::string& name) {
  const char* base = std::getenv("CONFSCHED_TMP");
  const fs::path dir = fs::path(base ? base : fs::temp_directory_path().string()) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

static std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

static std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"gen", "--n", "5"}).code == 2);
  CHECK(cli({"gen", "--seed", "1", "--class", "9"}).code == 2);
  CHECK(cli({"solve"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"solve", "--help"}).code == 0);
}

TEST_CASE("runtime errors exit with 1") {
  const auto dir = scratch("errors");
  CHECK(cli({"solve", (dir / "missing.txt").string()}).code == 1);
  std::ofstream(dir / "bad.txt") << "2 1\n1 1\n1 1\n";
  const auto r = cli({"bounds", (dir / "bad.txt").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line") != std::string::npos);
}

TEST_CASE("gen writes files and a manifest") {
  const auto dir = scratch("gen");
  const auto r = cli({"gen", "--n", "8", "--m", "2", "--class", "3", "--density", "0.5", "--seed", "7", "--count",
                      "3", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[1] == "file,id,n,m,class,density");
  for (int k = 2; k < 5; ++k) {
    const auto f = split(ls[k]);
    REQUIRE(f.size() == 6);
    const Instance inst = read_instance(fs::path(f[0]));
    CHECK(inst.n() == 8);
    CHECK(inst.m() == 2);
    CHECK(inst.id() == f[1]);
    CHECK(f[4] == "3");
    CHECK(f[5] == "0.50");
  }
  const auto again = cli({"gen", "--n", "8", "--m", "2", "--class", "3", "--density", "0.5", "--seed", "7", "--count",
                          "3", "--out", dir.string()});
  CHECK(again.out == r.out);

  const auto grid = scratch("grid");
  const auto g = cli({"gen", "--grid", "paper", "--seed", "1", "--sizes", "20", "--machines", "3", "--classes", "1,2",
                      "--densities", "0.2", "--instances", "2", "--graphs", "2", "--gz", "--out", grid.string()});
  REQUIRE(g.code == 0);
  CHECK(lines(g.out).size() == 2 + 2 * 2 * 2);
  CHECK(std::distance(fs::directory_iterator(grid), fs::directory_iterator{}) == 8);
}

TEST_CASE("solve is deterministic for a seed") {
  const auto dir = scratch("solve");
  CHECK(cli({"gen", "--n", "12", "--m", "3", "--class", "2", "--density", "0.5", "--seed", "3", "--out",
             dir.string()})
            .code == 0);
  const std::string file = fs::directory_iterator(dir)->path().string();
  const std::vector<std::string> args{"solve", file, "--seed", "11", "--preset", "tuning", "--max-iters", "3000"};
  const auto a = cli(args), b = cli(args);
  REQUIRE(a.code == 0);
  const auto la = lines(a.out), lb = lines(b.out);
  REQUIRE(la.size() == 3);
  CHECK(la[0] == std::string("# ") + kResultFormat);
  const auto fa = split(la[2]), fb = split(lines(b.out)[2]);
  REQUIRE(fa.size() == 13);
  for (int k = 0; k < 12; ++k) CHECK(fa[k] == fb[k]);

  auto js = cli({"solve", file, "--seed", "11", "--preset", "tuning", "--max-iters", "3000", "--json"});
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["value"].get<long long>() == std::stoll(fa[4]));
  CHECK(j["generations"].get<long long>() == std::stoll(fa[9]));
  CHECK(j["format"] == kResultFormat);

  CHECK(cli({"solve", file, "--pm", "2"}).code == 2);
  CHECK(cli({"solve", file, "--decoder", "xyz"}).code == 2);
}

TEST_CASE("special structures are routed") {
  const auto dir = scratch("route");
  write_instance(fixtures::e1(), dir / "e1.txt");
  const auto r = cli({"solve", (dir / "e1.txt").string()});
  REQUIRE(r.code == 0);
  const auto f = split(lines(r.out)[2]);
  CHECK(f[3] == "exact:complement-of-star");
  CHECK(f[4] == "7");
  const auto g = cli({"solve", (dir / "e1.txt").string(), "--no-route", "--preset", "tuning"});
  CHECK(split(lines(g.out)[2])[3] == "ga");
  CHECK(split(lines(g.out)[2])[4] == "7");
}

TEST_CASE("bounds, exact and export") {
  const auto dir = scratch("misc");
  const std::string e1 = (dir / "e1.txt").string();
  write_instance(fixtures::e1(), e1);

  auto r = cli({"bounds", e1});
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  CHECK(ls[2].rfind("E1,LB1,7,", 0) == 0);
  CHECK(ls[6] == "E1,best,7,NA,LB1");

  std::ofstream(dir / "f3.sol") << "status=optimal objective=7 bound=7.5\n";
  r = cli({"bounds", e1, "--milp", "3:" + (dir / "f3.sol").string()});
  REQUIRE(r.code == 0);
  ls = lines(r.out);
  CHECK(ls.back() == "E1,best,8,NA,LB7");
  CHECK(cli({"bounds", e1, "--milp", "nocolon"}).code == 2);

  r = cli({"bounds", e1, "--json"});
  CHECK(nlohmann::json::parse(r.out)["best"] == 7);

  r = cli({"exact", e1, "--method", "both"});
  REQUIRE(r.code == 0);
  ls = lines(r.out);
  CHECK(ls[2].rfind("E1,gt,7,", 0) == 0);
  CHECK(ls[3].rfind("E1,ti,7,", 0) == 0);

  r = cli({"export", e1, "--formulation", "F1", "--out", (dir / "m").string()});
  REQUIRE(r.code == 0);
  const LpFile lp = read_lp((dir / "m.lp").string());
  CHECK_FALSE(lp.rows.empty());
  std::ifstream start(dir / "m.start");
  const Assignment a = parse_start(start);
  const auto chk = check_assignment(build_model(fixtures::e1(), Formulation::F1), a);
  CHECK(chk.feasible);
  CHECK(chk.objective == doctest::Approx(7.0));

  CHECK(cli({"export", e1}).code == 0);
  CHECK(fs::exists(dir / "e1_F3.lp"));
  CHECK(fs::exists(dir / "e1_F3.start"));
  CHECK(cli({"export", e1, "--horizon", "1"}).code == 2);
}

TEST_CASE("bench prints rows and a summary") {
  const auto dir = scratch("bench");
  REQUIRE(cli({"gen", "--grid", "paper", "--seed", "2", "--sizes", "6", "--machines", "2", "--classes", "1",
               "--densities", "0.2,0.8", "--instances", "2", "--graphs", "1", "--out", dir.string()})
              .code == 0);
  const std::vector<std::string> args{"bench", dir.string(), "--methods", "bounds,ga,exact", "--preset", "tuning",
                                      "--max-iters", "500", "--seed", "4"};
  const auto r = cli(args);
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() >= 2 + 4 + 3 + 2);
  const auto header = split(ls[1]);
  CHECK(header.back() == "gap_pct");
  const auto pos = std::find(ls.begin(), ls.end(), "# summary");
  REQUIRE(pos != ls.end());
  CHECK(ls.end() - pos == 4);
  CHECK(split(*(pos + 1)).back() == "gap_pct");
  CHECK(cli(args).out.size() == r.out.size());
  CHECK(cli({"bench", (dir / "nothing").string()}).code == 1);
}
