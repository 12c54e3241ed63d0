#include <doctest.h>

#include <filesystem>
#include <set>

#include "confsched/error.hpp"
#include "confsched/instgen.hpp"
#include "confsched/rng.hpp"
#include "support/fixtures.hpp"

using namespace confsched;

TEST_CASE("processing-time classes") {
  const std::vector<ProcRange> expect{{1, 10}, {1, 100}, {10, 20}, {90, 100}, {90, 100}, {10, 100}};
  for (int c = 1; c <= 6; ++c) {
    CHECK(class_range(c).lo == expect[c - 1].lo);
    CHECK(class_range(c).hi == expect[c - 1].hi);
  }
  CHECK_THROWS_AS(class_range(0), ParameterError);
  CHECK_THROWS_AS(class_range(7), ParameterError);

  const Instance inst = generate({20, 3, 1, 0.5, 42});
  for (Time p : inst.proc()) {
    CHECK(p >= 1);
    CHECK(p <= 10);
  }
  // Over many draws every value of a class range appears.
  Rng rng(3);
  const auto ps = sample_processing_times(2000, 3, rng);
  std::set<Time> seen(ps.begin(), ps.end());
  CHECK(seen.size() == 11);
  CHECK(*seen.begin() == 10);
  CHECK(*seen.rbegin() == 20);
}

TEST_CASE("density extremes and reproducibility") {
  CHECK(generate({12, 2, 2, 0.0, 1}).conflicts().edge_count() == 0);
  CHECK(generate({12, 2, 2, 1.0, 1}).conflicts().edge_count() == 66);
  CHECK(generate({30, 4, 6, 0.5, 9}) == generate({30, 4, 6, 0.5, 9}));
  CHECK_FALSE(generate({30, 4, 6, 0.5, 9}) == generate({30, 4, 6, 0.5, 10}));
  const Instance big = generate({200, 4, 1, 0.3, 5});
  CHECK(big.edge_density() == doctest::Approx(0.3).epsilon(0.05));
  CHECK_THROWS_AS(generate({20, 3, 9, 0.5, 1}), ParameterError);
  CHECK_THROWS_AS(generate({20, 3, 1, 1.5, 1}), ParameterError);
}

TEST_CASE("text format round trip") {
  const Instance e1 = fixtures::e1();
  const std::string text = format_instance(e1);
  CHECK(text == "# id E1\n3 2\n2 1 3\n1 2\n");
  CHECK(parse_instance(text) == e1);
  CHECK(format_instance(parse_instance(text)) == text);

  const Instance g = generate({25, 5, 2, 0.5, 77}, "sample id with spaces");
  CHECK(parse_instance(format_instance(g)) == g);
}

TEST_CASE("files, plain and compressed") {
  const auto dir = std::filesystem::temp_directory_path() / "confsched_instgen_test";
  std::filesystem::create_directories(dir);
  const Instance g = generate({40, 3, 6, 0.8, 4}, "gz");
  write_instance(g, dir / "a.txt");
  write_instance(g, dir / "a.txt.gz");
  CHECK(read_instance(dir / "a.txt") == g);
  CHECK(read_instance(dir / "a.txt.gz") == g);
  CHECK(std::filesystem::file_size(dir / "a.txt.gz") < std::filesystem::file_size(dir / "a.txt"));
  CHECK_THROWS_AS(read_instance(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed files") {
  CHECK_THROWS_AS(parse_instance("2 1\n1 1\n1 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance("0 1\n\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance("2 0\n1 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance("2 1\n1 1\n1 3\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance("2 1\n1 1\n1 2\n2 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance("2 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 1\n1 -2\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance("2 1\n"), ParseError);
  try {
    parse_instance("# c\n3 1\n1 1 1\n1 2\n2 2\n");
    FAIL("self-loop accepted");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("benchmark grid") {
  GridOptions opt;
  opt.sizes = {20};
  CHECK(enumerate_grid(opt).size() == 20u * 5 * 6 * 5 * 3);
  opt = GridOptions{};
  CHECK(enumerate_grid(opt).size() == 36000u);

  const GridCell a{20, 3, 2, 4, 0.2, 0}, b{20, 3, 2, 4, 0.8, 3}, c{20, 3, 2, 5, 0.2, 0};
  const Instance ia = generate_cell(a, 1), ib = generate_cell(b, 1), ic = generate_cell(c, 1);
  // Graphs of one base instance share its processing times.
  CHECK(ia.proc() == ib.proc());
  CHECK_FALSE(ia.proc() == ic.proc());
  CHECK(ia.id() == "n20_m3_c2_i05_p0.20_g1");
  CHECK(ib.id() == "n20_m3_c2_i05_p0.80_g4");
  CHECK(generate_cell(a, 1) == ia);
  CHECK_FALSE(generate_cell(a, 2) == ia);
}
