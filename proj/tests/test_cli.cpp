#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tropfan/cli.hpp"
#include "tropfan/fixtures.hpp"
#include "tropfan/io.hpp"

using namespace tropfan;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string file(const std::string& name) { return std::string(TROPFAN_SOURCE_DIR) + "/fixtures/" + name; }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("thm on the cross fan fails at the cone point") {
  const Run r = run({"thm", file("cross.fan")});
  CHECK(r.code == 1);
  CHECK(has(r.out, "result: fail"));
  CHECK(has(r.out, "witness: sigma = {}"));
}

TEST_CASE("betti on nm") {
  const Run r = run({"betti", file("nm.fan")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "betti numbers: 1,0,6,0,1"));
  CHECK(has(r.out, "diagonal: 1,6,1"));
}

TEST_CASE("bergman output pipes into chow") {
  const Run b = run({"bergman", "--uniform", "3", "4", "--fine"});
  REQUIRE(b.code == 0);
  CHECK(has(b.err, "check: bergman"));
  const Run c = run({"chow", "-"}, b.out);
  CHECK(c.code == 0);
  CHECK(has(c.out, "dims: 1,7,1"));
  CHECK(has(c.out, "check: Chow oracle"));
  const Run skipped = run({"chow", "-", "--max-rays-oracle", "4"}, b.out);
  CHECK(has(skipped.out, "oracle skipped"));
}

TEST_CASE("structure option") {
  const Run coarse = run({"bergman", "--uniform", "3", "4", "--structure", "coarse"});
  CHECK(coarse.code == 0);
  CHECK(parse_fan_string(coarse.out).rays.size() == 4);
  const Run from_file = run({"bergman", "--matroid", file("u34.matroid"), "--coarse"});
  CHECK(from_file.out == coarse.out);
  CHECK(run({"bergman", "--uniform", "3", "4", "--structure", "medium"}).code == 2);
  CHECK(run({"bergman", "--uniform", "3", "4", "--fine", "--coarse"}).code == 2);
}

TEST_CASE("pass and fail exit codes") {
  CHECK(run({"thm", "--fixture", "elliptic"}).code == 0);
  CHECK(run({"pd", "--fixture", "cross"}).code == 1);
  CHECK(run({"unimodular", "--fixture", "elliptic"}).code == 0);
  CHECK(run({"balanced", "--fixture", "nm"}).code == 0);
  CHECK(run({"validate", file("u34-fine.fan")}).code == 0);
  CHECK(run({"hodge-iso", "--fixture", "p3"}).code == 0);
  CHECK(run({"keel", "--fixture", "p2", "--cone", "0 1"}).code == 0);
  CHECK(run({"keel", "--fixture", "nm", "--cone", "4,7"}).code == 0);
  CHECK(run({"deligne", "--fixture", "u34-coarse"}).code == 0);
  CHECK(run({"deligne", "--fixture", "u34-coarse", "--k", "2"}).code == 0);
  CHECK(run({"kahler", "--fixture", "nm"}).code == 0);
  CHECK(run({"kahler", "--fixture", "cross"}).code == 1);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate", "--fixture", "p2"}).code == 2);
  CHECK(run({"thm", "/nonexistent/file.fan"}).code == 2);
  CHECK(run({"thm", "-"}, "tropfan-fan 1\nrank 2\nrays 1\n2 4\ncones 1\n0\n").code == 2);
  CHECK(run({"thm", "--fixture", "nosuch"}).code == 2);
  CHECK(run({"star", "--fixture", "p2"}).code == 2);
  CHECK(run({"star", "--fixture", "p2", "--cone", "0 9"}).code == 2);
  CHECK(run({"chow", "--fixture", "elliptic", "--bogus"}).code == 2);
  CHECK(run({"thm", file("cross.fan"), "--fixture", "cross"}).code == 2);
  const Run r = run({"modify", "--fixture", "p2"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "error:"));
}

TEST_CASE("star and subdivide write fans") {
  const Run s = run({"star", "--fixture", "u34-fine", "--cone", "0"});
  CHECK(s.code == 0);
  const Fan star = Fan::validate(parse_fan_string(s.out));
  CHECK(star.dim() == 1);
  const Run sub = run({"subdivide", "--fixture", "p2", "--cone", "0 1"});
  CHECK(sub.code == 0);
  CHECK(Fan::validate(parse_fan_string(sub.out)).maximal_cones().size() == 4);
}

TEST_CASE("modify reproduces nm") {
  const Run r = run({"modify", file("u34-refined.fan")});
  CHECK(r.code == 0);
  CHECK(has(r.err, "divisor weights: 1 1 1"));
  CHECK(Fan::validate(parse_fan_string(r.out)).ray_count() == 10);
}

TEST_CASE("function files") {
  const std::string path = std::string(TROPFAN_BINARY_DIR) + "/nm_zero_function.txt";
  {
    std::ofstream f(path);
    f << "# not convex\n0 0 0 0 0 0 0 0 0 0\n";
  }
  const Run r = run({"kahler", "--fixture", "nm", "--function", path});
  CHECK(r.code == 0);  // falls back to the search
  CHECK(has(r.out, "ample function"));
  CHECK(run({"kahler", "--fixture", "p2", "--function", file("nm.fan")}).code == 2);
}

TEST_CASE("reports are deterministic and can go to a file") {
  const std::string path = std::string(TROPFAN_BINARY_DIR) + "/thm_report.txt";
  const Run a = run({"thm", "--fixture", "nm", "--report", path});
  const Run b = run({"thm", "--fixture", "nm"});
  CHECK(a.out == b.out);
  std::ifstream f(path);
  CHECK(std::string(std::istreambuf_iterator<char>(f), {}) == a.out);
  CHECK(has(a.out, "digest: " + fnv_digest(fan_to_string(fixture_description("nm")))));
}

TEST_CASE("fixtures command") {
  const Run list = run({"fixtures"});
  CHECK(has(list.out, "nm  "));
  CHECK(run({"fixtures", "--fixture", "cross"}).out == fan_to_string(fixture_description("cross")));
}
