#include <doctest.h>

#include <algorithm>
#include <random>

#include "tropfan/fixtures.hpp"
#include "tropfan/modification.hpp"

using namespace tropfan;

TEST_CASE("linear functions have empty divisors") {
  const Fan nm = fixture("nm");
  QVector f;
  for (const auto& r : nm.rays()) f.push_back(3 * r[0] - r[1] + 2 * r[3]);
  CHECK(divisor(nm, f).empty());
  const ModificationResult m = tropical_modification(nm, f);
  CHECK(m.added_rays.empty());
  CHECK(m.graph_fan.maximal_cones().size() == nm.maximal_cones().size());
}

TEST_CASE("modification of the rank-1 fan") {
  const Fan line = fixture("rank1");
  const Divisor div = divisor(line, {1, 0});
  REQUIRE(div.cones.size() == 1);
  CHECK(div.cones.front().empty());
  // the vertical ray points up, so max(0, x) needs weight -1 to balance
  CHECK(div.weights.front() == -1);
  const ModificationResult m = tropical_modification(line, {1, 0});
  CHECK(m.graph_fan.rays() == std::vector<IntVector>{{1, 1}, {-1, 0}, {0, 1}});
  CHECK(is_balanced(m.graph_fan).passed());
  // min(0, x) bends the other way and gets weight 1
  const ModificationResult concave = tropical_modification(line, {0, -1});
  CHECK(concave.divisor.weights == std::vector<std::int64_t>{1});
  CHECK(concave.graph_fan.rays() == std::vector<IntVector>{{1, 0}, {-1, -1}, {0, 1}});
  CHECK(is_balanced(concave.graph_fan).passed());
}

TEST_CASE("divisor errors") {
  CHECK_THROWS_AS(divisor(fixture("rank1"), {mpq_class(1, 2), 0}), InputError);
  FanDescription d;
  d.lattice_rank = 2;
  d.rays = {{1, 0}, {0, 1}};
  d.maximal_cones = {{0}, {1}};
  CHECK_THROWS_AS(divisor(Fan::validate(d), {0, 0}), InputError);
}

TEST_CASE("divisor ignores linear shifts") {
  const FanDescription refined = fixture_description("u34-refined");
  const Fan fan = Fan::validate(refined);
  const Divisor base = divisor(fan, *refined.values);
  QVector shifted = *refined.values;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += 2 * fan.ray(static_cast<int>(i))[0] - 5 * fan.ray(static_cast<int>(i))[2];
  const Divisor other = divisor(fan, shifted);
  CHECK(other.cones == base.cones);
  CHECK(other.weights == base.weights);
}

TEST_CASE("modification results are balanced") {
  const Fan p2 = fixture("p2");
  const ModificationResult m = tropical_modification(p2, {1, 0, 0});
  CHECK(is_balanced(m.graph_fan).passed());
  const Fan cross = fixture("cross");
  const ModificationResult c = tropical_modification(cross, {1, 0, 1, 0});
  CHECK(is_balanced(c.graph_fan).passed());
  CHECK(c.divisor.weights == std::vector<std::int64_t>{-2});
}

namespace {

bool ray_sets_equal(const Fan& a, const Fan& b) {
  auto x = a.rays(), y = b.rays();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::vector<QVector> cone_points(const Fan& fan) {
  std::vector<QVector> points;
  const std::size_t n = fan.lattice_rank();
  for (const auto& c : fan.cones())
    for (int a = 1; a <= 3; ++a) {
      QVector x(n, 0);
      int k = a;
      for (int r : c.rays) {
        for (std::size_t i = 0; i < n; ++i) x[i] += mpq_class(k, 2) * fan.ray(r)[i];
        k = k % 3 + 1;
      }
      points.push_back(x);
    }
  return points;
}

std::vector<QVector> sample_points(const Fan& fan, unsigned seed) {
  std::vector<QVector> points = cone_points(fan);
  const std::size_t n = fan.lattice_rank();
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int i = 0; i < 40; ++i) {
    QVector x(n);
    for (auto& v : x) v = coord(gen);
    points.push_back(x);
  }
  return points;
}

}  // namespace

TEST_CASE("modifying the refined U34 fan gives nm") {
  const FanDescription refined = fixture_description("u34-refined");
  const Fan input = Fan::validate(refined);
  const Divisor div = divisor(input, *refined.values);
  // the curve through a, b, c
  CHECK(div.cones == std::vector<Cone>{Cone({4}), Cone({5}), Cone({6})});
  CHECK(div.weights == std::vector<std::int64_t>{1, 1, 1});

  const ModificationResult m = tropical_modification(input, *refined.values);
  const Fan nm = fixture("nm");
  CHECK(m.added_rays == std::vector<IntVector>{{0, 0, 0, 1}});
  CHECK(ray_sets_equal(m.graph_fan, nm));
  CHECK(f_vector(m.graph_fan) == f_vector(nm));
  CHECK(is_balanced(m.graph_fan).passed());
  for (const auto& x : cone_points(nm)) CHECK(support_contains(m.graph_fan, x));
  for (const auto& x : sample_points(m.graph_fan, 5)) CHECK(support_contains(m.graph_fan, x) == support_contains(nm, x));
}

TEST_CASE("the printed alpha = (1,1,0,0) is not balanced") {
  FanDescription d = fixture_description("nm");
  d.rays[8] = {1, 1, 0, 0};
  d.values.reset();
  const Fan printed = Fan::validate(d);
  const Report r = is_balanced(printed);
  CHECK_FALSE(r.passed());
}

TEST_CASE("projection of the graph support is the input support") {
  const FanDescription refined = fixture_description("u34-refined");
  const Fan input = Fan::validate(refined);
  const ModificationResult m = tropical_modification(input, *refined.values);
  for (const auto& x : sample_points(m.graph_fan, 11)) {
    if (!support_contains(m.graph_fan, x)) continue;
    QVector y(x.begin(), x.end() - 1);
    CHECK(support_contains(input, y));
  }
}
