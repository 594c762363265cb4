#include <doctest.h>

#include "tropfan/fixtures.hpp"

using namespace tropfan;

namespace {

FanDescription desc(std::size_t n, std::vector<IntVector> rays, std::vector<std::vector<int>> cones) {
  FanDescription d;
  d.lattice_rank = n;
  d.rays = std::move(rays);
  d.maximal_cones = std::move(cones);
  return d;
}

}  // namespace

TEST_CASE("face closure") {
  const Fan f = Fan::validate(desc(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1}, {1, 2}}));
  CHECK(f.cones().size() == 6);
  CHECK(f_vector(f) == std::vector<std::size_t>{1, 3, 2});
  CHECK(f.cones()[0].empty());
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(Fan::validate(desc(2, {{1, 0}, {2, 0}}, {{0, 1}})), InputError);
  CHECK_THROWS_AS(Fan::validate(desc(2, {{2, 4}}, {{0}})), InputError);
  CHECK_THROWS_AS(Fan::validate(desc(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {2}})), InputError);
  CHECK_THROWS_AS(Fan::validate(desc(2, {{1, 0}, {0, 1}}, {{0, 2}})), InputError);
  FanDescription w = desc(2, {{1, 0}, {0, 1}}, {{0}, {1}});
  w.weights = std::vector<std::int64_t>{1};
  CHECK_THROWS_AS(Fan::validate(w), InputError);
  w.weights = std::vector<std::int64_t>{1, 0};
  CHECK_THROWS_AS(Fan::validate(w), InputError);
  // overlapping 2-cones
  CHECK_THROWS_AS(Fan::validate(desc(2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("unimodularity") {
  const Report bad = is_unimodular(Fan::validate(desc(2, {{1, 0}, {1, 2}}, {{0, 1}})));
  CHECK_FALSE(bad.passed());
  CHECK(bad.witnesses.size() == 1);
  for (const auto& name : fixture_names()) CHECK(is_unimodular(fixture(name)).passed());
}

TEST_CASE("balancing") {
  CHECK(is_balanced(fixture("cross")).passed());
  CHECK(is_balanced(fixture("elliptic")).passed());
  const Report r = is_balanced(Fan::validate(desc(2, {{1, 0}, {0, 1}}, {{0}, {1}})));
  CHECK_FALSE(r.passed());
  CHECK(r.witnesses.front().find("{}") != std::string::npos);
  for (const auto& name : fixture_names()) CHECK(is_balanced(fixture(name)).passed());
}

TEST_CASE("f-vectors of fixtures") {
  CHECK(f_vector(fixture("nm")) == std::vector<std::size_t>{1, 10, 14});
  CHECK(f_vector(fixture("cross")) == std::vector<std::size_t>{1, 4});
  CHECK(f_vector(fixture("p2")) == std::vector<std::size_t>{1, 3, 3});
}

TEST_CASE("star fans") {
  const Fan p2 = fixture("p2");
  const StarFan s = star_fan(p2, Cone({0}));
  CHECK(s.fan.lattice_rank() == 1);
  CHECK(s.fan.ray_count() == 2);
  CHECK(s.fan.maximal_cones().size() == 2);
  const StarFan top = star_fan(p2, Cone({0, 1}));
  CHECK(top.fan.lattice_rank() == 0);
  CHECK(top.fan.dim() == 0);
  const StarFan zero = star_fan(p2, Cone{});
  CHECK(f_vector(zero.fan) == f_vector(p2));
  CHECK_THROWS_AS(star_fan(fixture("cross"), Cone({0, 1})), InputError);
}

TEST_CASE("star of a star") {
  for (const char* name : {"nm", "p3", "u34-fine"}) {
    CAPTURE(name);
    const Fan fan = fixture(name);
    for (const auto& sigma : fan.cones())
      for (int r : sigma.rays) {
        const Cone delta({r});
        const StarFan outer = star_fan(fan, delta);
        const StarFan inner = star_fan(outer.fan, outer.restrict(sigma));
        const StarFan direct = star_fan(fan, sigma);
        CHECK(f_vector(inner.fan) == f_vector(direct.fan));
        CHECK(inner.fan.weights() == direct.fan.weights());
        // ray correspondence through the parent fan, and equality of the
        // ray tables under the induced isomorphism of quotient lattices
        const ZMatrix iso = direct.frame.projection() * outer.frame.lift() * inner.frame.lift();
        for (std::size_t i = 0; i < inner.fan.ray_count(); ++i) {
          const int parent = outer.ray_origin[static_cast<std::size_t>(inner.ray_origin[i])];
          const int j = direct.star_ray[static_cast<std::size_t>(parent)];
          REQUIRE(j >= 0);
          const IntVector& v = inner.fan.ray(static_cast<int>(i));
          IntVector image(iso.rows(), 0);
          for (std::size_t a = 0; a < iso.rows(); ++a) {
            mpz_class s = 0;
            for (std::size_t b = 0; b < v.size(); ++b) s += iso(a, b) * v[b];
            image[a] = s.get_si();
          }
          CHECK(image == direct.fan.ray(j));
        }
      }
  }
}

TEST_CASE("barycentric subdivision") {
  const Fan p2 = fixture("p2");
  const Fan blowup = barycentric_star_subdivision(p2, Cone({0, 1}));
  CHECK(blowup.ray_count() == 4);
  CHECK(blowup.maximal_cones().size() == 4);
  CHECK(blowup.ray(3) == IntVector{1, 1});
  CHECK_THROWS_AS(barycentric_star_subdivision(p2, Cone({0})), InputError);
  for (const auto& name : fixture_names()) {
    const Fan fan = fixture(name);
    if (fan.dim() < 2) continue;
    CAPTURE(name);
    for (const auto& sigma : fan.cones()) {
      if (sigma.dim() < 2) continue;
      const Fan sub = barycentric_star_subdivision(fan, sigma);
      CHECK(sub.ray_count() == fan.ray_count() + 1);
      CHECK(is_unimodular(sub).passed());
      CHECK(is_balanced(sub).passed() == is_balanced(fan).passed());
      CHECK_NOTHROW(Fan::validate(sub.describe()));
    }
  }
}

TEST_CASE("support is preserved by subdivision") {
  const Fan nm = fixture("nm");
  const Fan sub = barycentric_star_subdivision(nm, Cone({0, 1}));
  std::vector<QVector> points;
  for (const auto& c : nm.cones())
    for (int a = 1; a <= 3; ++a) {
      QVector x(4, 0);
      int k = a;
      for (int r : c.rays) {
        for (std::size_t i = 0; i < 4; ++i) x[i] += mpq_class(k) * nm.ray(r)[i];
        k = k % 3 + 1;
      }
      points.push_back(x);
    }
  points.push_back(QVector{1, 1, 1, 1});
  points.push_back(QVector{mpq_class(1, 2), 0, 0, 0});
  for (const auto& x : points) CHECK(support_contains(nm, x) == support_contains(sub, x));
  CHECK_FALSE(support_contains(nm, QVector{1, 1, 1, 1}));
}

TEST_CASE("product fan") {
  const Fan sq = product_fan(fixture("rank1"), fixture("rank1"));
  CHECK(f_vector(sq) == std::vector<std::size_t>{1, 4, 4});
  CHECK(is_balanced(sq).passed());
  const Fan w = product_fan(fixture("conic2"), fixture("rank1"));
  for (auto x : w.weights()) CHECK(x == 2);
}
