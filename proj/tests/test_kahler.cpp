#include <doctest.h>

#include "tropfan/fixtures.hpp"
#include "tropfan/kahler.hpp"
#include "tropfan/linalg.hpp"

using namespace tropfan;

namespace {

const QVector nm_ample{13, 0, 0, 0, 0, -8, -3, 16, -5, 7};

}  // namespace

TEST_CASE("strict convexity") {
  CHECK(is_strictly_convex(fixture("p2"), {0, 0, 1}).passed());
  CHECK(is_strictly_convex(fixture("line2"), {1, 1, 1}).passed());
  CHECK_FALSE(is_strictly_convex(fixture("p2"), {0, 0, 0}).passed());
  CHECK_FALSE(is_strictly_convex(fixture("line2"), {0, 0, 0}).passed());
  CHECK(is_strictly_convex(fixture("nm"), nm_ample).passed());
  CHECK_THROWS_AS(is_strictly_convex(fixture("p2"), {0, 1}), InputError);
}

TEST_CASE("scaling and linear shifts keep strict convexity") {
  QVector doubled = nm_ample;
  for (auto& x : doubled) x *= 2;
  CHECK(is_strictly_convex(fixture("nm"), doubled).passed());
  const Fan nm = fixture("nm");
  const std::vector<mpq_class> m{1, -2, 3, 5};
  QVector shifted = nm_ample;
  for (std::size_t i = 0; i < shifted.size(); ++i)
    for (std::size_t j = 0; j < 4; ++j) shifted[i] += m[j] * nm.ray(static_cast<int>(i))[j];
  CHECK(is_strictly_convex(nm, shifted).passed());

  // L does not see the linear part
  const ChowRing ring(nm);
  const ChowClass a = ring.linear_class(nm_ample), b = ring.linear_class(shifted);
  CHECK(a == b);
  CHECK(ring.multiplication_matrix(a, 1) == ring.multiplication_matrix(b, 1));
}

TEST_CASE("search finds strictly convex functions") {
  for (const char* name : {"p2", "p3", "line2", "elliptic", "u34-coarse", "u34-fine", "nm"}) {
    CAPTURE(name);
    const auto f = find_strictly_convex(fixture(name));
    REQUIRE(f.has_value());
    CHECK(is_strictly_convex(fixture(name), *f).passed());
  }
}

TEST_CASE("hard Lefschetz and Hodge-Riemann") {
  const ChowRing p2(fixture("p2"));
  const ChowClass L = p2.linear_class({0, 0, 1});
  CHECK(hard_lefschetz_check(p2, L, 0).passed());
  CHECK(hard_lefschetz_check(p2, L, 1).passed());
  CHECK(hodge_riemann_check(p2, L, 0).passed());
  const Report hr1 = hodge_riemann_check(p2, L, 1);
  CHECK(hr1.passed());
  CHECK(*hr1.value("dim P^k") == "0");

  const ChowRing nm(fixture("nm"));
  const ChowClass Lnm = nm.linear_class(nm_ample);
  CHECK(nm.degree(nm.power(Lnm, 2)) > 0);
  for (std::size_t k = 0; k <= 1; ++k) {
    CHECK(hard_lefschetz_check(nm, Lnm, k).passed());
    CHECK(hodge_riemann_check(nm, Lnm, k).passed());
  }

  const Fan fine = fixture("u34-fine");
  const ChowRing u(fine);
  const auto f = find_strictly_convex(fine);
  REQUIRE(f.has_value());
  const Report hr = hodge_riemann_check(u, u.linear_class(*f), 1);
  CHECK(hr.passed());
  CHECK(*hr.value("dim P^k") == "6");
}

TEST_CASE("ample classes agree on the verdicts") {
  const Fan nm = fixture("nm");
  const ChowRing ring(nm);
  const auto f = find_strictly_convex(nm);
  REQUIRE(f.has_value());
  QVector g = *f;
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = 2 * g[i] + 3 * nm_ample[i];
  REQUIRE(is_strictly_convex(nm, g).passed());
  for (std::size_t k = 0; k <= 1; ++k) {
    CHECK(hard_lefschetz_check(ring, ring.linear_class(*f), k).passed() ==
          hard_lefschetz_check(ring, ring.linear_class(g), k).passed());
    CHECK(hodge_riemann_check(ring, ring.linear_class(*f), k).passed() ==
          hodge_riemann_check(ring, ring.linear_class(g), k).passed());
  }
}

TEST_CASE("Kahler fans") {
  const Report nm = is_kahler(fixture("nm"), nm_ample);
  CHECK(nm.passed());
  CHECK(*nm.value("ample function") == "13 0 0 0 0 -8 -3 16 -5 7");
  CHECK(is_kahler(fixture("u34-coarse")).passed());
  CHECK(is_kahler(fixture("u34-fine")).passed());
  CHECK(is_kahler(fixture("p3")).passed());
  const Report cross = is_kahler(fixture("cross"));
  CHECK(cross.verdict == Verdict::fail);
  // a non-convex candidate falls back to the search
  CHECK(is_kahler(fixture("p2"), QVector{0, 0, 0}).passed());
}

TEST_CASE("a twisted prism fan has no strictly convex function") {
  // fan over the boundary of a triangular prism whose square faces are cut by
  // diagonals turning the same way around
  FanDescription d;
  d.lattice_rank = 3;
  d.rays = {{1, 0, -1}, {0, 1, -1}, {-1, -1, -1}, {1, 0, 1}, {0, 1, 1}, {-1, -1, 1}};
  d.maximal_cones = {{0, 1, 2}, {3, 4, 5}, {0, 1, 4}, {0, 3, 4}, {1, 2, 5}, {1, 4, 5}, {0, 2, 3}, {2, 3, 5}};
  const Fan fan = Fan::validate(d);
  CHECK_FALSE(find_strictly_convex(fan).has_value());
}
