#include <doctest.h>

#include "tropfan/chow.hpp"
#include "tropfan/chow_oracle.hpp"
#include "tropfan/fixtures.hpp"
#include "tropfan/linalg.hpp"
#include "tropfan/matroid.hpp"

using namespace tropfan;

TEST_CASE("Chow ring dimensions") {
  CHECK(ChowRing(fixture("p2")).ranks() == std::vector<std::size_t>{1, 1, 1});
  CHECK(ChowRing(fixture("u34-coarse")).ranks() == std::vector<std::size_t>{1, 1, 1});
  CHECK(ChowRing(fixture("u34-fine")).ranks() == std::vector<std::size_t>{1, 7, 1});
  CHECK(ChowRing(fixture("nm")).ranks() == std::vector<std::size_t>{1, 6, 1});
  CHECK(ChowRing(fixture("cross")).ranks() == std::vector<std::size_t>{1, 2});
  CHECK(ChowRing(fixture("p3")).ranks() == std::vector<std::size_t>{1, 1, 1, 1});
  FanDescription d;
  d.lattice_rank = 2;
  d.rays = {{1, 0}, {1, 2}};
  d.maximal_cones = {{0, 1}};
  CHECK_THROWS_AS(ChowRing(Fan::validate(d)), InputError);
}

TEST_CASE("products in the P2 fan") {
  const ChowRing ring(fixture("p2"));
  CHECK(ring.monomial_class({0, 1}) == ring.cone_class(Cone({0, 1})));
  const ChowClass square = ring.monomial_class({0, 0});
  CHECK(ring.degree(square) == 1);
  CHECK(ring.degree(ring.cone_class(Cone({0, 1}))) == 1);
}

TEST_CASE("monomials off the fan vanish") {
  const ChowRing ring(fixture("u34-fine"));
  // rays 0 and 1 are the flats {0} and {1}; they are not in a common chain
  CHECK(ring.monomial_class({0, 1}).is_zero());
}

TEST_CASE("degree map") {
  const ChowRing cross(fixture("cross"));
  for (int r = 0; r < 4; ++r) CHECK(cross.degree(cross.cone_class(Cone({r}))) == 1);
  // every relation evaluates to zero under the degree
  CHECK(cross.degree_defined());
  const ChowRing doubled(fixture("cross").with_weights({2, 2, 2, 2}));
  for (int r = 0; r < 4; ++r) CHECK(doubled.degree(doubled.cone_class(Cone({r}))) == 2);

  FanDescription d;
  d.lattice_rank = 2;
  d.rays = {{1, 0}, {0, 1}};
  d.maximal_cones = {{0}, {1}};
  const ChowRing unbalanced(Fan::validate(d));
  CHECK_FALSE(unbalanced.degree_defined());
  CHECK_THROWS_AS(unbalanced.degree(unbalanced.cone_class(Cone({0}))), InputError);
}

TEST_CASE("products above the top degree are zero") {
  const ChowRing ring(fixture("line2"));
  const ChowClass x = ring.cone_class(Cone({0}));
  const ChowClass p = ring.multiply(x, x);
  CHECK(p.degree == 2);
  CHECK(p.is_zero());
}

TEST_CASE("multiplication is commutative and associative") {
  for (const char* name : {"p3", "nm", "u34-fine"}) {
    CAPTURE(name);
    const ChowRing ring(fixture(name));
    const auto& rays = ring.fan().cones_of_dim(1);
    for (std::size_t i = 0; i < rays.size(); i += 2)
      for (std::size_t j = 1; j < rays.size(); j += 3) {
        const ChowClass a = ring.cone_class(rays[i]);
        const ChowClass b = ring.cone_class(rays[j]);
        CHECK(ring.multiply(a, b) == ring.multiply(b, a));
        if (ring.dim() >= 3) {
          const ChowClass c = ring.cone_class(rays[(i + j) % rays.size()]);
          CHECK(ring.multiply(ring.multiply(a, b), c) == ring.multiply(a, ring.multiply(b, c)));
        }
      }
  }
}

TEST_CASE("reduction does not depend on the functional") {
  for (const char* name : {"p2", "p3", "nm", "u34-fine"}) {
    CAPTURE(name);
    const ChowRing ring(fixture(name));
    const Fan& fan = ring.fan();
    for (const auto& rho : fan.cones()) {
      if (rho.empty() || rho.dim() >= fan.dim()) continue;
      const LatticeFrame frame = cone_frame(fan, rho);
      const ZMatrix annihilator = frame.projection();
      for (int zeta : rho.rays) {
        const auto m = frame.dual_functional(rho.position(zeta));
        const ChowClass reference = ring.square_with(rho, zeta, m);
        for (std::size_t a = 0; a < annihilator.rows(); ++a) {
          auto other = m;
          for (std::size_t i = 0; i < other.size(); ++i) other[i] += (a + 2) * annihilator(a, i);
          CHECK(ring.square_with(rho, zeta, other) == reference);
        }
        Monomial mono = rho.rays;
        mono.push_back(zeta);
        CHECK(ring.monomial_class(mono) == reference);
      }
    }
  }
}

TEST_CASE("Gysin maps") {
  const Fan p2 = fixture("p2");
  const Cone zero{}, e1({0}), top({0, 1});
  const StarFan s0 = star_fan(p2, zero), s1 = star_fan(p2, e1), s2 = star_fan(p2, top);
  const ChowRing r0(s0.fan), r1(s1.fan), r2(s2.fan);
  // 1 -> x_eta, degree = weight
  const ChowClass g = gysin(s2, r2, s0, r0, r2.one());
  CHECK(r0.degree(g) == 1);
  CHECK(gysin(s2, r2, s0, r0, r2.zero(0)).is_zero());
  CHECK_THROWS_AS(gysin(s0, r0, s2, r2, r0.one()), InputError);

  // composition along every flag of P2 and P3
  for (const char* name : {"p2", "p3", "nm"}) {
    CAPTURE(name);
    const Fan fan = fixture(name);
    for (const auto& sigma : fan.cones())
      for (int z : sigma.rays) {
        const Cone mid = sigma.without(z);
        for (int w : mid.rays) {
          const Cone low = mid.without(w);
          const StarFan a = star_fan(fan, sigma), b = star_fan(fan, mid), c = star_fan(fan, low);
          const ChowRing ra(a.fan), rb(b.fan), rc(c.fan);
          for (std::size_t k = 0; k <= ra.dim(); ++k)
            for (std::size_t i = 0; i < ra.rank(k); ++i) {
              ChowClass e = ra.zero(k);
              e.coords[i] = 1;
              CHECK(gysin(a, ra, c, rc, e) == gysin(b, rb, c, rc, gysin(a, ra, b, rb, e)));
            }
        }
      }
  }
}

TEST_CASE("degree of the Gysin image of a facet star is the weight") {
  const Fan fan = fixture("conic2");
  const StarFan base = star_fan(fan, Cone{});
  const ChowRing ring(base.fan);
  for (const auto& eta : fan.maximal_cones()) {
    const StarFan s = star_fan(fan, eta);
    const ChowRing local(s.fan);
    CHECK(ring.degree(gysin(s, local, base, ring, local.one())) == fan.weight(eta));
  }
}

TEST_CASE("Hodge isomorphism") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CHECK(hodge_iso_check(fixture(name)).passed());
  }
  const Fan nm = fixture("nm");
  CHECK(hodge_iso_check(barycentric_star_subdivision(nm, nm.maximal_cones().front())).passed());
}

TEST_CASE("oracle equivalence") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const Report r = chow_oracle_check(fixture(name), 10, 7);
    CHECK(r.passed());
  }
  const ChowOracle oracle(fixture("p2"));
  CHECK(oracle.rank(0) == 1);
  CHECK(oracle.rank(1) == 1);
  CHECK(oracle.rank(2) == 1);
}

TEST_CASE("Poincare pairing is perfect") {
  for (const char* name : {"p2", "p3", "nm", "u34-fine", "u34-coarse", "elliptic", "line2"}) {
    CAPTURE(name);
    const ChowRing ring(fixture(name));
    for (std::size_t k = 0; k <= ring.dim(); ++k) {
      const QMatrix m = ring.pairing(k);
      REQUIRE(m.rows() == m.cols());
      CHECK(determinant(m) != 0);
    }
  }
}

TEST_CASE("Keel decomposition") {
  const KeelDecomposition p2 = keel_check(fixture("p2"), Cone({0, 1}));
  CHECK(p2.report.passed());
  CHECK(p2.subdivided_dims == std::vector<std::size_t>{1, 2, 1});
  const Fan nm = fixture("nm");
  CHECK(keel_check(nm, nm.maximal_cones().front()).report.passed());
  CHECK(keel_check(fixture("p3"), Cone({0, 1, 2})).report.passed());
  CHECK(keel_check(fixture("p3"), Cone({0, 1})).report.passed());
  CHECK(keel_check(fixture("u34-fine"), fixture("u34-fine").maximal_cones().back()).report.passed());
  CHECK_THROWS_AS(keel_check(fixture("p2"), Cone({0})), InputError);
}

TEST_CASE("coarse to fine U34 through six subdivisions") {
  // subdividing the six 2-cones of the coarse fan adds the pair flats
  Fan fan = fixture("u34-coarse");
  std::vector<std::size_t> degree_one{ChowRing(fan).rank(1)};
  for (int step = 0; step < 6; ++step) {
    Cone target;
    for (const auto& c : fan.maximal_cones())
      if (c.rays[0] < 4 && c.rays[1] < 4) {
        target = c;
        break;
      }
    const KeelDecomposition k = keel_check(fan, target);
    CHECK(k.report.passed());
    fan = barycentric_star_subdivision(fan, target);
    degree_one.push_back(ChowRing(fan).rank(1));
  }
  CHECK(degree_one == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(ChowRing(fan).ranks() == ChowRing(fixture("u34-fine")).ranks());
}

TEST_CASE("Deligne resolution") {
  const Report line = deligne_resolution_check(fixture("line2"), 1);
  CHECK(line.passed());
  CHECK(*line.value("dims") == "2,3,1");
  const Report coarse = deligne_resolution_check(fixture("u34-coarse"), 1);
  CHECK(coarse.passed());
  CHECK(*coarse.value("dims") == "3,4,1");
  CHECK(*deligne_resolution_check(fixture("u34-coarse"), 2).value("dims") == "3,6,4,1");
  for (const char* name : {"line2", "u34-coarse", "u34-fine", "nm", "p2", "elliptic"}) {
    CAPTURE(name);
    const Fan fan = fixture(name);
    for (std::size_t k = 0; k <= fan.dim(); ++k) CHECK(deligne_resolution_check(fan, k).passed());
  }
  CHECK(*deligne_resolution_check(fixture("p2"), 0).value("dims") == "1,1");
  const Report cross = deligne_resolution_check(fixture("cross"), 1);
  CHECK_FALSE(cross.passed());
}
