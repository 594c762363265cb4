#include <doctest.h>

#include "tropfan/complex.hpp"
#include "tropfan/fixtures.hpp"
#include "tropfan/linalg.hpp"

using namespace tropfan;

TEST_CASE("f-vectors of compactifications") {
  CHECK(CompactifiedComplex(fixture("rank1")).f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(CompactifiedComplex(fixture("cross")).f_vector() == std::vector<std::size_t>{5, 4});
  CHECK(CompactifiedComplex(fixture("line2")).f_vector() == std::vector<std::size_t>{4, 3});
}

TEST_CASE("non-unimodular fans are rejected") {
  FanDescription d;
  d.lattice_rank = 2;
  d.rays = {{1, 0}, {1, 2}};
  d.maximal_cones = {{0, 1}};
  CHECK_THROWS_AS(CompactifiedComplex(Fan::validate(d)), InputError);
}

TEST_CASE("multi-tangent spaces") {
  const CompactifiedComplex cross(fixture("cross"));
  const CompactFace center{Cone{}, Cone{}};
  CHECK(cross.multi_tangent(center, 0).dim() == 1);
  CHECK(cross.multi_tangent(center, 1).dim() == 2);
  const CompactFace end{Cone({0}), Cone({0})};
  CHECK(cross.multi_tangent(end, 1).dim() == 0);
  CHECK_THROWS_AS(cross.multi_tangent(end, 2), InputError);
  CHECK_THROWS_AS(cross.multi_tangent(center, 3), InputError);
}

TEST_CASE("coefficient maps") {
  const CompactifiedComplex line(fixture("line2"));
  const CompactFace edge{Cone{}, Cone({0})};
  const CompactFace center{Cone{}, Cone{}};
  const auto& e = line.multi_tangent(edge, 1);
  CHECK(e.dim() == 1);
  CHECK(e.basis == ZMatrix{{1}, {0}});
  const QMatrix inc = line.coefficient_map(edge, center, 1);
  CHECK(inc.rows() == 2);
  CHECK(inc.cols() == 1);
  CHECK(rank(inc) == 1);

  const CompactifiedComplex cross(fixture("cross"));
  const CompactFace ray{Cone{}, Cone({1})};
  const CompactFace end{Cone({1}), Cone({1})};
  const QMatrix zero = cross.coefficient_map(ray, end, 1);
  CHECK(zero.rows() == 0);
  CHECK(zero.cols() == 1);
  const QMatrix id = cross.coefficient_map(ray, end, 0);
  CHECK(id == QMatrix{{1}});
  CHECK_THROWS_AS(cross.coefficient_map(end, ray, 0), InputError);
}

TEST_CASE("coefficient maps are functorial") {
  for (const char* name : {"p2", "u34-coarse", "nm", "p3"}) {
    CAPTURE(name);
    const CompactifiedComplex cx(fixture(name));
    std::vector<CompactFace> all;
    for (std::size_t q = 0; q <= cx.dim(); ++q)
      for (const auto& f : cx.faces(q)) all.push_back(f);
    std::size_t checked = 0;
    for (const auto& beta : all)
      for (const auto& alpha : all) {
        if (alpha == beta || !is_face_of(alpha, beta)) continue;
        for (const auto& low : all) {
          if (low == alpha || !is_face_of(low, alpha)) continue;
          for (std::size_t p = 0; p <= cx.dim(); ++p) {
            const QMatrix direct = cx.coefficient_map(beta, low, p);
            const QMatrix composite = cx.coefficient_map(alpha, low, p) * cx.coefficient_map(beta, alpha, p);
            CHECK(direct == composite);
            ++checked;
          }
        }
      }
    CHECK(checked > 0);
  }
}

TEST_CASE("multi-tangent spaces shrink as the mother grows") {
  for (const char* name : {"nm", "p3"}) {
    const CompactifiedComplex cx(fixture(name));
    for (std::size_t q = 1; q <= cx.dim(); ++q)
      for (const auto& big : cx.faces(q))
        for (int r : cone_difference(big.mother, big.sedentarity).rays) {
          const CompactFace small{big.sedentarity, big.mother.without(r)};
          for (std::size_t p = 0; p <= cx.frame(big.sedentarity).quotient_rank(); ++p) {
            const auto& a = cx.multi_tangent(big, p);
            const auto& b = cx.multi_tangent(small, p);
            // every basis vector of the larger face lies in the smaller space
            for (std::size_t c = 0; c < a.dim(); ++c) CHECK_NOTHROW(cx.coordinates(small, p, a.basis.column(c)));
            CHECK(a.dim() <= b.dim());
          }
        }
  }
}

TEST_CASE("incidences") {
  const CompactifiedComplex cx(fixture("rank1"));
  for (std::size_t i = 0; i < cx.faces(1).size(); ++i) {
    const auto& inc = cx.boundary(1, i);
    REQUIRE(inc.size() == 2);
    CHECK(inc[0].sign + inc[1].sign == 0);
  }
}
