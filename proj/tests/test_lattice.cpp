#include <doctest.h>

#include "tropfan/feasibility.hpp"
#include "tropfan/lattice.hpp"
#include "tropfan/linalg.hpp"

using namespace tropfan;

TEST_CASE("rank and determinant") {
  const ZMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(rank(a) == 2);
  CHECK(determinant(a) == 0);
  const ZMatrix b{{2, 1}, {1, 1}};
  CHECK(determinant(b) == 1);
  const QMatrix q{{mpq_class(1, 2), 1}, {1, 2}};
  CHECK(rank(q) == 1);
}

TEST_CASE("rref, nullspace and solve") {
  const QMatrix a{{1, 2, 3}, {2, 4, 7}};
  const RowEchelon e = rref(a);
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  const QMatrix k = nullspace(a);
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());
  const QMatrix rhs{{1}, {3}};
  const auto x = solve(a, rhs);
  REQUIRE(x.has_value());
  CHECK(a * *x == rhs);
  CHECK_FALSE(solve(QMatrix{{1, 1}, {1, 1}}, QMatrix{{1}, {2}}).has_value());
  const QMatrix m{{2, 1}, {1, 1}};
  CHECK(m * inverse(m) == QMatrix::identity(2));
}

TEST_CASE("primitive vectors") {
  CHECK(is_primitive({2, 3}));
  CHECK_FALSE(is_primitive({2, 4}));
  CHECK(primitive_part(IntVector{2, -4}) == IntVector{1, -2});
  CHECK(primitive_part(IntVector{0, 0}) == IntVector{0, 0});
}

TEST_CASE("lattice index and saturation") {
  CHECK(lattice_index(ZMatrix{{1, 1}, {0, 2}}) == 2);
  CHECK(lattice_index(ZMatrix{{1}, {1}, {1}}) == 1);
  const ZMatrix s = saturation(ZMatrix{{2}, {4}});
  CHECK(s == ZMatrix{{1}, {2}});
  const ZMatrix k = integer_kernel(ZMatrix{{1, 1, 1}});
  CHECK(k.cols() == 2);
  CHECK((ZMatrix{{1, 1, 1}} * k).is_zero());
}

TEST_CASE("lattice frame") {
  const ZMatrix g{{1}, {1}, {0}};
  const LatticeFrame f(g);
  CHECK(f.sub_rank() == 1);
  CHECK(f.quotient_rank() == 2);
  CHECK(f.basis() * f.dual() == ZMatrix::identity(3));
  CHECK(f.basis().column(0) == g.column(0));
  CHECK(f.project({1, 1, 0}) == IntVector{0, 0});
  CHECK((f.projection() * f.lift()) == ZMatrix::identity(2));
  CHECK(abs(determinant(f.basis())) == 1);
}

TEST_CASE("exterior algebra") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 3) == 0);
  CHECK(subsets(3, 0).size() == 1);
  const auto s = subsets(4, 2);
  CHECK(s.size() == 6);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(subset_index(s[i], 4) == i);
  const auto w = wedge(ZMatrix{{1, 0}, {0, 1}, {0, 0}});
  CHECK(w == std::vector<mpz_class>{1, 0, 0});
  const ZMatrix a{{1, 2}, {3, 4}};
  CHECK(exterior_power(a, 2) == ZMatrix{{-2}});
  CHECK(exterior_power(a, 0) == ZMatrix{{1}});
}

TEST_CASE("exterior power is functorial") {
  const ZMatrix a{{1, 2, 0}, {0, 1, 1}, {1, 0, 3}};
  const ZMatrix b{{2, 0, 1}, {1, 1, 0}, {0, -1, 1}};
  for (std::size_t p = 0; p <= 3; ++p) CHECK(exterior_power(a * b, p) == exterior_power(a, p) * exterior_power(b, p));
}

TEST_CASE("Fourier-Motzkin feasibility") {
  // x > 0, y > 0, x + y < 1
  std::vector<LinearConstraint> c{{{-1, 0}, Relation::less, 0}, {{0, -1}, Relation::less, 0}, {{1, 1}, Relation::less, 1}};
  CHECK(is_feasible(c, 2));
  // x > 0, x < 0
  CHECK_FALSE(is_feasible({{{-1}, Relation::less, 0}, {{1}, Relation::less, 0}}, 1));
  // x >= 0, x <= 0 is feasible, strictness matters
  CHECK(is_feasible({{{-1}, Relation::less_equal, 0}, {{1}, Relation::less_equal, 0}}, 1));
  CHECK_FALSE(is_feasible({{{1, 1}, Relation::equal, 1}, {{1, 1}, Relation::equal, 2}}, 2));
}
