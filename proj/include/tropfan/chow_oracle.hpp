#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tropfan/chow.hpp"
#include "tropfan/fan.hpp"
#include "tropfan/report.hpp"

namespace tropfan {

/// Brute-force Chow ring: Q[x_1..x_r] / (I + J) in every degree up to d,
/// computed by elimination over all monomials of each degree. I is spanned
/// by the monomials whose support is not a cone, J_k by the products of
/// degree k-1 monomials with the linear forms sum_zeta <e_i*, e_zeta> x_zeta.
class ChowOracle {
 public:
  explicit ChowOracle(const Fan& fan);

  std::size_t dim() const { return degree_monomials_.size() - 1; }
  std::size_t rank(std::size_t k) const;
  /// Coordinates of the normal form of a monomial in the quotient basis.
  QVector normal_form(Monomial m) const;
  /// Normal form of a polynomial given as monomial -> coefficient, all of degree k.
  QVector normal_form(std::size_t k, const std::map<Monomial, mpq_class>& poly) const;

 private:
  struct Degree {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
    QMatrix reduced;                   // rref of the relations
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> free;     // quotient basis: non-pivot monomials
  };
  std::vector<Degree> degree_monomials_;
};

/// Compares ring dimensions and `products` randomized products of the
/// structured construction with the oracle. The structured basis is mapped
/// to the oracle quotient through the normal forms of its squarefree
/// monomials; the map must be an isomorphism that commutes with products.
Report chow_oracle_check(const Fan& fan, std::size_t products = 10, unsigned seed = 1);

}  // namespace tropfan
