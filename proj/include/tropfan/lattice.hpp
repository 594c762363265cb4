#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropfan/matrix.hpp"

namespace tropfan {

using IntVector = std::vector<std::int64_t>;

mpz_class gcd_of(const IntVector& v);
bool is_primitive(const IntVector& v);
/// Divides by the gcd of the coordinates; the zero vector is returned unchanged.
IntVector primitive_part(const IntVector& v);
IntVector primitive_part(const std::vector<mpz_class>& v);

/// Columns are the given vectors.
ZMatrix column_matrix(const std::vector<IntVector>& vectors, std::size_t dimension);

struct HermiteForm {
  ZMatrix form;       // transform * input, in row echelon form with positive pivots
  ZMatrix transform;  // unimodular
  std::size_t rank = 0;
};

/// Integer row reduction: transform * a = form, transform unimodular.
HermiteForm hermite_rows(const ZMatrix& a);

/// Basis (as columns) of the lattice {x in Z^n : a x = 0}. The basis spans a
/// saturated sublattice.
ZMatrix integer_kernel(const ZMatrix& a);

/// Basis (as columns) of span_Q(columns of g) intersected with Z^n.
ZMatrix saturation(const ZMatrix& g);

/// Gcd of the maximal minors of a full-column-rank integer matrix; the index
/// of the lattice spanned by the columns inside its saturation.
mpz_class lattice_index(const ZMatrix& g);

/// A unimodular change of basis adapted to a saturated sublattice L of Z^n.
///
/// `basis` is an n x n unimodular matrix whose first k columns are a basis of
/// L (the given generators themselves whenever they already form a basis of
/// their saturation) and `dual` is its inverse. The last n - k rows of `dual`
/// form the quotient map Z^n -> Z^n / L = Z^(n-k); the last n - k columns of
/// `basis` lift quotient coordinates back to Z^n.
class LatticeFrame {
 public:
  LatticeFrame() = default;
  /// Frame for the saturation of the span of `generators` (columns).
  explicit LatticeFrame(const ZMatrix& generators);

  std::size_t ambient_rank() const { return basis_.rows(); }
  std::size_t sub_rank() const { return sub_rank_; }
  std::size_t quotient_rank() const { return ambient_rank() - sub_rank_; }

  const ZMatrix& basis() const { return basis_; }
  const ZMatrix& dual() const { return dual_; }

  /// (n - k) x n matrix of the quotient map.
  ZMatrix projection() const;
  /// n x (n - k) matrix sending quotient coordinates to lattice representatives.
  ZMatrix lift() const;
  /// Image of a lattice vector in the quotient.
  IntVector project(const IntVector& v) const;
  /// Row i of `dual`: the functional that is 1 on basis vector i and 0 on the others.
  std::vector<mpz_class> dual_functional(std::size_t i) const;

 private:
  ZMatrix basis_;
  ZMatrix dual_;
  std::size_t sub_rank_ = 0;
};

/// Increasing p-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t p);

/// Position of an increasing subset in the lexicographic enumeration.
std::size_t subset_index(const std::vector<std::size_t>& subset, std::size_t n);

std::size_t binomial(std::size_t n, std::size_t k);

/// Coordinates of v_1 ^ ... ^ v_p in the lexicographic basis of the p-th
/// exterior power; the vectors are the columns of `vectors`.
std::vector<mpz_class> wedge(const ZMatrix& vectors);

/// Matrix of the p-th exterior power of a linear map (all p x p minors).
ZMatrix exterior_power(const ZMatrix& map, std::size_t p);

}  // namespace tropfan
