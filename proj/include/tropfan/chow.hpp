#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tropfan/fan.hpp"
#include "tropfan/matrix.hpp"
#include "tropfan/report.hpp"

namespace tropfan {

/// A homogeneous class: coordinates in the chosen basis of A^degree.
struct ChowClass {
  std::size_t degree = 0;
  QVector coords;

  bool is_zero() const;
  bool operator==(const ChowClass&) const = default;
};

ChowClass operator+(const ChowClass& a, const ChowClass& b);
ChowClass operator-(const ChowClass& a, const ChowClass& b);
ChowClass operator*(const mpq_class& s, const ChowClass& a);

/// A monomial in the ray variables, as a sorted list of ray indices with
/// repetitions.
using Monomial = std::vector<int>;

/// The Chow ring of a unimodular fan.
///
/// A^k is spanned by the classes x_sigma of the k-cones. The linear relations
/// sum_zeta <m, e_zeta> x_{tau + zeta} for tau in Sigma_{k-1} and m in the
/// annihilator of tau are put in reduced row echelon form; the cones of the
/// non-pivot columns form the basis of A^k.
class ChowRing {
 public:
  /// Throws InputError for non-unimodular fans.
  explicit ChowRing(Fan fan);

  const Fan& fan() const { return fan_; }
  std::size_t dim() const { return fan_.dim(); }
  /// dim A^k; zero for k > d.
  std::size_t rank(std::size_t k) const;
  std::vector<std::size_t> ranks() const;

  /// Cones whose classes form the basis of A^k.
  const std::vector<Cone>& basis(std::size_t k) const;
  /// Relation matrix of degree k, one row per relation, columns over Sigma_k.
  const QMatrix& relations(std::size_t k) const { return relations_.at(k); }
  /// dim A^k x |Sigma_k| matrix taking spanning coordinates to basis coordinates.
  const QMatrix& reduction(std::size_t k) const { return reduction_.at(k); }

  ChowClass zero(std::size_t k) const;
  ChowClass one() const;
  ChowClass cone_class(const Cone& c) const;
  /// Class of a vector indexed by Sigma_k.
  ChowClass from_spanning(std::size_t k, const QVector& v) const;
  /// Normal form of a monomial. Degrees above d give the zero class of that
  /// degree and a warning on std::clog.
  ChowClass monomial_class(Monomial m) const;
  /// sum_zeta values[zeta] x_zeta.
  ChowClass linear_class(const QVector& values) const;

  /// Class of x_zeta x_rho for a ray zeta of the cone rho, rewritten with the
  /// functional m; m must be 1 on e_zeta and 0 on the other rays of rho.
  ChowClass square_with(const Cone& rho, int zeta, const std::vector<mpz_class>& m) const;

  ChowClass multiply(const ChowClass& a, const ChowClass& b) const;
  ChowClass power(const ChowClass& a, std::size_t e) const;
  /// Matrix of c -> a c from A^k to A^{k + deg a}.
  QMatrix multiplication_matrix(const ChowClass& a, std::size_t k) const;

  /// Whether the facet weights vanish on every top-degree relation.
  bool degree_defined() const { return degree_defined_; }
  /// deg: A^d -> Q, x_eta -> wgt(eta). Throws InputError when the fan is
  /// unweighted or the weights do not respect the relations.
  mpq_class degree(const ChowClass& c) const;
  /// Matrix of (a, b) -> deg(ab) on A^k x A^{d-k}.
  QMatrix pairing(std::size_t k) const;

 private:
  /// Spanning-set vector of a monomial in degree |m|.
  std::map<Cone, mpq_class> reduce(Monomial m) const;

  Fan fan_;
  std::vector<std::vector<Cone>> basis_;
  std::vector<QMatrix> relations_;
  std::vector<QMatrix> reduction_;
  std::map<Cone, LatticeFrame> frames_;
  bool degree_defined_ = false;
};

/// Gysin map A^*(Sigma^sigma) -> A^{* + dim sigma - dim delta}(Sigma^delta)
/// for delta contained in sigma, x_eta' -> x_eta' x_zeta1 ... x_zetar.
ChowClass gysin(const StarFan& source_star, const ChowRing& source, const StarFan& target_star,
                const ChowRing& target, const ChowClass& c);

/// dim A^k(Sigma) = dim H^{k,k} of the compactification for all k.
Report hodge_iso_check(const Fan& fan);

/// Decomposition of the Chow ring under the barycentric star subdivision at
/// sigma: the dimension identity in every degree, and the map chi with
/// chi(x_zeta) = x_zeta + x_rho for zeta in sigma and T -> -x_rho.
struct KeelDecomposition {
  Cone sigma;
  std::vector<std::size_t> subdivided_dims;
  std::vector<std::size_t> base_dims;
  std::vector<std::size_t> star_dims;
  Report report;
};

KeelDecomposition keel_check(const Fan& fan, const Cone& sigma);

/// The complex 0 -> F^k(0) -> sum_{Sigma_k} A^0(Sigma^sigma) -> ... -> A^k(Sigma) -> 0
/// with Gysin maps; checks d^2 = 0 and exactness at every position.
Report deligne_resolution_check(const Fan& fan, std::size_t k);

}  // namespace tropfan
