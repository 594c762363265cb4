#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropfan/lattice.hpp"
#include "tropfan/matrix.hpp"
#include "tropfan/report.hpp"

namespace tropfan {

/// Thrown for malformed or unsupported input (invalid fans, bad indices).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simplicial cone, stored by the sorted indices of its rays in the fan's
/// ray table.
struct Cone {
  std::vector<int> rays;

  Cone() = default;
  explicit Cone(std::vector<int> r);

  std::size_t dim() const { return rays.size(); }
  bool empty() const { return rays.empty(); }
  bool has_ray(int r) const;
  /// Face relation: every ray of `face` is a ray of this cone.
  bool contains(const Cone& face) const;
  Cone with(int r) const;
  Cone without(int r) const;
  /// Position of a ray in the sorted ray tuple.
  std::size_t position(int r) const;

  std::string to_string() const;

  auto operator<=>(const Cone&) const = default;
  bool operator==(const Cone&) const = default;
};

Cone cone_union(const Cone& a, const Cone& b);
Cone cone_difference(const Cone& a, const Cone& b);
Cone cone_intersection(const Cone& a, const Cone& b);

/// Unvalidated fan data, as read from a fan file. Weights are parallel to
/// `maximal_cones`; function values are parallel to `rays`.
struct FanDescription {
  std::size_t lattice_rank = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<int>> maximal_cones;
  std::optional<std::vector<std::int64_t>> weights;
  std::optional<QVector> values;
};

/// A rational simplicial fan in Z^n, closed under faces, with optional facet
/// weights. Immutable after construction.
class Fan {
 public:
  Fan() = default;

  /// Validates a description and completes the face closure. Throws
  /// InputError on non-primitive rays, dependent generators, improper
  /// intersections and malformed weights.
  static Fan validate(const FanDescription& description);

  /// Builds without the pairwise intersection check; for fans produced by
  /// constructions that preserve the fan property.
  static Fan from_trusted(const FanDescription& description);

  std::size_t lattice_rank() const { return lattice_rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(int i) const { return rays_.at(static_cast<std::size_t>(i)); }
  std::size_t ray_count() const { return rays_.size(); }

  /// All cones ordered by dimension, then lexicographically; cones()[0] is the zero cone.
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<Cone>& cones_of_dim(std::size_t k) const;
  const std::vector<Cone>& maximal_cones() const { return maximal_; }

  std::size_t dim() const { return by_dim_.empty() ? 0 : by_dim_.size() - 1; }
  bool is_pure() const;
  bool has_cone(const Cone& c) const { return index_.count(c) != 0; }
  /// Index into cones(); throws if absent.
  std::size_t cone_index(const Cone& c) const;

  bool weighted() const { return weights_.has_value(); }
  /// Weights parallel to maximal_cones().
  const std::vector<std::int64_t>& weights() const;
  std::int64_t weight(const Cone& facet) const;

  /// Rays r not in c such that c + r is a cone.
  std::vector<int> link_rays(const Cone& c) const;
  /// Cones containing c, in cones() order.
  std::vector<Cone> cones_containing(const Cone& c) const;
  std::vector<Cone> maximal_cones_containing(const Cone& c) const;

  /// n x dim(c) matrix whose columns are the ray generators of c.
  ZMatrix generators(const Cone& c) const;

  /// Canonical description: maximal cones sorted, weights aligned.
  FanDescription describe() const;

  Fan with_weights(std::vector<std::int64_t> weights) const;
  Fan without_weights() const;

 private:
  static Fan build(const FanDescription& description, bool check_intersections);

  std::size_t lattice_rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> cones_;
  std::vector<std::vector<Cone>> by_dim_;
  std::vector<Cone> maximal_;
  std::map<Cone, std::size_t> index_;
  std::optional<std::vector<std::int64_t>> weights_;
};

/// validate_fan: Fan::validate.
Fan validate_fan(const FanDescription& description);

Report is_unimodular(const Fan& fan);
bool cone_is_unimodular(const Fan& fan, const Cone& c);

/// Requires a weighted pure fan; throws InputError when weights are missing.
Report is_balanced(const Fan& fan);

/// Frame adapted to the saturated sublattice spanned by a cone.
LatticeFrame cone_frame(const Fan& fan, const Cone& c);

/// The star fan at `center`, living in the quotient lattice N / N_center,
/// with the ray correspondence back to the parent fan.
struct StarFan {
  Cone center;
  Fan fan;
  LatticeFrame frame;
  std::vector<int> ray_origin;  // star ray -> parent ray
  std::vector<int> star_ray;    // parent ray -> star ray, or -1

  /// Parent cone corresponding to a cone of the star.
  Cone lift(const Cone& star_cone) const;
  /// Star cone corresponding to a parent cone containing the center.
  Cone restrict(const Cone& parent_cone) const;
};

StarFan star_fan(const Fan& fan, const Cone& center);

/// Stellar subdivision at the barycentric ray of `sigma` (appended as the
/// last ray). Requires a unimodular fan and dim sigma >= 2.
Fan barycentric_star_subdivision(const Fan& fan, const Cone& sigma);

std::vector<std::size_t> f_vector(const Fan& fan);

/// Product fan in N1 x N2; weights multiply.
Fan product_fan(const Fan& a, const Fan& b);

/// Membership of a rational point in the support of the fan.
bool support_contains(const Fan& fan, const QVector& point);

}  // namespace tropfan
