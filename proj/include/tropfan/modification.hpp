#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropfan/fan.hpp"

namespace tropfan {

/// Codimension-one cones where the graph of f fails to balance, with the
/// signed weight that the vertical cell over them needs.
struct Divisor {
  std::vector<Cone> cones;  // in the ray indexing of the input fan
  std::vector<std::int64_t> weights;

  bool empty() const { return cones.empty(); }
  /// The divisor as a weighted fan in N; nullopt when empty.
  std::optional<Fan> as_fan(const Fan& ambient) const;
};

/// For a balanced pure fan and integer ray values of f: at each (d-1)-cone
/// tau, with v = sum wgt(eta) e_eta/tau = sum c_zeta e_zeta over the rays of
/// tau, the weight is sum c_zeta f(zeta) - sum wgt(eta) f(eta/tau).
Divisor divisor(const Fan& fan, const QVector& values);

struct ModificationResult {
  Fan graph_fan;
  Divisor divisor;
  std::vector<IntVector> added_rays;
};

/// The graph of f in N x Z with a vertical cell tau + e_last over every
/// divisor cone tau. Rays are the lifted rays in input order followed by
/// e_last when the divisor is nonempty. Throws InputError if f is not
/// integral, the input is not balanced, or the result is not unimodular.
ModificationResult tropical_modification(const Fan& fan, const QVector& values);

}  // namespace tropfan
