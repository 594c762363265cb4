#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "tropfan/fan.hpp"

namespace tropfan {

using ElementSet = std::vector<int>;  // sorted

/// A matroid on {0, ..., ground - 1} given by its bases.
class Matroid {
 public:
  /// Validates bounds, equicardinality and basis exchange; throws InputError.
  Matroid(std::size_t ground, std::vector<ElementSet> bases);

  std::size_t ground() const { return ground_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ElementSet>& bases() const { return bases_; }

  std::size_t rank(const ElementSet& s) const;
  ElementSet closure(const ElementSet& s) const;
  bool is_flat(const ElementSet& s) const { return closure(s) == s; }
  ElementSet loops() const;
  bool is_uniform() const;

 private:
  std::size_t ground_;
  std::size_t rank_ = 0;
  std::vector<ElementSet> bases_;
};

Matroid uniform_matroid(std::size_t r, std::size_t n);

/// All flats, grouped by rank: result[k] lists the rank-k flats in
/// lexicographic order.
std::vector<std::vector<ElementSet>> flats(const Matroid& m);

/// Proper nonempty flats ordered by rank, then lexicographically.
std::vector<ElementSet> proper_flats(const Matroid& m);

enum class BergmanStructure { fine, coarse };

/// Lattice vector of e_F in Z^E / Z(1, ..., 1), realized in Z^(|E|-1) by
/// subtracting the last coordinate.
IntVector flat_vector(const ElementSet& flat, std::size_t ground);

/// Fine structure: rays e_F for proper nonempty flats, cones from chains.
/// Coarse structure (uniform matroids only): rays for the singletons, cones
/// on all subsets of size at most rank - 1. Weights 1. Throws InputError on
/// loops or on a coarse request for a non-uniform matroid.
Fan bergman_fan(const Matroid& m, BergmanStructure structure);

}  // namespace tropfan
