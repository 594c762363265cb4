#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tropfan/fan.hpp"
#include "tropfan/lattice.hpp"
#include "tropfan/matrix.hpp"

namespace tropfan {

/// A cell of the canonical compactification: the closure of the image of
/// `mother` in the stratum at infinity indexed by `sedentarity`.
struct CompactFace {
  Cone sedentarity;
  Cone mother;

  std::size_t dim() const { return mother.dim() - sedentarity.dim(); }
  std::string to_string() const;

  auto operator<=>(const CompactFace&) const = default;
  bool operator==(const CompactFace&) const = default;
};

/// alpha is a face of beta in the compactification.
bool is_face_of(const CompactFace& alpha, const CompactFace& beta);

/// Subspace of the p-th exterior power of the quotient lattice N^sigma (over
/// Q), given by integer basis columns in lexicographic wedge coordinates.
struct MultiTangentSpace {
  CompactFace face;
  std::size_t p = 0;
  std::size_t ambient_dim = 0;
  ZMatrix basis;  // ambient_dim x dim

  std::size_t dim() const { return basis.cols(); }
};

struct Incidence {
  std::size_t face;  // index among faces of one dimension lower
  int sign;
};

/// The canonical compactification of a unimodular fan as a cell complex.
///
/// Each cell C_gamma^sigma is a cube [0, inf]^(gamma \ sigma) in coordinates
/// ordered by the global ray order. Setting a coordinate to 0 drops the ray
/// from gamma; setting it to infinity adds the ray to sigma. The boundary of
/// the cube in position t carries sign -(-1)^t on the 0-end and +(-1)^t on
/// the infinity-end, which gives a cellular boundary with square zero.
class CompactifiedComplex {
 public:
  /// Throws InputError if the fan is not unimodular.
  explicit CompactifiedComplex(Fan fan);

  const Fan& fan() const { return fan_; }
  std::size_t dim() const { return fan_.dim(); }

  const std::vector<CompactFace>& faces(std::size_t q) const;
  std::size_t face_index(const CompactFace& face) const;
  /// Codimension-one faces of faces(q)[i] with their incidence signs.
  const std::vector<Incidence>& boundary(std::size_t q, std::size_t i) const;
  std::vector<std::size_t> f_vector() const;

  const LatticeFrame& frame(const Cone& sedentarity) const;

  /// F_p of a face. Throws InputError when p exceeds the rank of N^sigma.
  const MultiTangentSpace& multi_tangent(const CompactFace& face, std::size_t p) const;
  /// dim F_p(face); zero for every p beyond the rank of N^sigma.
  std::size_t tangent_dim(const CompactFace& face, std::size_t p) const;

  /// Matrix of the p-th exterior power of the projection N^sigma(beta) ->
  /// N^sigma(alpha), acting on ambient wedge coordinates.
  ZMatrix ambient_map(const CompactFace& beta, const CompactFace& alpha, std::size_t p) const;

  /// Matrix of iota_{beta >= alpha}: F_p(beta) -> F_p(alpha) in the chosen bases.
  QMatrix coefficient_map(const CompactFace& beta, const CompactFace& alpha, std::size_t p) const;

  /// Coordinates of an ambient vector lying in F_p(face) with respect to its basis.
  QVector coordinates(const CompactFace& face, std::size_t p, const std::vector<mpz_class>& ambient) const;

 private:
  struct TangentData {
    MultiTangentSpace space;
    std::vector<std::size_t> pivot_rows;
    QMatrix pivot_inverse;
  };

  const TangentData& tangent(const CompactFace& face, std::size_t p) const;

  Fan fan_;
  std::vector<std::vector<CompactFace>> faces_;
  std::map<CompactFace, std::size_t> index_;
  std::vector<std::vector<std::vector<Incidence>>> boundary_;
  std::map<Cone, LatticeFrame> frames_;
  std::map<CompactFace, std::vector<TangentData>> tangents_;
};

}  // namespace tropfan
