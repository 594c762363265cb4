#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropfan/complex.hpp"
#include "tropfan/fan.hpp"
#include "tropfan/matrix.hpp"
#include "tropfan/report.hpp"

namespace tropfan {

/// dim H_{p,q} (or H^{p,q}) for 0 <= p, q <= d.
struct BettiTable {
  std::size_t d = 0;
  std::vector<std::vector<std::size_t>> entries;  // entries[p][q]

  explicit BettiTable(std::size_t dimension = 0)
      : d(dimension), entries(dimension + 1, std::vector<std::size_t>(dimension + 1, 0)) {}

  /// Zero outside [0, d]^2.
  std::size_t at(std::size_t p, std::size_t q) const;
  /// b_k = sum over p + q = k.
  std::vector<std::size_t> betti_numbers() const;
  std::string to_string() const;

  bool operator==(const BettiTable&) const = default;
};

/// The complex C_{p,*}: boundaries[q] is the matrix of C_{p,q} -> C_{p,q-1}
/// in the multi-tangent bases, faces ordered as in the compactified complex.
/// boundaries[0] has zero rows.
struct ChainComplex {
  std::size_t p = 0;
  std::vector<std::size_t> dims;
  std::vector<QMatrix> boundaries;

  std::size_t rank(std::size_t q) const;  // rank of boundaries[q]; 0 outside range
  std::size_t homology_dim(std::size_t q) const;
  /// Offset of the block of faces(q)[i] inside C_{p,q}.
  std::vector<std::vector<std::size_t>> offsets;
};

ChainComplex chain_complex(const CompactifiedComplex& complex, std::size_t p);

/// Coboundaries delta^q: C^{p,q} -> C^{p,q+1} in the dual bases.
std::vector<QMatrix> cochain_complex(const ChainComplex& chains);

BettiTable homology_table(const CompactifiedComplex& complex);
BettiTable cohomology_table(const CompactifiedComplex& complex);
BettiTable betti_table(const Fan& fan);

/// Cycle representatives of a basis of H_q, as columns: kernel vectors that
/// are independent modulo the boundaries, chosen leftmost.
QMatrix homology_basis(const ChainComplex& chains, std::size_t q);

/// H^{p,0}(X) = F^p(0), the dual of F_p(0). `functionals` has one row per
/// basis element, acting on wedge coordinates of the p-th exterior power of N.
struct OpenCohomology {
  std::size_t dim = 0;
  ZMatrix tangent_basis;  // basis of F_p(0), as columns
  QMatrix functionals;    // dual basis
};

OpenCohomology fan_open_cohomology(const Fan& fan, std::size_t p);

struct FundamentalCycle {
  std::vector<CompactFace> faces;                 // C_gamma^0 for the facets gamma
  std::vector<std::vector<mpz_class>> multivectors;  // wgt(gamma) * omega_gamma
  QVector chain;     // the same chain in the coordinates of C_{d,d}
  QVector boundary;  // its image in C_{d,d-1}
  bool is_cycle = false;
};

/// Requires a weighted pure unimodular fan.
FundamentalCycle fundamental_class(const Fan& fan);

/// Necessary conditions for Poincare duality on the compactification:
/// (a) dim H^{p,q} = dim H_{d-p,d-q}, (b) dim H^{d,d} = 1, (c) H^{p,q} = 0
/// for p != q.
Report pd_battery(const Fan& fan);
Report pd_battery(const BettiTable& homology, const BettiTable& cohomology);

/// PD battery on the star of every cone, the zero cone included. Stars are
/// processed in parallel (see worker_count).
Report is_tropical_homology_manifold(const Fan& fan);

}  // namespace tropfan
