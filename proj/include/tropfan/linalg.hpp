#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropfan/matrix.hpp"

namespace tropfan {

// Exact linear algebra over Z and Q. Ranks and determinants of integer
// matrices use fraction-free (Bareiss) elimination; subspace work over Q
// uses reduced row echelon form with leftmost pivots.

std::size_t rank(const ZMatrix& m);
std::size_t rank(const QMatrix& m);
mpz_class determinant(const ZMatrix& m);
mpq_class determinant(const QMatrix& m);

/// Scales each row of a rational matrix to a primitive integer row.
ZMatrix clear_denominators(const QMatrix& m);

struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(QMatrix m);

/// Basis of {x : m x = 0}, one vector per column.
QMatrix nullspace(const QMatrix& m);

/// Some solution of a x = b (b may have several columns), if one exists.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);

QMatrix inverse(const QMatrix& m);

/// Indices of the leftmost maximal set of linearly independent columns.
std::vector<std::size_t> independent_columns(const QMatrix& m);
std::vector<std::size_t> independent_columns(const ZMatrix& m);

QVector multiply(const QMatrix& m, const QVector& v);

/// Leading principal minors of a square matrix, in order of size.
std::vector<mpq_class> leading_principal_minors(const QMatrix& m);

}  // namespace tropfan
