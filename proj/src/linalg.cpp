#include "tropfan/linalg.hpp"

#include <stdexcept>

namespace tropfan {

namespace {

// In-place Bareiss elimination. Returns the rank; `sign` tracks row swaps.
std::size_t bareiss(ZMatrix& a, int& sign) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  mpz_class previous = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      a.swap_rows(pivot, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    previous = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const ZMatrix& m) {
  ZMatrix a = m;
  int sign = 1;
  return bareiss(a, sign);
}

std::size_t rank(const QMatrix& m) { return rank(clear_denominators(m)); }

mpz_class determinant(const ZMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  ZMatrix a = m;
  int sign = 1;
  const std::size_t r = bareiss(a, sign);
  if (r < m.rows()) return 0;
  return sign * a(m.rows() - 1, m.cols() - 1);
}

mpq_class determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  mpq_class scale = 1;
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class v = m(r, c) * l;
      z(r, c) = v.get_num();
    }
    scale *= l;
  }
  mpq_class det = determinant(z);
  return det / scale;
}

ZMatrix clear_denominators(const QMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    mpz_class g = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class v = m(r, c) * l;
      z(r, c) = v.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z(r, c).get_mpz_t());
    }
    if (g > 1)
      for (std::size_t c = 0; c < m.cols(); ++c) mpz_divexact(z(r, c).get_mpz_t(), z(r, c).get_mpz_t(), g.get_mpz_t());
  }
  return z;
}

RowEchelon rref(QMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(pivot, r);
    const mpq_class inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const mpq_class f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

QMatrix nullspace(const QMatrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  QMatrix basis(cols, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.reduced(i, free[k]);
  }
  return basis;
}

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  QMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() >= a.cols()) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[i], c) = e.reduced(i, a.cols() + c);
  return x;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  auto x = solve(m, QMatrix::identity(m.rows()));
  if (!x || rank(m) != m.rows()) throw std::domain_error("inverse of a singular matrix");
  return *x;
}

std::vector<std::size_t> independent_columns(const QMatrix& m) { return rref(m).pivots; }

std::vector<std::size_t> independent_columns(const ZMatrix& m) { return rref(to_rational(m)).pivots; }

QVector multiply(const QMatrix& m, const QVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  QVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (v[c] != 0) out[r] += m(r, c) * v[c];
  return out;
}

std::vector<mpq_class> leading_principal_minors(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leading minors of a non-square matrix");
  std::vector<mpq_class> minors;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    QMatrix block(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
    minors.push_back(determinant(block));
  }
  return minors;
}

}  // namespace tropfan
