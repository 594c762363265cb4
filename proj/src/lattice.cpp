#include "tropfan/lattice.hpp"

#include <stdexcept>

#include "tropfan/linalg.hpp"

namespace tropfan {

mpz_class gcd_of(const IntVector& v) {
  mpz_class g = 0;
  for (auto x : v) {
    mpz_class y = static_cast<long>(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
  }
  return g;
}

bool is_primitive(const IntVector& v) { return gcd_of(v) == 1; }

IntVector primitive_part(const IntVector& v) {
  const mpz_class g = gcd_of(v);
  if (g == 0) return v;
  IntVector out(v.size());
  const long gl = g.get_si();
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / gl;
  return out;
}

IntVector primitive_part(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class y = g == 0 ? v[i] : mpz_class(v[i] / g);
    if (!y.fits_slong_p()) throw std::overflow_error("lattice coordinate exceeds 64 bits");
    out[i] = y.get_si();
  }
  return out;
}

ZMatrix column_matrix(const std::vector<IntVector>& vectors, std::size_t dimension) {
  ZMatrix m(dimension, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (vectors[c].size() != dimension) throw std::invalid_argument("vector has the wrong number of coordinates");
    for (std::size_t r = 0; r < dimension; ++r) m(r, c) = static_cast<long>(vectors[c][r]);
  }
  return m;
}

HermiteForm hermite_rows(const ZMatrix& a) {
  HermiteForm h{a, ZMatrix::identity(a.rows()), 0};
  ZMatrix& m = h.form;
  ZMatrix& u = h.transform;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto axpy_row = [&](ZMatrix& t, std::size_t dst, std::size_t src, const mpz_class& f) {
    for (std::size_t c = 0; c < t.cols(); ++c)
      if (t(src, c) != 0) t(dst, c) -= f * t(src, c);
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      // smallest nonzero entry at or below row r becomes the pivot
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m(i, c) != 0 && (best == rows || abs(m(i, c)) < abs(m(best, c)))) best = i;
      if (best == rows) break;
      m.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        axpy_row(m, i, r, q);
        axpy_row(u, i, r, q);
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && m(r, c) != 0) {
      if (m(r, c) < 0) {
        for (std::size_t j = 0; j < cols; ++j) m(r, j) = -m(r, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
      }
      // reduce entries above the pivot into [0, pivot)
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        if (q != 0) {
          axpy_row(m, i, r, q);
          axpy_row(u, i, r, q);
        }
      }
      ++r;
    }
  }
  h.rank = r;
  return h;
}

ZMatrix integer_kernel(const ZMatrix& a) {
  // rows of T with T * a^T = H; the rows of T opposite zero rows of H span the kernel
  const HermiteForm h = hermite_rows(a.transpose());
  const std::size_t n = a.cols();
  ZMatrix k(n, n - h.rank);
  for (std::size_t j = 0; j < n - h.rank; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j) = h.transform(h.rank + j, i);
  return k;
}

ZMatrix saturation(const ZMatrix& g) {
  const ZMatrix annihilator = integer_kernel(g.transpose());  // n x (n - r)
  return integer_kernel(annihilator.transpose());
}

mpz_class lattice_index(const ZMatrix& g) {
  const HermiteForm h = hermite_rows(g);
  if (h.rank != g.cols()) return 0;
  mpz_class index = 1;
  for (std::size_t i = 0; i < g.cols(); ++i) index *= h.form(i, i);
  return abs(index);
}

LatticeFrame::LatticeFrame(const ZMatrix& generators) {
  const std::size_t n = generators.rows();
  ZMatrix gens = generators;
  if (gens.cols() > 0) {
    if (rank(gens) != gens.cols() || lattice_index(gens) != 1) gens = saturation(gens);
  }
  const std::size_t k = gens.cols();
  const HermiteForm h = hermite_rows(gens);
  if (h.rank != k) throw std::logic_error("LatticeFrame: generators are dependent");
  // h.form = [T; 0] with T upper triangular and unimodular after saturation
  QMatrix top(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) top(i, j) = h.form(i, j);
  const QMatrix top_inv = k ? inverse(top) : QMatrix();
  ZMatrix w = h.transform;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      mpq_class v = 0;
      for (std::size_t j = 0; j < k; ++j) v += top_inv(i, j) * mpq_class(h.transform(j, c));
      if (v.get_den() != 1) throw std::logic_error("LatticeFrame: sublattice is not saturated");
      w(i, c) = v.get_num();
    }
  dual_ = std::move(w);
  const QMatrix inv = inverse(to_rational(dual_));
  basis_ = ZMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (inv(i, j).get_den() != 1) throw std::logic_error("LatticeFrame: transform is not unimodular");
      basis_(i, j) = inv(i, j).get_num();
    }
  sub_rank_ = k;
}

ZMatrix LatticeFrame::projection() const { return dual_.row_block(sub_rank_, quotient_rank()); }

ZMatrix LatticeFrame::lift() const { return basis_.column_block(sub_rank_, quotient_rank()); }

IntVector LatticeFrame::project(const IntVector& v) const {
  const std::size_t n = ambient_rank();
  if (v.size() != n) throw std::invalid_argument("project: dimension mismatch");
  std::vector<mpz_class> out(quotient_rank());
  for (std::size_t i = 0; i < quotient_rank(); ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += dual_(sub_rank_ + i, j) * static_cast<long>(v[j]);
  IntVector result(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i].fits_slong_p()) throw std::overflow_error("lattice coordinate exceeds 64 bits");
    result[i] = out[i].get_si();
  }
  return result;
}

std::vector<mpz_class> LatticeFrame::dual_functional(std::size_t i) const {
  auto r = dual_.row(i);
  return {r.begin(), r.end()};
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t b = 1;
  for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > n) return out;
  std::vector<std::size_t> s(p);
  for (std::size_t i = 0; i < p; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = p;
    while (i > 0 && s[i - 1] == n - p + (i - 1)) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < p; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::size_t subset_index(const std::vector<std::size_t>& subset, std::size_t n) {
  // count subsets lexicographically smaller
  std::size_t index = 0;
  const std::size_t p = subset.size();
  std::size_t prev = 0;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t v = (i == 0 ? 0 : prev + 1); v < subset[i]; ++v) index += binomial(n - v - 1, p - i - 1);
    prev = subset[i];
  }
  return index;
}

std::vector<mpz_class> wedge(const ZMatrix& vectors) {
  const std::size_t n = vectors.rows();
  const std::size_t p = vectors.cols();
  std::vector<mpz_class> out;
  for (const auto& rows : subsets(n, p)) {
    ZMatrix minor(p, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) minor(i, j) = vectors(rows[i], j);
    out.push_back(determinant(minor));
  }
  return out;
}

ZMatrix exterior_power(const ZMatrix& map, std::size_t p) {
  const auto row_sets = subsets(map.rows(), p);
  const auto col_sets = subsets(map.cols(), p);
  ZMatrix out(row_sets.size(), col_sets.size());
  for (std::size_t a = 0; a < row_sets.size(); ++a)
    for (std::size_t b = 0; b < col_sets.size(); ++b) {
      ZMatrix minor(p, p);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) minor(i, j) = map(row_sets[a][i], col_sets[b][j]);
      out(a, b) = determinant(minor);
    }
  return out;
}

}  // namespace tropfan
