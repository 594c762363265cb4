#include "tropfan/chow_oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "tropfan/linalg.hpp"

namespace tropfan {

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t variables, std::size_t k) {
  std::vector<Monomial> out;
  Monomial current;
  std::function<void(int)> build = [&](int from) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (int v = from; v < static_cast<int>(variables); ++v) {
      current.push_back(v);
      build(v);
      current.pop_back();
    }
  };
  build(0);
  return out;
}

bool support_is_cone(const Fan& fan, Monomial m) {
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return fan.has_cone(Cone(m));
}

}  // namespace

ChowOracle::ChowOracle(const Fan& fan) {
  const std::size_t d = fan.dim();
  const std::size_t r = fan.ray_count();
  const std::size_t n = fan.lattice_rank();
  degree_monomials_.resize(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    Degree& deg = degree_monomials_[k];
    deg.monomials = monomials_of_degree(r, k);
    for (std::size_t i = 0; i < deg.monomials.size(); ++i) deg.index[deg.monomials[i]] = i;
    std::vector<QVector> rows;
    for (const auto& m : deg.monomials)
      if (!support_is_cone(fan, m)) {
        QVector row(deg.monomials.size(), 0);
        row[deg.index.at(m)] = 1;
        rows.push_back(std::move(row));
      }
    if (k > 0)
      for (const auto& lower : monomials_of_degree(r, k - 1))
        for (std::size_t i = 0; i < n; ++i) {
          QVector row(deg.monomials.size(), 0);
          for (std::size_t z = 0; z < r; ++z) {
            const auto c = fan.ray(static_cast<int>(z))[i];
            if (c == 0) continue;
            Monomial m = lower;
            m.insert(std::upper_bound(m.begin(), m.end(), static_cast<int>(z)), static_cast<int>(z));
            row[deg.index.at(m)] += c;
          }
          rows.push_back(std::move(row));
        }
    QMatrix rel(rows.size(), deg.monomials.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < deg.monomials.size(); ++b) rel(a, b) = rows[a][b];
    RowEchelon e = rref(rel);
    deg.reduced = std::move(e.reduced);
    deg.pivots = std::move(e.pivots);
    std::vector<bool> pivot(deg.monomials.size(), false);
    for (auto p : deg.pivots) pivot[p] = true;
    for (std::size_t c = 0; c < deg.monomials.size(); ++c)
      if (!pivot[c]) deg.free.push_back(c);
  }
}

std::size_t ChowOracle::rank(std::size_t k) const {
  return k < degree_monomials_.size() ? degree_monomials_[k].free.size() : 0;
}

QVector ChowOracle::normal_form(Monomial m) const {
  std::sort(m.begin(), m.end());
  return normal_form(m.size(), {{m, 1}});
}

QVector ChowOracle::normal_form(std::size_t k, const std::map<Monomial, mpq_class>& poly) const {
  if (k >= degree_monomials_.size()) return {};
  const Degree& deg = degree_monomials_[k];
  QVector v(deg.monomials.size(), 0);
  for (const auto& [m, c] : poly) {
    Monomial s = m;
    std::sort(s.begin(), s.end());
    if (s.size() != k) throw InputError("polynomial is not homogeneous");
    v[deg.index.at(s)] += c;
  }
  // eliminate the pivot monomials
  for (std::size_t row = 0; row < deg.pivots.size(); ++row) {
    const mpq_class c = v[deg.pivots[row]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * deg.reduced(row, j);
  }
  QVector out;
  for (auto f : deg.free) out.push_back(v[f]);
  return out;
}

Report chow_oracle_check(const Fan& fan, std::size_t products, unsigned seed) {
  Report r("Chow oracle equivalence");
  const ChowRing ring(fan);
  const ChowOracle oracle(fan);
  const std::size_t d = ring.dim();
  std::string dims;
  for (std::size_t k = 0; k <= d; ++k) {
    dims += (k ? "," : "") + std::to_string(ring.rank(k)) + "/" + std::to_string(oracle.rank(k));
    if (ring.rank(k) != oracle.rank(k))
      r.fail("degree " + std::to_string(k) + ": structured " + std::to_string(ring.rank(k)) + ", oracle " +
             std::to_string(oracle.rank(k)));
  }
  r.set("dims structured/oracle", dims);
  if (!r.passed()) return r;

  // phi: structured basis -> oracle quotient
  std::vector<QMatrix> phi;
  for (std::size_t k = 0; k <= d; ++k) {
    QMatrix m(oracle.rank(k), 0);
    for (const auto& c : ring.basis(k)) m.append_column(oracle.normal_form(c.rays));
    if (rank(m) != ring.rank(k)) r.fail("basis of degree " + std::to_string(k) + " is dependent in the oracle ring");
    phi.push_back(std::move(m));
  }
  if (!r.passed()) return r;

  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::size_t done = 0;
  for (std::size_t t = 0; t < products && d > 0; ++t) {
    std::uniform_int_distribution<std::size_t> pick(0, d);
    const std::size_t ka = pick(gen);
    const std::size_t kb = std::uniform_int_distribution<std::size_t>(0, d - ka)(gen);
    ChowClass a = ring.zero(ka), b = ring.zero(kb);
    for (auto& x : a.coords) x = coeff(gen);
    for (auto& x : b.coords) x = coeff(gen);
    const ChowClass ab = ring.multiply(a, b);
    // the oracle multiplies the squarefree representatives as polynomials
    std::map<Monomial, mpq_class> poly;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      for (std::size_t j = 0; j < b.coords.size(); ++j) {
        Monomial m = ring.basis(ka)[i].rays;
        const auto& o = ring.basis(kb)[j].rays;
        m.insert(m.end(), o.begin(), o.end());
        std::sort(m.begin(), m.end());
        poly[m] += a.coords[i] * b.coords[j];
      }
    const QVector expected = oracle.normal_form(ka + kb, poly);
    const QVector got = multiply(phi[ka + kb], ab.coords);
    if (expected != got) r.fail("product of degrees " + std::to_string(ka) + " and " + std::to_string(kb) + " disagrees");
    ++done;
  }
  r.set("products compared", std::to_string(done));
  return r;
}

}  // namespace tropfan
