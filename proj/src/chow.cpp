#include "tropfan/chow.hpp"

#include <algorithm>
#include <iostream>

#include "tropfan/complex.hpp"
#include "tropfan/homology.hpp"
#include "tropfan/linalg.hpp"

namespace tropfan {

bool ChowClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const mpq_class& x) { return x == 0; });
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  if (a.degree != b.degree || a.coords.size() != b.coords.size()) throw InputError("adding classes of different degrees");
  ChowClass c = a;
  for (std::size_t i = 0; i < c.coords.size(); ++i) c.coords[i] += b.coords[i];
  return c;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + mpq_class(-1) * b; }

ChowClass operator*(const mpq_class& s, const ChowClass& a) {
  ChowClass c = a;
  for (auto& x : c.coords) x *= s;
  return c;
}

namespace {

mpz_class pair(const std::vector<mpz_class>& m, const IntVector& v) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += m[i] * v[i];
  return s;
}

void warn_overflow(std::size_t degree, std::size_t d) {
  std::clog << "warning: product of degree " << degree << " exceeds the fan dimension " << d << "; returning zero\n";
}

}  // namespace

ChowRing::ChowRing(Fan fan) : fan_(std::move(fan)) {
  const Report unimodular = is_unimodular(fan_);
  if (!unimodular.passed()) throw InputError("the Chow ring needs a unimodular fan: " + unimodular.witnesses.front());
  for (const auto& c : fan_.cones()) frames_.emplace(c, cone_frame(fan_, c));

  const std::size_t d = fan_.dim();
  basis_.resize(d + 1);
  relations_.resize(d + 1);
  reduction_.resize(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    const auto& span = fan_.cones_of_dim(k);
    std::map<Cone, std::size_t> column;
    for (std::size_t i = 0; i < span.size(); ++i) column[span[i]] = i;
    QMatrix rel(0, span.size());
    if (k > 0) {
      std::vector<QVector> rows;
      for (const auto& tau : fan_.cones_of_dim(k - 1)) {
        const ZMatrix annihilator = frames_.at(tau).projection();
        const auto link = fan_.link_rays(tau);
        for (std::size_t r = 0; r < annihilator.rows(); ++r) {
          QVector row(span.size(), 0);
          for (int xi : link) {
            mpz_class s = 0;
            for (std::size_t i = 0; i < annihilator.cols(); ++i) s += annihilator(r, i) * fan_.ray(xi)[i];
            row[column.at(tau.with(xi))] += s;
          }
          rows.push_back(std::move(row));
        }
      }
      rel = QMatrix(rows.size(), span.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < span.size(); ++c) rel(r, c) = rows[r][c];
    }
    const RowEchelon e = rref(rel);
    std::vector<bool> pivot(span.size(), false);
    for (auto p : e.pivots) pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < span.size(); ++c)
      if (!pivot[c]) free.push_back(c);
    QMatrix red(free.size(), span.size());
    for (std::size_t b = 0; b < free.size(); ++b) red(b, free[b]) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      for (std::size_t b = 0; b < free.size(); ++b) red(b, e.pivots[r]) = -e.reduced(r, free[b]);
    for (auto c : free) basis_[k].push_back(span[c]);
    relations_[k] = std::move(rel);
    reduction_[k] = std::move(red);
  }

  if (fan_.weighted()) {
    const auto& top = fan_.cones_of_dim(d);
    QVector w(top.size());
    for (std::size_t i = 0; i < top.size(); ++i) w[i] = mpq_class(fan_.weight(top[i]));
    degree_defined_ = true;
    for (const auto& x : tropfan::multiply(relations_[d], w))
      if (x != 0) degree_defined_ = false;
  }
}

std::size_t ChowRing::rank(std::size_t k) const { return k < basis_.size() ? basis_[k].size() : 0; }

std::vector<std::size_t> ChowRing::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& b : basis_) r.push_back(b.size());
  return r;
}

const std::vector<Cone>& ChowRing::basis(std::size_t k) const {
  static const std::vector<Cone> none;
  return k < basis_.size() ? basis_[k] : none;
}

ChowClass ChowRing::zero(std::size_t k) const { return {k, QVector(rank(k), 0)}; }

ChowClass ChowRing::one() const { return cone_class(Cone{}); }

ChowClass ChowRing::from_spanning(std::size_t k, const QVector& v) const {
  if (k > dim()) return zero(k);
  return {k, tropfan::multiply(reduction_[k], v)};
}

ChowClass ChowRing::cone_class(const Cone& c) const {
  if (!fan_.has_cone(c)) throw InputError("cone " + c.to_string() + " is not in the fan");
  const auto& span = fan_.cones_of_dim(c.dim());
  QVector v(span.size(), 0);
  v[static_cast<std::size_t>(std::lower_bound(span.begin(), span.end(), c) - span.begin())] = 1;
  return from_spanning(c.dim(), v);
}

std::map<Cone, mpq_class> ChowRing::reduce(Monomial m) const {
  std::sort(m.begin(), m.end());
  Cone support;
  support.rays = m;
  support.rays.erase(std::unique(support.rays.begin(), support.rays.end()), support.rays.end());
  if (!fan_.has_cone(support)) return {};
  if (support.dim() == m.size()) return {{support, 1}};
  // m = x_support * x_zeta * rest for the first repeated ray zeta
  int zeta = -1;
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1]) {
      zeta = m[i];
      break;
    }
  Monomial rest = m;
  for (int r : support.rays) rest.erase(std::find(rest.begin(), rest.end(), r));
  rest.erase(std::find(rest.begin(), rest.end(), zeta));
  const auto functional = frames_.at(support).dual_functional(support.position(zeta));
  std::map<Cone, mpq_class> out;
  for (int xi : fan_.link_rays(support)) {
    const mpz_class c = pair(functional, fan_.ray(xi));
    if (c == 0) continue;
    Monomial next = rest;
    for (int r : support.with(xi).rays) next.push_back(r);
    for (const auto& [cone, v] : reduce(next)) out[cone] -= c * v;
  }
  return out;
}

ChowClass ChowRing::monomial_class(Monomial m) const {
  const std::size_t k = m.size();
  for (int r : m)
    if (r < 0 || static_cast<std::size_t>(r) >= fan_.ray_count()) throw InputError("ray index out of range");
  if (k > dim()) {
    warn_overflow(k, dim());
    return zero(k);
  }
  const auto& span = fan_.cones_of_dim(k);
  QVector v(span.size(), 0);
  for (const auto& [cone, c] : reduce(std::move(m)))
    v[static_cast<std::size_t>(std::lower_bound(span.begin(), span.end(), cone) - span.begin())] += c;
  return from_spanning(k, v);
}

ChowClass ChowRing::linear_class(const QVector& values) const {
  if (values.size() != fan_.ray_count()) throw InputError("one value per ray is needed");
  if (dim() == 0) return zero(1);
  const auto& span = fan_.cones_of_dim(1);
  QVector v(span.size(), 0);
  for (std::size_t i = 0; i < span.size(); ++i) v[i] = values[static_cast<std::size_t>(span[i].rays[0])];
  return from_spanning(1, v);
}

ChowClass ChowRing::square_with(const Cone& rho, int zeta, const std::vector<mpz_class>& m) const {
  if (!fan_.has_cone(rho) || !rho.has_ray(zeta)) throw InputError("zeta must be a ray of the cone rho");
  for (int r : rho.rays)
    if (pair(m, fan_.ray(r)) != (r == zeta ? 1 : 0))
      throw InputError("the functional must be 1 on zeta and 0 on the other rays of rho");
  const std::size_t k = rho.dim() + 1;
  if (k > dim()) {
    warn_overflow(k, dim());
    return zero(k);
  }
  const auto& span = fan_.cones_of_dim(k);
  QVector v(span.size(), 0);
  for (int xi : fan_.link_rays(rho)) {
    const Cone c = rho.with(xi);
    v[static_cast<std::size_t>(std::lower_bound(span.begin(), span.end(), c) - span.begin())] -= pair(m, fan_.ray(xi));
  }
  return from_spanning(k, v);
}

ChowClass ChowRing::multiply(const ChowClass& a, const ChowClass& b) const {
  const std::size_t k = a.degree + b.degree;
  if (a.coords.size() != rank(a.degree) || b.coords.size() != rank(b.degree))
    throw InputError("class does not belong to this ring");
  if (k > dim()) {
    warn_overflow(k, dim());
    return zero(k);
  }
  ChowClass out = zero(k);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      if (b.coords[j] == 0) continue;
      Monomial m = basis_[a.degree][i].rays;
      const auto& other = basis_[b.degree][j].rays;
      m.insert(m.end(), other.begin(), other.end());
      out = out + (a.coords[i] * b.coords[j]) * monomial_class(std::move(m));
    }
  }
  return out;
}

ChowClass ChowRing::power(const ChowClass& a, std::size_t e) const {
  ChowClass out = one();
  for (std::size_t i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

QMatrix ChowRing::multiplication_matrix(const ChowClass& a, std::size_t k) const {
  const std::size_t target = a.degree + k;
  QMatrix m(rank(target), rank(k));
  for (std::size_t j = 0; j < rank(k); ++j) {
    ChowClass e = zero(k);
    e.coords[j] = 1;
    const ChowClass p = multiply(a, e);
    for (std::size_t i = 0; i < p.coords.size(); ++i) m(i, j) = p.coords[i];
  }
  return m;
}

mpq_class ChowRing::degree(const ChowClass& c) const {
  if (!fan_.weighted()) throw InputError("the degree map needs facet weights");
  if (!degree_defined_) throw InputError("the degree map is not defined: the weights are not balanced");
  if (c.degree != dim()) throw InputError("the degree map is defined on the top degree only");
  mpq_class s = 0;
  for (std::size_t i = 0; i < c.coords.size(); ++i) s += c.coords[i] * fan_.weight(basis_[dim()][i]);
  return s;
}

QMatrix ChowRing::pairing(std::size_t k) const {
  const std::size_t d = dim();
  if (k > d) throw InputError("pairing degree out of range");
  QMatrix m(rank(k), rank(d - k));
  for (std::size_t i = 0; i < rank(k); ++i)
    for (std::size_t j = 0; j < rank(d - k); ++j) {
      ChowClass a = zero(k), b = zero(d - k);
      a.coords[i] = 1;
      b.coords[j] = 1;
      m(i, j) = degree(multiply(a, b));
    }
  return m;
}

ChowClass gysin(const StarFan& source_star, const ChowRing& source, const StarFan& target_star, const ChowRing& target,
                const ChowClass& c) {
  if (!source_star.center.contains(target_star.center))
    throw InputError("Gysin map needs delta = " + target_star.center.to_string() +
                     " contained in sigma = " + source_star.center.to_string());
  if (source_star.star_ray.size() != target_star.star_ray.size()) throw InputError("stars of different fans");
  const std::size_t shift = source_star.center.dim() - target_star.center.dim();
  const std::size_t k = c.degree + shift;
  const auto& span = target.fan().cones_of_dim(k);
  QVector v(span.size(), 0);
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    if (c.coords[i] == 0) continue;
    const Cone image = target_star.restrict(source_star.lift(source.basis(c.degree)[i]));
    v[static_cast<std::size_t>(std::lower_bound(span.begin(), span.end(), image) - span.begin())] += c.coords[i];
  }
  return target.from_spanning(k, v);
}

Report hodge_iso_check(const Fan& fan) {
  Report r("Hodge isomorphism");
  const ChowRing ring(fan);
  const BettiTable t = betti_table(fan);
  std::string chow, hodge;
  for (std::size_t k = 0; k <= ring.dim(); ++k) {
    chow += (k ? "," : "") + std::to_string(ring.rank(k));
    hodge += (k ? "," : "") + std::to_string(t.at(k, k));
    if (ring.rank(k) != t.at(k, k))
      r.fail("k = " + std::to_string(k) + ": dim A^k = " + std::to_string(ring.rank(k)) +
             ", dim H^{k,k} = " + std::to_string(t.at(k, k)));
  }
  r.set("dim A^k", chow);
  r.set("dim H^{k,k}", hodge);
  return r;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

QMatrix columns_of(const std::vector<ChowClass>& classes, std::size_t rows) {
  QMatrix m(rows, 0);
  for (const auto& c : classes) m.append_column(c.coords);
  return m;
}

}  // namespace

KeelDecomposition keel_check(const Fan& fan, const Cone& sigma) {
  if (sigma.dim() < 2) throw InputError("the Keel decomposition needs a cone of dimension at least 2");
  KeelDecomposition out;
  out.sigma = sigma;
  Report& r = out.report;
  r.check = "Keel decomposition at sigma = " + sigma.to_string();

  const Fan sub = barycentric_star_subdivision(fan, sigma);
  const int rho = static_cast<int>(fan.ray_count());
  const ChowRing base(fan), blown(sub);
  const StarFan star = star_fan(fan, sigma);
  const ChowRing local(star.fan);
  const std::size_t d = fan.dim(), s = sigma.dim();
  out.base_dims = base.ranks();
  out.subdivided_dims = blown.ranks();
  out.star_dims = local.ranks();
  r.set("dim A^k(subdivided)", join(out.subdivided_dims));
  r.set("dim A^k(fan)", join(out.base_dims));
  r.set("dim A^k(star)", join(out.star_dims));

  for (std::size_t k = 0; k <= d; ++k) {
    std::size_t rhs = base.rank(k);
    for (std::size_t i = 1; i < s && i <= k; ++i) rhs += local.rank(k - i);
    if (blown.rank(k) != rhs)
      r.fail("dimension identity fails in degree " + std::to_string(k) + ": " + std::to_string(blown.rank(k)) +
             " != " + std::to_string(rhs));
  }

  // chi on monomials of the original fan
  const auto chi_ray = [&](int zeta) {
    QVector v(sub.ray_count(), 0);
    v[static_cast<std::size_t>(zeta)] = 1;
    if (sigma.has_ray(zeta)) v[static_cast<std::size_t>(rho)] = 1;
    return blown.linear_class(v);
  };
  const auto chi_cone = [&](const Cone& tau) {
    ChowClass c = blown.one();
    for (int z : tau.rays) c = blown.multiply(c, chi_ray(z));
    return c;
  };
  const auto chi = [&](const ChowClass& a) {
    ChowClass c = blown.zero(a.degree);
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      if (a.coords[i] != 0) c = c + a.coords[i] * chi_cone(base.basis(a.degree)[i]);
    return c;
  };
  QVector t_values(sub.ray_count(), 0);
  t_values[static_cast<std::size_t>(rho)] = -1;
  const ChowClass T = blown.linear_class(t_values);
  const ChowClass x_rho = mpq_class(-1) * T;

  bool spans = true;
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<ChowClass> images;
    for (const auto& tau : base.basis(k)) images.push_back(chi_cone(tau));
    for (std::size_t i = 1; i < s && i <= k; ++i) {
      const ChowClass ti = blown.power(T, i);
      for (const auto& eta : local.basis(k - i))
        images.push_back(blown.multiply(chi_cone(cone_difference(star.lift(eta), sigma)), ti));
    }
    const QMatrix m = columns_of(images, blown.rank(k));
    if (m.cols() != blown.rank(k) || tropfan::rank(m) != blown.rank(k)) {
      spans = false;
      r.fail("chi does not give a basis of A^" + std::to_string(k) + " of the subdivision");
    }
  }
  r.set("chi decomposition", spans ? "isomorphism" : "not an isomorphism");

  // J = ker(A(fan) -> A(star)); chi(J) T must vanish
  const auto restrict_ray = [&](int zeta) {
    QVector v(star.fan.ray_count(), 0);
    if (sigma.has_ray(zeta)) {
      const auto m = cone_frame(fan, sigma).dual_functional(sigma.position(zeta));
      for (int xi : fan.link_rays(sigma)) {
        mpz_class c = 0;
        for (std::size_t i = 0; i < m.size(); ++i) c += m[i] * fan.ray(xi)[i];
        v[static_cast<std::size_t>(star.star_ray[static_cast<std::size_t>(xi)])] = -c;
      }
    } else if (star.star_ray[static_cast<std::size_t>(zeta)] >= 0) {
      v[static_cast<std::size_t>(star.star_ray[static_cast<std::size_t>(zeta)])] = 1;
    }
    return local.linear_class(v);
  };
  std::size_t kernel_total = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<ChowClass> images;
    for (const auto& tau : base.basis(k)) {
      if (k > local.dim()) {
        images.push_back(local.zero(k));
        continue;
      }
      ChowClass c = local.one();
      for (int z : tau.rays) c = local.multiply(c, restrict_ray(z));
      images.push_back(c);
    }
    const QMatrix restriction = columns_of(images, local.rank(k));
    const QMatrix kernel = nullspace(restriction);
    kernel_total += kernel.cols();
    if (k + 1 > d) continue;
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
      const ChowClass jt = blown.multiply(chi({k, kernel.column(j)}), x_rho);
      if (!jt.is_zero()) r.fail("chi(J) T is not zero in degree " + std::to_string(k + 1));
    }
  }
  r.set("dim J", std::to_string(kernel_total));

  ChowClass p = blown.one();
  for (int z : sigma.rays) p = blown.multiply(p, chi_ray(z) + T);
  if (!p.is_zero()) r.fail("chi(P(T)) is not zero");
  return out;
}

Report deligne_resolution_check(const Fan& fan, std::size_t k) {
  Report r("Deligne resolution, k = " + std::to_string(k));
  const std::size_t d = fan.dim();
  if (k > d) throw InputError("k must be at most the fan dimension");
  Report hypothesis = is_tropical_homology_manifold(fan);
  if (!hypothesis.passed()) {
    r.fail("hypothesis: the fan is not a tropical homology manifold");
    r.add(std::move(hypothesis));
  }

  struct Local {
    StarFan star;
    ChowRing ring;
  };
  std::map<Cone, Local> stars;
  for (std::size_t j = 0; j <= k; ++j)
    for (const auto& c : fan.cones_of_dim(j)) {
      StarFan s = star_fan(fan, c);
      Fan f = s.fan;
      stars.emplace(c, Local{std::move(s), ChowRing(std::move(f))});
    }

  // term j (0 <= j <= k) is the sum over Sigma_{k-j} of A^j of the stars
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> offsets(k + 1);
  const CompactifiedComplex complex(fan);
  const CompactFace origin{Cone{}, Cone{}};
  dims.push_back(complex.tangent_dim(origin, k));
  for (std::size_t j = 0; j <= k; ++j) {
    std::size_t total = 0;
    for (const auto& c : fan.cones_of_dim(k - j)) {
      offsets[j].push_back(total);
      total += stars.at(c).ring.rank(j);
    }
    dims.push_back(total);
  }

  std::vector<QMatrix> maps;
  {
    QMatrix first(dims[1], dims[0]);
    const auto& cones = fan.cones_of_dim(k);
    for (std::size_t i = 0; i < cones.size(); ++i) {
      const QVector c = complex.coordinates(origin, k, wedge(fan.generators(cones[i])));
      for (std::size_t j = 0; j < c.size(); ++j) first(offsets[0][i], j) = c[j];
    }
    maps.push_back(std::move(first));
  }
  for (std::size_t j = 0; j < k; ++j) {
    QMatrix m(dims[j + 2], dims[j + 1]);
    const auto& sources = fan.cones_of_dim(k - j);
    const auto& targets = fan.cones_of_dim(k - j - 1);
    for (std::size_t a = 0; a < sources.size(); ++a) {
      const Local& src = stars.at(sources[a]);
      for (std::size_t b = 0; b < src.ring.rank(j); ++b) {
        ChowClass e = src.ring.zero(j);
        e.coords[b] = 1;
        for (int zeta : sources[a].rays) {
          const Cone delta = sources[a].without(zeta);
          const Local& dst = stars.at(delta);
          const ChowClass image = gysin(src.star, src.ring, dst.star, dst.ring, e);
          const mpq_class sign = sources[a].position(zeta) % 2 == 0 ? 1 : -1;
          const std::size_t t = static_cast<std::size_t>(std::lower_bound(targets.begin(), targets.end(), delta) - targets.begin());
          for (std::size_t i = 0; i < image.coords.size(); ++i)
            m(offsets[j + 1][t] + i, offsets[j][a] + b) += sign * image.coords[i];
        }
      }
    }
    maps.push_back(std::move(m));
  }

  for (std::size_t i = 1; i < maps.size(); ++i)
    if (!(maps[i] * maps[i - 1]).is_zero()) r.fail("consecutive maps do not compose to zero at position " + std::to_string(i));

  std::vector<std::size_t> ranks;
  for (const auto& m : maps) ranks.push_back(tropfan::rank(m));
  for (std::size_t pos = 0; pos < dims.size(); ++pos) {
    const std::size_t in = pos == 0 ? 0 : ranks[pos - 1];
    const std::size_t out = pos < ranks.size() ? ranks[pos] : 0;
    if (in + out != dims[pos])
      r.fail("not exact at position " + std::to_string(pos) + ": dim " + std::to_string(dims[pos]) + ", incoming rank " +
             std::to_string(in) + ", outgoing rank " + std::to_string(out));
  }
  r.set("dims", join(dims));
  r.set("ranks", join(ranks));
  return r;
}

}  // namespace tropfan
