#include "tropfan/kahler.hpp"

#include <sstream>

#include "tropfan/feasibility.hpp"
#include "tropfan/homology.hpp"
#include "tropfan/linalg.hpp"
#include "tropfan/parallel.hpp"

namespace tropfan {

namespace {

std::string format(const QVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

/// Linear functional on N (as rationals) agreeing with f on the rays of sigma.
QVector matching_functional(const Fan& fan, const Cone& sigma, const QVector& values) {
  const LatticeFrame frame = cone_frame(fan, sigma);
  QVector m(fan.lattice_rank(), 0);
  for (std::size_t j = 0; j < sigma.dim(); ++j) {
    const auto u = frame.dual_functional(j);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += values[static_cast<std::size_t>(sigma.rays[j])] * u[i];
  }
  return m;
}

mpq_class dot(const QVector& m, const IntVector& v) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += m[i] * v[i];
  return s;
}

}  // namespace

Report is_strictly_convex(const Fan& fan, const QVector& values) {
  Report r("strict convexity");
  if (!fan.is_pure()) throw InputError("strict convexity is checked on pure fans");
  if (values.size() != fan.ray_count()) throw InputError("one function value per ray is needed");
  const std::size_t n = fan.lattice_rank();
  for (const auto& sigma : fan.cones()) {
    const auto link = fan.link_rays(sigma);
    if (link.empty()) continue;
    std::vector<LinearConstraint> cs;
    for (int z : sigma.rays) {
      LinearConstraint c;
      for (auto x : fan.ray(z)) c.coefficients.push_back(mpq_class(x));
      c.relation = Relation::equal;
      c.bound = values[static_cast<std::size_t>(z)];
      cs.push_back(std::move(c));
    }
    // <m, e_xi> < f(xi)
    for (int xi : link) {
      LinearConstraint c;
      for (auto x : fan.ray(xi)) c.coefficients.push_back(mpq_class(x));
      c.relation = Relation::less;
      c.bound = values[static_cast<std::size_t>(xi)];
      cs.push_back(std::move(c));
    }
    if (!is_feasible(std::move(cs), n)) r.fail("sigma = " + sigma.to_string());
  }
  r.set("function", format(values));
  r.note("neighbourhoods are taken inside the support of the fan");
  return r;
}

QVector restrict_function(const Fan& fan, const StarFan& star, const QVector& values) {
  if (!cone_is_unimodular(fan, star.center)) throw InputError("restriction needs a unimodular cone");
  const QVector m = matching_functional(fan, star.center, values);
  QVector out;
  for (int xi : star.ray_origin) {
    const mpz_class g = gcd_of(star.frame.project(fan.ray(xi)));
    out.push_back((values[static_cast<std::size_t>(xi)] - dot(m, fan.ray(xi))) / g);
  }
  return out;
}

std::optional<QVector> find_strictly_convex(const Fan& fan) {
  if (!fan.is_pure()) throw InputError("strict convexity is checked on pure fans");
  const std::size_t rays = fan.ray_count();
  const std::size_t n = fan.lattice_rank();
  // variables: f (one per ray), m_sigma for each non-maximal cone, then t;
  // maximize t subject to f - m_sigma = 0 on sigma and >= t on the link
  std::vector<Cone> centers;
  for (const auto& sigma : fan.cones())
    if (!fan.link_rays(sigma).empty()) centers.push_back(sigma);
  const std::size_t t = rays + n * centers.size();
  const std::size_t vars = t + 1;
  std::vector<QVector> rows;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const std::size_t offset = rays + n * c;
    const auto add = [&](int ray, int sign, bool slack) {
      QVector row(vars, 0);
      row[static_cast<std::size_t>(ray)] = -sign;
      for (std::size_t i = 0; i < n; ++i) row[offset + i] = sign * fan.ray(ray)[i];
      if (slack) row[t] = 1;
      rows.push_back(std::move(row));
    };
    for (int z : centers[c].rays) {
      add(z, 1, false);
      add(z, -1, false);
    }
    for (int xi : fan.link_rays(centers[c])) add(xi, 1, true);
  }
  QVector cap(vars, 0);
  cap[t] = 1;
  rows.push_back(cap);
  QMatrix a(rows.size(), vars);
  QVector bounds(rows.size(), 0);
  bounds.back() = 1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < vars; ++j) a(i, j) = rows[i][j];
  QVector objective(vars, 0);
  objective[t] = 1;
  const auto x = maximize_from_origin(objective, a, bounds);
  if (!x || (*x)[t] <= 0) return std::nullopt;

  QMatrix f(1, rays);
  for (std::size_t i = 0; i < rays; ++i) f(0, i) = (*x)[i];
  const ZMatrix scaled = clear_denominators(f);
  QVector values(rays);
  for (std::size_t i = 0; i < rays; ++i) values[i] = scaled(0, i);
  if (!is_strictly_convex(fan, values).passed()) return std::nullopt;
  return values;
}

Report hard_lefschetz_check(const ChowRing& ring, const ChowClass& L, std::size_t k) {
  Report r("hard Lefschetz, k = " + std::to_string(k));
  const std::size_t d = ring.dim();
  if (2 * k > d) throw InputError("hard Lefschetz needs 2k <= d");
  const QMatrix m = ring.multiplication_matrix(ring.power(L, d - 2 * k), k);
  const std::size_t rk = rank(m);
  r.set("dim A^k", std::to_string(ring.rank(k)));
  r.set("dim A^{d-k}", std::to_string(ring.rank(d - k)));
  r.set("rank", std::to_string(rk));
  if (m.rows() != m.cols() || rk != m.rows()) r.fail("L^" + std::to_string(d - 2 * k) + " is not an isomorphism");
  return r;
}

Report hodge_riemann_check(const ChowRing& ring, const ChowClass& L, std::size_t k) {
  Report r("Hodge-Riemann, k = " + std::to_string(k));
  const std::size_t d = ring.dim();
  if (2 * k > d) throw InputError("Hodge-Riemann needs 2k <= d");
  QMatrix primitive;
  if (d - k + 1 > d) {
    primitive = QMatrix::identity(ring.rank(k));
  } else {
    primitive = nullspace(ring.multiplication_matrix(ring.power(L, d - 2 * k + 1), k));
  }
  const ChowClass lefschetz = ring.power(L, d - 2 * k);
  const std::size_t p = primitive.cols();
  QMatrix form(p, p);
  const mpq_class sign = k % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const ChowClass a{k, primitive.column(i)};
      const ChowClass b{k, primitive.column(j)};
      form(i, j) = sign * ring.degree(ring.multiply(lefschetz, ring.multiply(a, b)));
    }
  const auto minors = leading_principal_minors(form);
  std::ostringstream os;
  for (std::size_t i = 0; i < minors.size(); ++i) os << (i ? " " : "") << minors[i];
  r.set("dim P^k", std::to_string(p));
  r.set("leading minors", os.str());
  for (std::size_t i = 0; i < minors.size(); ++i)
    if (minors[i] <= 0) {
      r.fail("leading minor " + std::to_string(i + 1) + " is not positive");
      break;
    }
  return r;
}

Report poincare_pairing_check(const ChowRing& ring) {
  Report r("Poincare pairing");
  for (std::size_t k = 0; k <= ring.dim(); ++k) {
    const QMatrix m = ring.pairing(k);
    if (m.rows() != m.cols() || rank(m) != m.rows()) r.fail("pairing on A^" + std::to_string(k) + " is degenerate");
  }
  return r;
}

Report is_kahler(const Fan& fan, const std::optional<QVector>& values) {
  Report r("Kahler package");
  Report thm = is_tropical_homology_manifold(fan);
  const bool manifold = thm.passed();
  r.add(std::move(thm));
  if (!manifold) return r;

  std::optional<QVector> f;
  if (values) {
    Report convex = is_strictly_convex(fan, *values);
    if (convex.passed()) f = values;
    else r.note("the supplied function is not strictly convex; searching");
  }
  if (!f) f = find_strictly_convex(fan);
  if (!f) {
    r.verdict = Verdict::not_certified;
    r.note("quasi-projectivity not certified: no strictly convex function found");
    return r;
  }
  r.set("ample function", format(*f));

  const auto& cones = fan.cones();
  std::vector<Report> local(cones.size());
  parallel_for(cones.size(), [&](std::size_t i) {
    const Cone& sigma = cones[i];
    Report s("Kahler package at sigma = " + sigma.to_string());
    const StarFan star = star_fan(fan, sigma);
    const ChowRing ring(star.fan);
    const ChowClass L = ring.linear_class(restrict_function(fan, star, *f));
    s.add(poincare_pairing_check(ring));
    for (std::size_t k = 0; 2 * k <= ring.dim(); ++k) {
      s.add(hard_lefschetz_check(ring, L, k));
      s.add(hodge_riemann_check(ring, L, k));
    }
    local[i] = std::move(s);
  });
  std::size_t failing = 0;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (local[i].passed()) continue;
    ++failing;
    r.fail("sigma = " + cones[i].to_string());
    r.add(std::move(local[i]));
  }
  r.set("cones checked", std::to_string(cones.size()));
  r.set("cones failing", std::to_string(failing));
  return r;
}

}  // namespace tropfan
