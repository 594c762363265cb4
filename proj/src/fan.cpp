#include "tropfan/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tropfan/feasibility.hpp"
#include "tropfan/linalg.hpp"

namespace tropfan {

// ---------------------------------------------------------------- Cone

Cone::Cone(std::vector<int> r) : rays(std::move(r)) { std::sort(rays.begin(), rays.end()); }

bool Cone::has_ray(int r) const { return std::binary_search(rays.begin(), rays.end(), r); }

bool Cone::contains(const Cone& face) const {
  return std::includes(rays.begin(), rays.end(), face.rays.begin(), face.rays.end());
}

Cone Cone::with(int r) const {
  Cone c = *this;
  if (!has_ray(r)) c.rays.insert(std::upper_bound(c.rays.begin(), c.rays.end(), r), r);
  return c;
}

Cone Cone::without(int r) const {
  Cone c = *this;
  c.rays.erase(std::remove(c.rays.begin(), c.rays.end(), r), c.rays.end());
  return c;
}

std::size_t Cone::position(int r) const {
  auto it = std::lower_bound(rays.begin(), rays.end(), r);
  if (it == rays.end() || *it != r) throw std::logic_error("ray is not in cone");
  return static_cast<std::size_t>(it - rays.begin());
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < rays.size(); ++i) os << (i ? "," : "") << rays[i];
  os << '}';
  return os.str();
}

Cone cone_union(const Cone& a, const Cone& b) {
  Cone c;
  std::set_union(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(), std::back_inserter(c.rays));
  return c;
}

Cone cone_difference(const Cone& a, const Cone& b) {
  Cone c;
  std::set_difference(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(), std::back_inserter(c.rays));
  return c;
}

Cone cone_intersection(const Cone& a, const Cone& b) {
  Cone c;
  std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(), std::back_inserter(c.rays));
  return c;
}

// ---------------------------------------------------------------- Fan

namespace {

bool dim_then_lex(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.rays < b.rays;
}

std::string vector_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// Two simplicial cones meet in their common face iff some functional vanishes
// on the shared rays, is positive on the rest of `a` and negative on the rest of `b`.
bool meet_properly(const Fan& fan, const Cone& a, const Cone& b, std::size_t n) {
  std::vector<LinearConstraint> system;
  auto row = [&](int r, mpq_class sign) {
    QVector coeffs(n);
    for (std::size_t i = 0; i < n; ++i) coeffs[i] = sign * static_cast<long>(fan.ray(r)[i]);
    return coeffs;
  };
  for (int r : a.rays) {
    if (b.has_ray(r))
      system.push_back({row(r, 1), Relation::equal, 0});
    else
      system.push_back({row(r, -1), Relation::less, 0});
  }
  for (int r : b.rays)
    if (!a.has_ray(r)) system.push_back({row(r, 1), Relation::less, 0});
  return is_feasible(std::move(system), n);
}

}  // namespace

Fan Fan::validate(const FanDescription& description) { return build(description, true); }

Fan Fan::from_trusted(const FanDescription& description) { return build(description, false); }

Fan Fan::build(const FanDescription& d, bool check_intersections) {
  Fan fan;
  fan.lattice_rank_ = d.lattice_rank;
  const std::size_t n = d.lattice_rank;
  for (std::size_t i = 0; i < d.rays.size(); ++i) {
    const auto& r = d.rays[i];
    if (r.size() != n)
      throw InputError("ray " + std::to_string(i) + " has " + std::to_string(r.size()) + " coordinates, expected " +
                       std::to_string(n));
    if (!is_primitive(r)) throw InputError("ray " + std::to_string(i) + " " + vector_string(r) + " is not primitive");
  }
  {
    std::set<IntVector> distinct(d.rays.begin(), d.rays.end());
    if (distinct.size() != d.rays.size()) throw InputError("ray table contains a repeated ray");
  }
  fan.rays_ = d.rays;

  std::vector<Cone> given;
  for (std::size_t i = 0; i < d.maximal_cones.size(); ++i) {
    Cone c(d.maximal_cones[i]);
    for (int r : c.rays)
      if (r < 0 || static_cast<std::size_t>(r) >= d.rays.size())
        throw InputError("cone " + std::to_string(i) + " refers to missing ray " + std::to_string(r));
    if (std::adjacent_find(c.rays.begin(), c.rays.end()) != c.rays.end())
      throw InputError("cone " + std::to_string(i) + " repeats a ray");
    if (rank(fan.generators(c)) != c.dim())
      throw InputError("cone " + c.to_string() + " has dependent generators (only simplicial fans are supported)");
    given.push_back(std::move(c));
  }

  // inclusion-maximal cones, canonical order; weights follow their cones
  std::vector<std::size_t> order(given.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return given[a].rays < given[b].rays; });
  std::vector<std::size_t> maximal_idx;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Cone& c = given[order[k]];
    if (k > 0 && given[order[k - 1]] == c) throw InputError("cone " + c.to_string() + " listed twice");
    bool dominated = false;
    for (const auto& other : given)
      if (other.dim() > c.dim() && other.contains(c)) dominated = true;
    if (dominated) {
      if (d.weights) throw InputError("weight given on non-maximal cone " + c.to_string());
      continue;
    }
    maximal_idx.push_back(order[k]);
  }
  for (auto i : maximal_idx) fan.maximal_.push_back(given[i]);
  const bool zero_fan = fan.maximal_.empty();
  if (zero_fan) fan.maximal_.push_back(Cone{});

  if (check_intersections) {
    for (std::size_t a = 0; a < fan.maximal_.size(); ++a)
      for (std::size_t b = a + 1; b < fan.maximal_.size(); ++b)
        if (!meet_properly(fan, fan.maximal_[a], fan.maximal_[b], n))
          throw InputError("cones " + fan.maximal_[a].to_string() + " and " + fan.maximal_[b].to_string() +
                           " do not meet in a common face");
  }

  std::set<Cone> all;
  for (const auto& m : fan.maximal_) {
    const std::size_t k = m.dim();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Cone f;
      for (std::size_t j = 0; j < k; ++j)
        if (mask & (std::size_t{1} << j)) f.rays.push_back(m.rays[j]);
      all.insert(std::move(f));
    }
  }
  all.insert(Cone{});
  fan.cones_.assign(all.begin(), all.end());
  std::sort(fan.cones_.begin(), fan.cones_.end(), dim_then_lex);
  for (std::size_t i = 0; i < fan.cones_.size(); ++i) {
    const Cone& c = fan.cones_[i];
    fan.index_[c] = i;
    if (fan.by_dim_.size() <= c.dim()) fan.by_dim_.resize(c.dim() + 1);
    fan.by_dim_[c.dim()].push_back(c);
  }
  for (std::size_t r = 0; r < fan.rays_.size(); ++r)
    if (!fan.has_cone(Cone({static_cast<int>(r)}))) throw InputError("ray " + std::to_string(r) + " is not used by any cone");

  if (d.weights) {
    if (d.weights->size() != d.maximal_cones.size())
      throw InputError("expected " + std::to_string(d.maximal_cones.size()) + " weights, got " +
                       std::to_string(d.weights->size()));
    if (!fan.is_pure()) throw InputError("weights require a pure-dimensional fan");
    std::vector<std::int64_t> w;
    for (auto i : maximal_idx) {
      if ((*d.weights)[i] == 0) throw InputError("weights must be nonzero");
      w.push_back((*d.weights)[i]);
    }
    if (zero_fan) w.push_back(1);
    fan.weights_ = std::move(w);
  } else if (fan.is_pure()) {
    fan.weights_ = std::vector<std::int64_t>(fan.maximal_.size(), 1);
  }
  return fan;
}

const std::vector<Cone>& Fan::cones_of_dim(std::size_t k) const {
  static const std::vector<Cone> none;
  return k < by_dim_.size() ? by_dim_[k] : none;
}

bool Fan::is_pure() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [&](const Cone& c) { return c.dim() == dim(); });
}

std::size_t Fan::cone_index(const Cone& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) throw InputError("cone " + c.to_string() + " is not in the fan");
  return it->second;
}

const std::vector<std::int64_t>& Fan::weights() const {
  if (!weights_) throw InputError("fan has no weights");
  return *weights_;
}

std::int64_t Fan::weight(const Cone& facet) const {
  const auto& w = weights();
  auto it = std::lower_bound(maximal_.begin(), maximal_.end(), facet,
                             [](const Cone& a, const Cone& b) { return a.rays < b.rays; });
  if (it == maximal_.end() || *it != facet) throw InputError("cone " + facet.to_string() + " is not a facet");
  return w[static_cast<std::size_t>(it - maximal_.begin())];
}

std::vector<int> Fan::link_rays(const Cone& c) const {
  std::vector<int> out;
  for (std::size_t r = 0; r < rays_.size(); ++r) {
    const int ri = static_cast<int>(r);
    if (!c.has_ray(ri) && has_cone(c.with(ri))) out.push_back(ri);
  }
  return out;
}

std::vector<Cone> Fan::cones_containing(const Cone& c) const {
  std::vector<Cone> out;
  for (const auto& x : cones_)
    if (x.contains(c)) out.push_back(x);
  return out;
}

std::vector<Cone> Fan::maximal_cones_containing(const Cone& c) const {
  std::vector<Cone> out;
  for (const auto& x : maximal_)
    if (x.contains(c)) out.push_back(x);
  return out;
}

ZMatrix Fan::generators(const Cone& c) const {
  ZMatrix g(lattice_rank_, c.dim());
  for (std::size_t j = 0; j < c.dim(); ++j)
    for (std::size_t i = 0; i < lattice_rank_; ++i) g(i, j) = static_cast<long>(rays_.at(c.rays[j])[i]);
  return g;
}

FanDescription Fan::describe() const {
  FanDescription d;
  d.lattice_rank = lattice_rank_;
  d.rays = rays_;
  for (const auto& m : maximal_) d.maximal_cones.push_back(m.rays);
  d.weights = weights_;
  return d;
}

Fan Fan::with_weights(std::vector<std::int64_t> weights) const {
  if (weights.size() != maximal_.size()) throw InputError("weight count does not match facet count");
  if (!is_pure()) throw InputError("weights require a pure-dimensional fan");
  for (auto w : weights)
    if (w == 0) throw InputError("weights must be nonzero");
  Fan f = *this;
  f.weights_ = std::move(weights);
  return f;
}

Fan Fan::without_weights() const {
  Fan f = *this;
  f.weights_.reset();
  return f;
}

Fan validate_fan(const FanDescription& description) { return Fan::validate(description); }

// ---------------------------------------------------------------- predicates

bool cone_is_unimodular(const Fan& fan, const Cone& c) {
  if (c.empty()) return true;
  return lattice_index(fan.generators(c)) == 1;
}

Report is_unimodular(const Fan& fan) {
  Report report("unimodular");
  std::size_t failing = 0;
  for (const auto& c : fan.cones()) {
    if (c.empty()) continue;
    const mpz_class index = lattice_index(fan.generators(c));
    if (index != 1) {
      ++failing;
      report.fail("cone " + c.to_string() + " has lattice index " + index.get_str());
    }
  }
  report.set("cones", std::to_string(fan.cones().size()));
  report.set("non_unimodular_cones", std::to_string(failing));
  return report;
}

LatticeFrame cone_frame(const Fan& fan, const Cone& c) { return LatticeFrame(fan.generators(c)); }

Report is_balanced(const Fan& fan) {
  Report report("balanced");
  if (!fan.weighted()) throw InputError("balancing requires a weighted fan");
  if (!fan.is_pure()) throw InputError("balancing requires a pure-dimensional fan");
  const std::size_t d = fan.dim();
  if (d == 0) {
    report.note("zero-dimensional fan: no codimension-one cones");
    return report;
  }
  for (const auto& tau : fan.cones_of_dim(d - 1)) {
    const LatticeFrame frame = cone_frame(fan, tau);
    std::vector<mpz_class> sum(frame.quotient_rank());
    for (const auto& eta : fan.maximal_cones_containing(tau)) {
      const int other = cone_difference(eta, tau).rays.front();
      const IntVector u = primitive_part(frame.project(fan.ray(other)));
      const std::int64_t w = fan.weight(eta);
      for (std::size_t i = 0; i < u.size(); ++i) sum[i] += mpz_class(static_cast<long>(w)) * static_cast<long>(u[i]);
    }
    if (std::any_of(sum.begin(), sum.end(), [](const mpz_class& v) { return v != 0; })) {
      std::ostringstream os;
      os << "cone " << tau.to_string() << " has balancing defect (";
      for (std::size_t i = 0; i < sum.size(); ++i) os << (i ? "," : "") << sum[i];
      os << ") in N/N_tau";
      report.fail(os.str());
    }
  }
  return report;
}

// ---------------------------------------------------------------- constructions

Cone StarFan::lift(const Cone& star_cone) const {
  Cone c = center;
  for (int r : star_cone.rays) c = c.with(ray_origin.at(static_cast<std::size_t>(r)));
  return c;
}

Cone StarFan::restrict(const Cone& parent_cone) const {
  if (!parent_cone.contains(center)) throw InputError("cone " + parent_cone.to_string() + " does not contain the center");
  std::vector<int> r;
  for (int x : cone_difference(parent_cone, center).rays) {
    const int s = star_ray.at(static_cast<std::size_t>(x));
    if (s < 0) throw InputError("ray " + std::to_string(x) + " is not in the star");
    r.push_back(s);
  }
  return Cone(std::move(r));
}

StarFan star_fan(const Fan& fan, const Cone& center) {
  if (!fan.has_cone(center)) throw InputError("cone " + center.to_string() + " is not in the fan");
  StarFan star;
  star.center = center;
  star.frame = cone_frame(fan, center);
  star.star_ray.assign(fan.ray_count(), -1);
  FanDescription d;
  d.lattice_rank = star.frame.quotient_rank();
  for (int r : fan.link_rays(center)) {
    star.star_ray[static_cast<std::size_t>(r)] = static_cast<int>(star.ray_origin.size());
    star.ray_origin.push_back(r);
    d.rays.push_back(primitive_part(star.frame.project(fan.ray(r))));
  }
  std::map<Cone, std::int64_t> facet_weights;
  for (const auto& eta : fan.maximal_cones_containing(center)) {
    const Cone image = star.restrict(eta);
    if (fan.weighted()) facet_weights[image] += fan.weight(eta);
    else facet_weights[image] = 0;
  }
  std::vector<std::int64_t> weights;
  for (const auto& [c, w] : facet_weights) {
    d.maximal_cones.push_back(c.rays);
    weights.push_back(w);
  }
  if (fan.weighted()) d.weights = weights;
  star.fan = Fan::from_trusted(d);
  return star;
}

Fan barycentric_star_subdivision(const Fan& fan, const Cone& sigma) {
  if (!fan.has_cone(sigma)) throw InputError("cone " + sigma.to_string() + " is not in the fan");
  if (sigma.dim() < 2) throw InputError("barycentric subdivision needs a cone of dimension at least 2");
  if (!cone_is_unimodular(fan, sigma)) throw InputError("barycentric subdivision needs a unimodular cone");
  FanDescription d = fan.describe();
  IntVector rho(fan.lattice_rank(), 0);
  for (int r : sigma.rays)
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += fan.ray(r)[i];
  const int new_ray = static_cast<int>(fan.ray_count());
  d.rays.push_back(rho);
  std::vector<std::vector<int>> cones;
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i < fan.maximal_cones().size(); ++i) {
    const Cone& eta = fan.maximal_cones()[i];
    const std::int64_t w = fan.weighted() ? fan.weights()[i] : 1;
    if (!eta.contains(sigma)) {
      cones.push_back(eta.rays);
      weights.push_back(w);
      continue;
    }
    for (int z : sigma.rays) {
      cones.push_back(eta.without(z).with(new_ray).rays);
      weights.push_back(w);
    }
  }
  d.maximal_cones = std::move(cones);
  if (fan.weighted()) d.weights = std::move(weights);
  else d.weights.reset();
  return Fan::from_trusted(d);
}

std::vector<std::size_t> f_vector(const Fan& fan) {
  std::vector<std::size_t> f;
  for (std::size_t k = 0; k <= fan.dim(); ++k) f.push_back(fan.cones_of_dim(k).size());
  return f;
}

Fan product_fan(const Fan& a, const Fan& b) {
  FanDescription d;
  const std::size_t na = a.lattice_rank();
  const std::size_t nb = b.lattice_rank();
  d.lattice_rank = na + nb;
  for (const auto& r : a.rays()) {
    IntVector v(r);
    v.resize(na + nb, 0);
    d.rays.push_back(v);
  }
  for (const auto& r : b.rays()) {
    IntVector v(na, 0);
    v.insert(v.end(), r.begin(), r.end());
    d.rays.push_back(v);
  }
  const int offset = static_cast<int>(a.ray_count());
  std::vector<std::int64_t> weights;
  const bool weighted = a.weighted() && b.weighted();
  for (std::size_t i = 0; i < a.maximal_cones().size(); ++i)
    for (std::size_t j = 0; j < b.maximal_cones().size(); ++j) {
      std::vector<int> c = a.maximal_cones()[i].rays;
      for (int r : b.maximal_cones()[j].rays) c.push_back(r + offset);
      d.maximal_cones.push_back(c);
      if (weighted) weights.push_back(a.weights()[i] * b.weights()[j]);
    }
  if (weighted) d.weights = weights;
  return Fan::from_trusted(d);
}

bool support_contains(const Fan& fan, const QVector& point) {
  if (point.size() != fan.lattice_rank()) throw InputError("point has the wrong dimension");
  QMatrix x(point.size(), 1);
  for (std::size_t i = 0; i < point.size(); ++i) x(i, 0) = point[i];
  for (const auto& eta : fan.maximal_cones()) {
    const auto lambda = solve(to_rational(fan.generators(eta)), x);
    if (!lambda) continue;
    bool nonnegative = true;
    for (std::size_t i = 0; i < lambda->rows(); ++i)
      if ((*lambda)(i, 0) < 0) nonnegative = false;
    if (nonnegative) return true;
  }
  return false;
}

}  // namespace tropfan
