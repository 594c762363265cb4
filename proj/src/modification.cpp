#include "tropfan/modification.hpp"

#include "tropfan/linalg.hpp"

namespace tropfan {

namespace {

void require_integral(const Fan& fan, const QVector& values) {
  if (values.size() != fan.ray_count()) throw InputError("one function value per ray is needed");
  for (const auto& v : values)
    if (v.get_den() != 1) throw InputError("function values must be integers on the rays");
}

}  // namespace

std::optional<Fan> Divisor::as_fan(const Fan& ambient) const {
  if (cones.empty()) return std::nullopt;
  FanDescription d;
  d.lattice_rank = ambient.lattice_rank();
  std::vector<int> index(ambient.ray_count(), -1);
  for (const auto& c : cones)
    for (int r : c.rays)
      if (index[static_cast<std::size_t>(r)] < 0) index[static_cast<std::size_t>(r)] = 0;
  for (std::size_t r = 0; r < index.size(); ++r)
    if (index[r] == 0) {
      index[r] = static_cast<int>(d.rays.size());
      d.rays.push_back(ambient.ray(static_cast<int>(r)));
    }
  for (const auto& c : cones) {
    std::vector<int> mapped;
    for (int r : c.rays) mapped.push_back(index[static_cast<std::size_t>(r)]);
    d.maximal_cones.push_back(mapped);
  }
  d.weights = weights;
  return Fan::from_trusted(d);
}

Divisor divisor(const Fan& fan, const QVector& values) {
  require_integral(fan, values);
  if (!fan.is_pure() || fan.dim() == 0) throw InputError("the divisor needs a pure fan of positive dimension");
  if (!is_balanced(fan).passed()) throw InputError("the divisor needs a balanced fan");
  Divisor out;
  const std::size_t n = fan.lattice_rank();
  for (const auto& tau : fan.cones_of_dim(fan.dim() - 1)) {
    IntVector v(n, 0);
    mpq_class lifted = 0;
    for (const auto& eta : fan.maximal_cones_containing(tau)) {
      const int xi = cone_difference(eta, tau).rays.front();
      const std::int64_t w = fan.weight(eta);
      for (std::size_t i = 0; i < n; ++i) v[i] += w * fan.ray(xi)[i];
      lifted += w * values[static_cast<std::size_t>(xi)];
    }
    // v lies in the span of tau by balancing
    QMatrix gens = to_rational(fan.generators(tau));
    QMatrix rhs(n, 1);
    for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = v[i];
    const auto c = solve(gens, rhs);
    if (!c) throw std::logic_error("balancing vector outside the span of " + tau.to_string());
    mpq_class along = 0;
    for (std::size_t j = 0; j < tau.dim(); ++j) along += (*c)(j, 0) * values[static_cast<std::size_t>(tau.rays[j])];
    const mpq_class weight = along - lifted;
    if (weight == 0) continue;
    if (weight.get_den() != 1) throw std::logic_error("non-integral divisor weight at " + tau.to_string());
    out.cones.push_back(tau);
    out.weights.push_back(weight.get_num().get_si());
  }
  return out;
}

ModificationResult tropical_modification(const Fan& fan, const QVector& values) {
  ModificationResult out;
  out.divisor = divisor(fan, values);
  const std::size_t n = fan.lattice_rank();
  FanDescription d;
  d.lattice_rank = n + 1;
  for (std::size_t r = 0; r < fan.ray_count(); ++r) {
    IntVector v = fan.ray(static_cast<int>(r));
    v.push_back(values[r].get_num().get_si());
    d.rays.push_back(v);
  }
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i < fan.maximal_cones().size(); ++i) {
    d.maximal_cones.push_back(fan.maximal_cones()[i].rays);
    weights.push_back(fan.weights()[i]);
  }
  if (!out.divisor.empty()) {
    IntVector up(n + 1, 0);
    up[n] = 1;
    const int vertical = static_cast<int>(d.rays.size());
    d.rays.push_back(up);
    out.added_rays.push_back(up);
    for (std::size_t i = 0; i < out.divisor.cones.size(); ++i) {
      d.maximal_cones.push_back(out.divisor.cones[i].with(vertical).rays);
      weights.push_back(out.divisor.weights[i]);
    }
  }
  d.weights = weights;
  out.graph_fan = Fan::validate(d);
  const Report unimodular = is_unimodular(out.graph_fan);
  if (!unimodular.passed()) {
    std::string cells;
    for (const auto& w : unimodular.witnesses) cells += " " + w;
    throw InputError("the modification is not unimodular; refine the input first. Offending cells:" + cells);
  }
  return out;
}

}  // namespace tropfan
