#include "tropfan/complex.hpp"

#include <algorithm>

#include "tropfan/linalg.hpp"

namespace tropfan {

std::string CompactFace::to_string() const { return "C" + mother.to_string() + "^" + sedentarity.to_string(); }

bool is_face_of(const CompactFace& alpha, const CompactFace& beta) {
  return alpha.sedentarity.contains(beta.sedentarity) && beta.mother.contains(alpha.mother) &&
         alpha.mother.contains(alpha.sedentarity);
}

CompactifiedComplex::CompactifiedComplex(Fan fan) : fan_(std::move(fan)) {
  const Report unimodular = is_unimodular(fan_);
  if (!unimodular.passed()) throw InputError("the compactified complex needs a unimodular fan: " + unimodular.witnesses.front());

  for (const auto& c : fan_.cones()) frames_.emplace(c, cone_frame(fan_, c));

  const std::size_t d = fan_.dim();
  faces_.resize(d + 1);
  for (const auto& gamma : fan_.cones()) {
    const std::size_t k = gamma.dim();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Cone sigma;
      for (std::size_t j = 0; j < k; ++j)
        if (mask & (std::size_t{1} << j)) sigma.rays.push_back(gamma.rays[j]);
      CompactFace f{sigma, gamma};
      faces_[f.dim()].push_back(f);
    }
  }
  for (auto& layer : faces_) {
    std::sort(layer.begin(), layer.end(), [&](const CompactFace& a, const CompactFace& b) {
      const auto ma = fan_.cone_index(a.mother), mb = fan_.cone_index(b.mother);
      if (ma != mb) return ma < mb;
      return fan_.cone_index(a.sedentarity) < fan_.cone_index(b.sedentarity);
    });
    for (std::size_t i = 0; i < layer.size(); ++i) index_[layer[i]] = i;
  }

  boundary_.resize(d + 1);
  for (std::size_t q = 0; q <= d; ++q) {
    boundary_[q].resize(faces_[q].size());
    if (q == 0) continue;
    for (std::size_t i = 0; i < faces_[q].size(); ++i) {
      const CompactFace& f = faces_[q][i];
      const Cone free = cone_difference(f.mother, f.sedentarity);
      for (std::size_t t = 0; t < free.dim(); ++t) {
        const int z = free.rays[t];
        const int parity = (t % 2 == 0) ? 1 : -1;
        boundary_[q][i].push_back({index_.at({f.sedentarity, f.mother.without(z)}), -parity});
        boundary_[q][i].push_back({index_.at({f.sedentarity.with(z), f.mother}), parity});
      }
    }
  }

  for (std::size_t q = 0; q <= d; ++q)
    for (const auto& face : faces_[q]) {
      const LatticeFrame& fr = frames_.at(face.sedentarity);
      const std::size_t r = fr.quotient_rank();
      const ZMatrix proj = fr.projection();
      std::vector<TangentData> per_p;
      const auto etas = fan_.maximal_cones_containing(face.mother);
      for (std::size_t p = 0; p <= std::max(r, d); ++p) {
        const std::size_t ambient = binomial(r, p);
        ZMatrix gens(ambient, 0);
        for (const auto& eta : etas) {
          const Cone rest = cone_difference(eta, face.sedentarity);
          ZMatrix images(r, rest.dim());
          for (std::size_t j = 0; j < rest.dim(); ++j) {
            const IntVector img = fr.project(fan_.ray(rest.rays[j]));
            for (std::size_t i = 0; i < r; ++i) images(i, j) = static_cast<long>(img[i]);
          }
          for (const auto& pick : subsets(rest.dim(), p)) {
            const auto w = wedge(images.select_columns(pick));
            gens.append_column(w);
          }
        }
        TangentData data;
        data.space.face = face;
        data.space.p = p;
        data.space.ambient_dim = ambient;
        const auto cols = independent_columns(gens);
        data.space.basis = gens.select_columns(cols);
        // coordinate extraction through an invertible row block
        const auto rows = independent_columns(data.space.basis.transpose());
        data.pivot_rows = rows;
        if (!rows.empty()) {
          const QMatrix block = to_rational(data.space.basis.transpose().select_columns(rows).transpose());
          data.pivot_inverse = inverse(block);
        }
        per_p.push_back(std::move(data));
      }
      tangents_.emplace(face, std::move(per_p));
    }
}

const std::vector<CompactFace>& CompactifiedComplex::faces(std::size_t q) const {
  static const std::vector<CompactFace> none;
  return q < faces_.size() ? faces_[q] : none;
}

std::size_t CompactifiedComplex::face_index(const CompactFace& face) const {
  auto it = index_.find(face);
  if (it == index_.end()) throw InputError("face " + face.to_string() + " is not in the complex");
  return it->second;
}

const std::vector<Incidence>& CompactifiedComplex::boundary(std::size_t q, std::size_t i) const {
  return boundary_.at(q).at(i);
}

std::vector<std::size_t> CompactifiedComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& layer : faces_) f.push_back(layer.size());
  return f;
}

const LatticeFrame& CompactifiedComplex::frame(const Cone& sedentarity) const {
  auto it = frames_.find(sedentarity);
  if (it == frames_.end()) throw InputError("cone " + sedentarity.to_string() + " is not in the fan");
  return it->second;
}

const CompactifiedComplex::TangentData& CompactifiedComplex::tangent(const CompactFace& face, std::size_t p) const {
  auto it = tangents_.find(face);
  if (it == tangents_.end()) throw InputError("face " + face.to_string() + " is not in the complex");
  if (p >= it->second.size())
    throw InputError("p = " + std::to_string(p) + " exceeds the rank of the quotient lattice at " + face.to_string());
  return it->second[p];
}

const MultiTangentSpace& CompactifiedComplex::multi_tangent(const CompactFace& face, std::size_t p) const {
  if (p > frame(face.sedentarity).quotient_rank())
    throw InputError("p = " + std::to_string(p) + " exceeds the rank of the quotient lattice at " + face.to_string());
  return tangent(face, p).space;
}

std::size_t CompactifiedComplex::tangent_dim(const CompactFace& face, std::size_t p) const {
  auto it = tangents_.find(face);
  if (it == tangents_.end()) throw InputError("face " + face.to_string() + " is not in the complex");
  return p < it->second.size() ? it->second[p].space.dim() : 0;
}

ZMatrix CompactifiedComplex::ambient_map(const CompactFace& beta, const CompactFace& alpha, std::size_t p) const {
  if (!is_face_of(alpha, beta)) throw InputError(alpha.to_string() + " is not a face of " + beta.to_string());
  const LatticeFrame& source = frame(beta.sedentarity);
  const LatticeFrame& target = frame(alpha.sedentarity);
  const ZMatrix q = target.projection() * source.lift();
  return exterior_power(q, p);
}

QMatrix CompactifiedComplex::coefficient_map(const CompactFace& beta, const CompactFace& alpha, std::size_t p) const {
  const ZMatrix map = ambient_map(beta, alpha, p);
  const auto& src = tangent(beta, p).space;
  const auto& dst = tangent(alpha, p).space;
  const ZMatrix images = map * src.basis;
  QMatrix out(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    const QVector c = coordinates(alpha, p, images.column(j));
    for (std::size_t i = 0; i < dst.dim(); ++i) out(i, j) = c[i];
  }
  return out;
}

QVector CompactifiedComplex::coordinates(const CompactFace& face, std::size_t p,
                                         const std::vector<mpz_class>& ambient) const {
  const TangentData& t = tangent(face, p);
  if (ambient.size() != t.space.ambient_dim) throw InputError("ambient vector has the wrong size");
  QVector picked(t.pivot_rows.size());
  for (std::size_t i = 0; i < picked.size(); ++i) picked[i] = ambient[t.pivot_rows[i]];
  QVector coords = t.pivot_rows.empty() ? QVector{} : multiply(t.pivot_inverse, picked);
  // the ambient vector must lie in the subspace
  for (std::size_t r = 0; r < t.space.ambient_dim; ++r) {
    mpq_class v = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) v += coords[j] * mpq_class(t.space.basis(r, j));
    if (v != mpq_class(ambient[r])) throw std::logic_error("vector is not in the multi-tangent space of " + face.to_string());
  }
  return coords;
}

}  // namespace tropfan
