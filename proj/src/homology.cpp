#include "tropfan/homology.hpp"

#include <sstream>

#include "tropfan/linalg.hpp"
#include "tropfan/parallel.hpp"

namespace tropfan {

std::size_t BettiTable::at(std::size_t p, std::size_t q) const {
  return (p <= d && q <= d) ? entries[p][q] : 0;
}

std::vector<std::size_t> BettiTable::betti_numbers() const {
  std::vector<std::size_t> b(2 * d + 1, 0);
  for (std::size_t p = 0; p <= d; ++p)
    for (std::size_t q = 0; q <= d; ++q) b[p + q] += entries[p][q];
  return b;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t p = 0; p <= d; ++p) {
    os << (p ? ",[" : "[");
    for (std::size_t q = 0; q <= d; ++q) os << (q ? "," : "") << entries[p][q];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t ChainComplex::rank(std::size_t q) const {
  if (q == 0 || q >= boundaries.size()) return 0;
  return tropfan::rank(boundaries[q]);
}

std::size_t ChainComplex::homology_dim(std::size_t q) const {
  if (q >= dims.size()) return 0;
  return dims[q] - rank(q) - rank(q + 1);
}

ChainComplex chain_complex(const CompactifiedComplex& complex, std::size_t p) {
  const std::size_t d = complex.dim();
  ChainComplex out;
  out.p = p;
  out.dims.assign(d + 1, 0);
  out.offsets.resize(d + 1);
  for (std::size_t q = 0; q <= d; ++q) {
    for (const auto& face : complex.faces(q)) {
      out.offsets[q].push_back(out.dims[q]);
      out.dims[q] += complex.tangent_dim(face, p);
    }
  }
  out.boundaries.resize(d + 1);
  out.boundaries[0] = QMatrix(0, out.dims[0]);
  for (std::size_t q = 1; q <= d; ++q) {
    QMatrix m(out.dims[q - 1], out.dims[q]);
    const auto& faces = complex.faces(q);
    const auto& lower = complex.faces(q - 1);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (complex.tangent_dim(faces[i], p) == 0) continue;
      for (const auto& inc : complex.boundary(q, i)) {
        if (complex.tangent_dim(lower[inc.face], p) == 0) continue;
        const QMatrix block = complex.coefficient_map(faces[i], lower[inc.face], p);
        const std::size_t r0 = out.offsets[q - 1][inc.face], c0 = out.offsets[q][i];
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c) m(r0 + r, c0 + c) += inc.sign * block(r, c);
      }
    }
    out.boundaries[q] = std::move(m);
  }
  return out;
}

std::vector<QMatrix> cochain_complex(const ChainComplex& chains) {
  std::vector<QMatrix> delta;
  for (std::size_t q = 0; q < chains.dims.size(); ++q) {
    if (q + 1 < chains.boundaries.size())
      delta.push_back(chains.boundaries[q + 1].transpose());
    else
      delta.push_back(QMatrix(0, chains.dims[q]));
  }
  return delta;
}

BettiTable homology_table(const CompactifiedComplex& complex) {
  const std::size_t d = complex.dim();
  BettiTable t(d);
  for (std::size_t p = 0; p <= d; ++p) {
    const ChainComplex c = chain_complex(complex, p);
    for (std::size_t q = 0; q <= d; ++q) t.entries[p][q] = c.homology_dim(q);
  }
  return t;
}

BettiTable cohomology_table(const CompactifiedComplex& complex) {
  const std::size_t d = complex.dim();
  BettiTable t(d);
  for (std::size_t p = 0; p <= d; ++p) {
    const ChainComplex c = chain_complex(complex, p);
    const auto delta = cochain_complex(c);
    for (std::size_t q = 0; q <= d; ++q) {
      const std::size_t out_rank = rank(delta[q]);
      const std::size_t in_rank = q == 0 ? 0 : rank(delta[q - 1]);
      t.entries[p][q] = c.dims[q] - out_rank - in_rank;
    }
  }
  return t;
}

BettiTable betti_table(const Fan& fan) { return homology_table(CompactifiedComplex(fan)); }

QMatrix homology_basis(const ChainComplex& chains, std::size_t q) {
  const std::size_t n = chains.dims.at(q);
  const QMatrix kernel = q == 0 ? QMatrix::identity(n) : nullspace(chains.boundaries[q]);
  QMatrix image(n, 0);
  if (q + 1 < chains.boundaries.size()) image = chains.boundaries[q + 1];
  QMatrix joint = image;
  for (std::size_t c = 0; c < kernel.cols(); ++c) joint.append_column(kernel.column(c));
  const std::size_t image_rank = rank(image);
  QMatrix out(n, 0);
  for (std::size_t c : independent_columns(joint))
    if (c >= image.cols()) out.append_column(joint.column(c));
  if (out.cols() + image_rank != kernel.cols()) throw std::logic_error("homology basis size mismatch");
  return out;
}

OpenCohomology fan_open_cohomology(const Fan& fan, std::size_t p) {
  const CompactifiedComplex complex(fan);
  const CompactFace origin{Cone{}, Cone{}};
  OpenCohomology out;
  out.dim = complex.tangent_dim(origin, p);
  if (out.dim == 0) return out;
  const auto& space = complex.multi_tangent(origin, p);
  out.tangent_basis = space.basis;
  // (B^T B)^{-1} B^T is a left inverse of B
  const QMatrix b = to_rational(space.basis);
  const QMatrix bt = b.transpose();
  out.functionals = inverse(bt * b) * bt;
  return out;
}

FundamentalCycle fundamental_class(const Fan& fan) {
  if (!fan.weighted()) throw InputError("the fundamental class needs facet weights");
  if (!fan.is_pure()) throw InputError("the fundamental class needs a pure fan");
  const CompactifiedComplex complex(fan);
  const std::size_t d = complex.dim();
  const ChainComplex chains = chain_complex(complex, d);

  FundamentalCycle out;
  out.chain.assign(chains.dims[d], 0);
  const auto& top = complex.faces(d);
  for (std::size_t i = 0; i < top.size(); ++i) {
    const CompactFace& face = top[i];
    if (!face.sedentarity.empty()) continue;
    const std::int64_t w = fan.weight(face.mother);
    auto omega = wedge(fan.generators(face.mother));
    for (auto& x : omega) x *= w;
    const QVector coords = complex.coordinates(face, d, omega);
    for (std::size_t j = 0; j < coords.size(); ++j) out.chain[chains.offsets[d][i] + j] = coords[j];
    out.faces.push_back(face);
    out.multivectors.push_back(std::move(omega));
  }
  out.boundary = d == 0 ? QVector{} : multiply(chains.boundaries[d], out.chain);
  out.is_cycle = true;
  for (const auto& x : out.boundary)
    if (x != 0) out.is_cycle = false;
  return out;
}

Report pd_battery(const BettiTable& homology, const BettiTable& cohomology) {
  Report r("PD battery");
  const std::size_t d = homology.d;
  r.set("dimension", std::to_string(d));
  r.set("homology", homology.to_string());
  r.set("cohomology", cohomology.to_string());
  for (std::size_t p = 0; p <= d; ++p)
    for (std::size_t q = 0; q <= d; ++q)
      if (cohomology.at(p, q) != homology.at(d - p, d - q))
        r.fail("(a) dim H^{" + std::to_string(p) + "," + std::to_string(q) + "} = " +
               std::to_string(cohomology.at(p, q)) + " but dim H_{" + std::to_string(d - p) + "," +
               std::to_string(d - q) + "} = " + std::to_string(homology.at(d - p, d - q)));
  if (cohomology.at(d, d) != 1)
    r.fail("(b) dim H^{" + std::to_string(d) + "," + std::to_string(d) + "} = " + std::to_string(cohomology.at(d, d)));
  for (std::size_t p = 0; p <= d; ++p)
    for (std::size_t q = 0; q <= d; ++q)
      if (p != q && cohomology.at(p, q) != 0)
        r.fail("(c) dim H^{" + std::to_string(p) + "," + std::to_string(q) + "} = " +
               std::to_string(cohomology.at(p, q)));
  r.note("necessary conditions for Poincare duality, not a proof of it");
  return r;
}

Report pd_battery(const Fan& fan) {
  const CompactifiedComplex complex(fan);
  return pd_battery(homology_table(complex), cohomology_table(complex));
}

Report is_tropical_homology_manifold(const Fan& fan) {
  Report r("tropical homology manifold");
  const auto& cones = fan.cones();
  std::vector<Report> stars(cones.size());
  parallel_for(cones.size(), [&](std::size_t i) {
    const StarFan star = star_fan(fan, cones[i]);
    stars[i] = pd_battery(star.fan);
  });
  std::size_t failing = 0;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (stars[i].passed()) continue;
    ++failing;
    stars[i].check = "PD battery at sigma = " + cones[i].to_string();
    r.fail("sigma = " + cones[i].to_string());
    r.add(std::move(stars[i]));
  }
  r.set("cones checked", std::to_string(cones.size()));
  r.set("cones failing", std::to_string(failing));
  r.note("based on the PD battery at every star; whether the battery is equivalent to Poincare duality is open");
  return r;
}

}  // namespace tropfan
