#pragma once

#include <cstddef>
#include <optional>

#include "tropfan/chow.hpp"
#include "tropfan/fan.hpp"
#include "tropfan/report.hpp"

namespace tropfan {

/// A conewise linear function is given by its values on the rays.
/// Strict convexity: for every cone sigma there is a linear m with f - m zero
/// on sigma and positive on the rays of the cones containing sigma. The
/// neighbourhood is taken inside the support of the fan.
Report is_strictly_convex(const Fan& fan, const QVector& values);

/// Values of f - m_sigma on the rays of the star at sigma, where m_sigma
/// agrees with f on sigma. Needs a unimodular cone.
QVector restrict_function(const Fan& fan, const StarFan& star, const QVector& values);

/// Searches for a strictly convex function by an exact linear program that
/// maximizes the minimal convexity slack; returns integer values certified
/// by is_strictly_convex, or nullopt.
std::optional<QVector> find_strictly_convex(const Fan& fan);

/// L^{d-2k}: A^k -> A^{d-k} is invertible.
Report hard_lefschetz_check(const ChowRing& ring, const ChowClass& L, std::size_t k);

/// (-1)^k deg(L^{d-2k} a b) is positive definite on ker(L^{d-2k+1}) in A^k,
/// by leading principal minors.
Report hodge_riemann_check(const ChowRing& ring, const ChowClass& L, std::size_t k);

/// (a, b) -> deg(ab) is nonsingular on A^k x A^{d-k} for every k.
Report poincare_pairing_check(const ChowRing& ring);

/// Homology-manifold test plus the Kahler package on every star with the
/// restricted function. Without `values`, or if they are not strictly
/// convex, a function is searched for; failing that the verdict is
/// not_certified.
Report is_kahler(const Fan& fan, const std::optional<QVector>& values = std::nullopt);

}  // namespace tropfan
