#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropfan/matrix.hpp"

namespace tropfan {

enum class Relation { less, less_equal, equal };

/// coefficients . x  (relation)  bound
struct LinearConstraint {
  QVector coefficients;
  Relation relation = Relation::less_equal;
  mpq_class bound;
};

/// Exact feasibility of a system of strict/non-strict linear inequalities and
/// equalities over Q, by equality substitution followed by Fourier-Motzkin
/// elimination. Meant for the handful of variables that occur in fan checks.
bool is_feasible(std::vector<LinearConstraint> constraints, std::size_t variables);

}  // namespace tropfan

namespace tropfan {

/// Maximizes objective . x over free variables x subject to rows . x <= bounds
/// with every bound >= 0, so that x = 0 is feasible. Exact primal simplex
/// with Bland's rule. Returns an optimal vertex, or nullopt if unbounded.
std::optional<QVector> maximize_from_origin(const QVector& objective, const QMatrix& rows, const QVector& bounds);

}  // namespace tropfan
