#include "tropfan/feasibility.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace tropfan {

namespace {

// Scales so that the first nonzero coefficient has absolute value 1.
void normalize(LinearConstraint& c) {
  for (const auto& a : c.coefficients) {
    if (a == 0) continue;
    const mpq_class s = abs(a);
    for (auto& b : c.coefficients) b /= s;
    c.bound /= s;
    return;
  }
}

bool trivially_false(const LinearConstraint& c) {
  switch (c.relation) {
    case Relation::less: return !(0 < c.bound);
    case Relation::less_equal: return !(0 <= c.bound);
    case Relation::equal: return c.bound != 0;
  }
  return true;
}

bool all_zero(const LinearConstraint& c) {
  return std::all_of(c.coefficients.begin(), c.coefficients.end(), [](const mpq_class& a) { return a == 0; });
}

struct ConstraintKey {
  bool operator()(const LinearConstraint& a, const LinearConstraint& b) const {
    if (a.relation != b.relation) return a.relation < b.relation;
    if (a.coefficients != b.coefficients) return a.coefficients < b.coefficients;
    return a.bound < b.bound;
  }
};

}  // namespace

bool is_feasible(std::vector<LinearConstraint> constraints, std::size_t variables) {
  for (const auto& c : constraints)
    if (c.coefficients.size() != variables) throw std::invalid_argument("constraint has the wrong number of coefficients");

  // Substitute equalities away.
  while (true) {
    auto eq = std::find_if(constraints.begin(), constraints.end(),
                           [](const LinearConstraint& c) { return c.relation == Relation::equal && !all_zero(c); });
    if (eq == constraints.end()) break;
    const LinearConstraint pivot = *eq;
    constraints.erase(eq);
    std::size_t j = 0;
    while (pivot.coefficients[j] == 0) ++j;
    for (auto& c : constraints) {
      if (c.coefficients[j] == 0) continue;
      const mpq_class f = c.coefficients[j] / pivot.coefficients[j];
      for (std::size_t k = 0; k < variables; ++k) c.coefficients[k] -= f * pivot.coefficients[k];
      c.bound -= f * pivot.bound;
    }
  }

  for (std::size_t var = 0; var < variables; ++var) {
    std::vector<LinearConstraint> upper, lower, rest;
    for (auto& c : constraints) {
      if (all_zero(c)) {
        if (trivially_false(c)) return false;
        continue;
      }
      if (c.coefficients[var] > 0)
        upper.push_back(std::move(c));
      else if (c.coefficients[var] < 0)
        lower.push_back(std::move(c));
      else
        rest.push_back(std::move(c));
    }
    for (const auto& u : upper)
      for (const auto& l : lower) {
        // u: a x + ... rel b with a > 0; l: -c x + ... rel d with c > 0
        const mpq_class a = u.coefficients[var];
        const mpq_class c = -l.coefficients[var];
        LinearConstraint combined;
        combined.coefficients.resize(variables);
        for (std::size_t k = 0; k < variables; ++k) combined.coefficients[k] = c * u.coefficients[k] + a * l.coefficients[k];
        combined.coefficients[var] = 0;
        combined.bound = c * u.bound + a * l.bound;
        combined.relation =
            (u.relation == Relation::less || l.relation == Relation::less) ? Relation::less : Relation::less_equal;
        rest.push_back(std::move(combined));
      }
    std::set<LinearConstraint, ConstraintKey> unique;
    for (auto& c : rest) {
      normalize(c);
      unique.insert(std::move(c));
    }
    constraints.assign(unique.begin(), unique.end());
  }
  return std::none_of(constraints.begin(), constraints.end(), trivially_false);
}

std::optional<QVector> maximize_from_origin(const QVector& objective, const QMatrix& rows, const QVector& bounds) {
  const std::size_t n = objective.size(), m = rows.rows();
  if (rows.cols() != n || bounds.size() != m) throw std::invalid_argument("linear program has inconsistent sizes");
  for (const auto& b : bounds)
    if (b < 0) throw std::invalid_argument("the origin must be feasible");
  // columns: x+ (n), x- (n), slacks (m), right-hand side
  const std::size_t cols = 2 * n + m;
  QMatrix t(m + 1, cols + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = rows(i, j);
      t(i, n + j) = -rows(i, j);
    }
    t(i, 2 * n + i) = 1;
    t(i, cols) = bounds[i];
  }
  // objective row holds reduced costs of the minimization of -objective
  for (std::size_t j = 0; j < n; ++j) {
    t(m, j) = -objective[j];
    t(m, n + j) = objective[j];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = 2 * n + i;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      const mpq_class ratio = t(i, cols) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return std::nullopt;
    const mpq_class p = t(leave, enter);
    for (std::size_t j = 0; j <= cols; ++j) t(leave, j) /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const mpq_class f = t(i, enter);
      for (std::size_t j = 0; j <= cols; ++j) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }
  QVector x(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] += t(i, cols);
    else if (basis[i] < 2 * n) x[basis[i] - n] -= t(i, cols);
  }
  return x;
}

}  // namespace tropfan
