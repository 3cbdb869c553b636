#include "twistinv/polarize.hpp"

#include <array>
#include <stdexcept>

namespace twistinv {

DualPoly dualize(const MultiPoly& f) {
  const VarTablePtr& vars = f.vars();
  if (!vars->twist_layout())
    throw std::invalid_argument("dualize: variable table has no twist layout");
  for (int i = 0; i < vars->size(); ++i)
    if (!vars->is_omega(i) && f.degree_in(i) > 0)
      throw std::invalid_argument("dualize: input involves linear variable '" + vars->name(i) + "'");
  MultiPoly dual(vars);
  for (int i = 0; i < vars->size(); ++i) {
    if (!vars->is_omega(i)) continue;
    const MultiPoly df = f.partial_derivative(i);
    if (df.is_zero()) continue;
    dual = dual + MultiPoly::variable(vars, vars->linear_partner(i)) * df;
  }
  return {f, dual};
}

DualPoly dual_product(const DualPoly& p, const DualPoly& q) {
  return {p.primal * q.primal, p.primal * q.dual + p.dual * q.primal};
}

MultiPoly quadratic_generator(const VarTablePtr& vars, int i, int j) {
  MultiPoly out(vars);
  for (int c = 0; c < 3; ++c)
    out = out + MultiPoly::variable(vars, vars->omega_index(i, c)) *
                    MultiPoly::variable(vars, vars->omega_index(j, c));
  return out;
}

namespace {

// det of three variable columns given by their table indices.
MultiPoly det_of_columns(const VarTablePtr& vars, const std::array<int, 3>& a,
                         const std::array<int, 3>& b, const std::array<int, 3>& c) {
  auto var = [&](int idx) { return MultiPoly::variable(vars, idx); };
  return var(a[0]) * (var(b[1]) * var(c[2]) - var(b[2]) * var(c[1])) -
         var(a[1]) * (var(b[0]) * var(c[2]) - var(b[2]) * var(c[0])) +
         var(a[2]) * (var(b[0]) * var(c[1]) - var(b[1]) * var(c[0]));
}

std::array<int, 3> omega_column(const VarTablePtr& vars, int twist) {
  return {vars->omega_index(twist, 0), vars->omega_index(twist, 1), vars->omega_index(twist, 2)};
}

std::array<int, 3> v_column(const VarTablePtr& vars, int twist) {
  return {vars->v_index(twist, 0), vars->v_index(twist, 1), vars->v_index(twist, 2)};
}

}  // namespace

MultiPoly cubic_generator(const VarTablePtr& vars, int i, int j, int l) {
  return det_of_columns(vars, omega_column(vars, i), omega_column(vars, j), omega_column(vars, l));
}

MultiPoly dual_cubic_polynomial(const VarTablePtr& vars, int i, int j, int l) {
  return det_of_columns(vars, omega_column(vars, i), omega_column(vars, j), v_column(vars, l)) +
         det_of_columns(vars, omega_column(vars, j), omega_column(vars, l), v_column(vars, i)) +
         det_of_columns(vars, omega_column(vars, l), omega_column(vars, i), v_column(vars, j));
}

std::vector<MultiPoly> so3_generators(int k) {
  const VarTablePtr vars = VarTable::twists(k);
  std::vector<MultiPoly> gens;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) gens.push_back(quadratic_generator(vars, i, j));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l) gens.push_back(cubic_generator(vars, i, j, l));
  return gens;
}

SyzygyReport verify_syzygy_symbolic() {
  const VarTablePtr vars = VarTable::twists(3);
  MultiPoly gram[3][3] = {{MultiPoly(vars), MultiPoly(vars), MultiPoly(vars)},
                          {MultiPoly(vars), MultiPoly(vars), MultiPoly(vars)},
                          {MultiPoly(vars), MultiPoly(vars), MultiPoly(vars)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gram[i][j] = quadratic_generator(vars, std::min(i, j), std::max(i, j));
  const MultiPoly cubic = cubic_generator(vars, 0, 1, 2);

  // det of the Gram matrix by cofactor expansion.
  const MultiPoly det_gram =
      gram[0][0] * (gram[1][1] * gram[2][2] - gram[1][2] * gram[2][1]) -
      gram[0][1] * (gram[1][0] * gram[2][2] - gram[1][2] * gram[2][0]) +
      gram[0][2] * (gram[1][0] * gram[2][1] - gram[1][1] * gram[2][0]);

  SyzygyReport report;
  const MultiPoly primal_residual = cubic * cubic - det_gram;
  report.primal_zero = primal_residual.is_zero();
  report.primal_residual_leading = primal_residual.leading_term();

  // Dual route: polarize both sides and compare dual parts.
  DualPoly dual_gram[3][3] = {
      {dualize(gram[0][0]), dualize(gram[0][1]), dualize(gram[0][2])},
      {dualize(gram[1][0]), dualize(gram[1][1]), dualize(gram[1][2])},
      {dualize(gram[2][0]), dualize(gram[2][1]), dualize(gram[2][2])}};
  const DualPoly dual_cubic = dualize(cubic);
  const DualPoly lhs = dual_product(dual_cubic, dual_cubic);
  const DualPoly rhs =
      dual_product(dual_gram[0][0],
                   dual_product(dual_gram[1][1], dual_gram[2][2]) -
                       dual_product(dual_gram[1][2], dual_gram[2][1])) -
      dual_product(dual_gram[0][1],
                   dual_product(dual_gram[1][0], dual_gram[2][2]) -
                       dual_product(dual_gram[1][2], dual_gram[2][0])) +
      dual_product(dual_gram[0][2],
                   dual_product(dual_gram[1][0], dual_gram[2][1]) -
                       dual_product(dual_gram[1][1], dual_gram[2][0]));
  const MultiPoly dual_residual = lhs.dual - rhs.dual;
  report.dual_zero = dual_residual.is_zero() && (lhs.primal - rhs.primal).is_zero();
  report.dual_residual_leading = dual_residual.leading_term();

  // The explicit twelve-term form of the dual identity, written out against
  // 2 * I_123 * It_123 with It_ij substituted by its polynomial.
  auto q = [&](int i, int j) { return gram[i][j]; };
  auto t = [&](int i, int j) { return dual_gram[i][j].dual; };
  const MultiPoly two = MultiPoly::constant(vars, Rational(2));
  const MultiPoly twelve_terms =
      t(0, 0) * q(1, 1) * q(2, 2) + q(0, 0) * t(1, 1) * q(2, 2) + q(0, 0) * q(1, 1) * t(2, 2) -
      t(0, 0) * q(1, 2) * q(1, 2) - two * q(0, 0) * q(1, 2) * t(1, 2) +
      two * t(0, 1) * q(0, 2) * q(1, 2) + two * q(0, 1) * t(0, 2) * q(1, 2) +
      two * q(0, 1) * q(0, 2) * t(1, 2) - two * q(0, 1) * t(0, 1) * q(2, 2) -
      q(0, 1) * q(0, 1) * t(2, 2) - two * q(0, 2) * t(0, 2) * q(1, 1) -
      q(0, 2) * q(0, 2) * t(1, 1);
  const MultiPoly printed_residual = two * cubic * dual_cubic.dual - twelve_terms;
  report.printed_dual_zero = printed_residual.is_zero();
  report.printed_residual_leading = printed_residual.leading_term();

  report.expanded_terms = det_gram.term_count() + rhs.dual.term_count() + twelve_terms.term_count();
  return report;
}

GradientParallelReport gradient_parallel_check(const MultiPoly& f,
                                               std::span<const Vec3<Rational>> points) {
  const VarTablePtr& vars = f.vars();
  if (!vars->twist_layout())
    throw std::invalid_argument("gradient_parallel_check: variable table has no twist layout");
  int twist = -1;
  for (int i = 0; i < vars->size(); ++i) {
    if (f.degree_in(i) == 0) continue;
    if (!vars->is_omega(i))
      throw std::invalid_argument("gradient_parallel_check: input involves a linear variable");
    const int t = i / 6;
    if (twist == -1) twist = t;
    if (t != twist)
      throw std::invalid_argument("gradient_parallel_check: input mixes several twists");
  }
  if (twist == -1) twist = 0;  // constant polynomial: gradient vanishes everywhere

  const std::array<MultiPoly, 3> grad = {f.partial_derivative(vars->omega_index(twist, 0)),
                                         f.partial_derivative(vars->omega_index(twist, 1)),
                                         f.partial_derivative(vars->omega_index(twist, 2))};
  GradientParallelReport report;
  for (const Vec3<Rational>& w : points) {
    std::vector<Rational> values(static_cast<std::size_t>(vars->size()), Rational(0));
    for (int c = 0; c < 3; ++c) values[static_cast<std::size_t>(vars->omega_index(twist, c))] = w(c);
    const Vec3<Rational> g(grad[0].evaluate(values), grad[1].evaluate(values),
                           grad[2].evaluate(values));
    const Vec3<Rational> cross = g.cross(w);
    const bool parallel = cross == Vec3<Rational>::Zero();
    if (!parallel) ++report.failures;
    report.samples.push_back({w, cross, parallel});
  }
  return report;
}

}  // namespace twistinv
