#pragma once

/// Common dense types and scalar utilities.  Everything numeric is templated
/// on the scalar: double for sampling suites, Rational for identity checks.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <type_traits>

#include "twistinv/rational.hpp"

namespace twistinv {

template <typename Scalar> using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar> using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar> using Vec6 = Eigen::Matrix<Scalar, 6, 1>;
template <typename Scalar> using Mat6 = Eigen::Matrix<Scalar, 6, 6>;

template <typename Scalar>
inline constexpr bool is_exact_scalar_v = false;
template <>
inline constexpr bool is_exact_scalar_v<Rational> = true;

/// Default relative tolerance for float comparisons; exact scalars compare
/// against zero.
template <typename Scalar>
Scalar default_tolerance() {
  if constexpr (is_exact_scalar_v<Scalar>)
    return Scalar(0);
  else
    return Scalar(1e-9);
}

/// Skew-symmetry tolerance used by vee().
template <typename Scalar>
Scalar skew_tolerance() {
  if constexpr (is_exact_scalar_v<Scalar>)
    return Scalar(0);
  else
    return Scalar(1e-12);
}

inline double abs_value(double x) { return std::abs(x); }
inline Rational abs_value(const Rational& x) { return abs(x); }

/// |a - b| <= max(abs_floor, rel * max(|a|,|b|)).
inline bool rel_close(double a, double b, double rel = 1e-9, double abs_floor = 1e-12) {
  const double d = std::abs(a - b);
  return d <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

/// Relative deviation of a from b, normalized by the larger magnitude.
inline double rel_delta(double a, double b) {
  const double m = std::max(std::abs(a), std::abs(b));
  return m == 0.0 ? 0.0 : std::abs(a - b) / m;
}

/// rel_delta with the same absolute floor as rel_close: differences at or
/// below the floor report as the (tiny) absolute difference, so near-zero
/// quantities do not register spurious relative errors.
inline double floored_rel_delta(double a, double b, double abs_floor = 1e-12) {
  const double d = std::abs(a - b);
  if (d <= abs_floor) return d;
  return rel_delta(a, b);
}

template <typename Derived>
typename Derived::Scalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  S best(0);
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) best = std::max(best, abs_value(m(i, j)));
  return best;
}

}  // namespace twistinv
