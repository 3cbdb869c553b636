#pragma once

/// The k-fold invariant families of the adjoint action: quadratic tables
/// I_ij = w_i.w_j and It_ij = w_i.v_j + v_i.w_j, cubic bracket invariants
/// I_ijk = det[w_i w_j w_k] and their duals It_ijk (cyclic sums), the pair
/// of syzygies linking them for k = 3, signature-based equivalence, and the
/// Jacobian of the twelve quadratics.

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/SVD>

#include "twistinv/screw.hpp"

namespace twistinv {

template <typename Scalar>
Scalar killing_form(const Twist<Scalar>& s) {
  return s.omega.dot(s.omega);
}

template <typename Scalar>
Scalar klein_form(const Twist<Scalar>& s) {
  return s.omega.dot(s.v);
}

template <typename Scalar>
Scalar column_det(const Vec3<Scalar>& a, const Vec3<Scalar>& b, const Vec3<Scalar>& c) {
  Mat3<Scalar> m;
  m.col(0) = a;
  m.col(1) = b;
  m.col(2) = c;
  return m.determinant();
}

/// Evaluated invariant family of a k-tuple of twists.  Quadratic tables are
/// symmetric k x k; cubic entries are indexed by ordered triples i < j < l.
template <typename Scalar>
struct InvariantSignature {
  int k = 0;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> quad_primal;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> quad_dual;
  std::vector<std::array<int, 3>> cubic_index;  // 0-based triples, i<j<l
  std::vector<Scalar> cubic_primal;
  std::vector<Scalar> cubic_dual;
};

template <typename Scalar>
InvariantSignature<Scalar> signature(std::span<const Twist<Scalar>> twists) {
  const int k = static_cast<int>(twists.size());
  if (k == 0) throw std::invalid_argument("signature: empty twist list");
  InvariantSignature<Scalar> sig;
  sig.k = k;
  sig.quad_primal.resize(k, k);
  sig.quad_dual.resize(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      sig.quad_primal(i, j) = twists[i].omega.dot(twists[j].omega);
      sig.quad_dual(i, j) = twists[i].omega.dot(twists[j].v) + twists[i].v.dot(twists[j].omega);
    }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l) {
        sig.cubic_index.push_back({i, j, l});
        sig.cubic_primal.push_back(
            column_det(twists[i].omega, twists[j].omega, twists[l].omega));
        // Cyclic sum of single-column replacements by the linear parts.
        sig.cubic_dual.push_back(column_det(twists[i].omega, twists[j].omega, twists[l].v) +
                                 column_det(twists[j].omega, twists[l].omega, twists[i].v) +
                                 column_det(twists[l].omega, twists[i].omega, twists[j].v));
      }
  return sig;
}

template <typename Scalar>
InvariantSignature<Scalar> signature(const std::vector<Twist<Scalar>>& twists) {
  return signature(std::span<const Twist<Scalar>>(twists));
}

template <typename Scalar>
InvariantSignature<Scalar> signature(const std::array<Twist<Scalar>, 3>& twists) {
  return signature(std::span<const Twist<Scalar>>(twists.data(), twists.size()));
}

/// The twelve-term dual companion of the Gram-determinant expansion; for a
/// genuine signature it equals 2 * I_123 * It_123.
template <typename Scalar>
Scalar dual_gram_expansion(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& q,
                           const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& t) {
  return t(0, 0) * q(1, 1) * q(2, 2) + q(0, 0) * t(1, 1) * q(2, 2) + q(0, 0) * q(1, 1) * t(2, 2) -
         t(0, 0) * q(1, 2) * q(1, 2) - Scalar(2) * q(0, 0) * q(1, 2) * t(1, 2) +
         Scalar(2) * t(0, 1) * q(0, 2) * q(1, 2) + Scalar(2) * q(0, 1) * t(0, 2) * q(1, 2) +
         Scalar(2) * q(0, 1) * q(0, 2) * t(1, 2) - Scalar(2) * q(0, 1) * t(0, 1) * q(2, 2) -
         q(0, 1) * q(0, 1) * t(2, 2) - Scalar(2) * q(0, 2) * t(0, 2) * q(1, 1) -
         q(0, 2) * q(0, 2) * t(1, 1);
}

/// Residuals of the two syzygies for k = 3:
///   r1 = I_123^2 - det(I_ij)
///   r2 = 2 I_123 It_123 - (twelve-term dual expansion)
/// Both vanish identically on signatures of real triples.
template <typename Scalar>
std::pair<Scalar, Scalar> syzygy_residuals(const InvariantSignature<Scalar>& sig) {
  if (sig.k != 3) throw std::invalid_argument("syzygy_residuals: defined for k = 3 only");
  const auto& q = sig.quad_primal;
  const Scalar det_gram = q(0, 0) * q(1, 1) * q(2, 2) - q(0, 0) * q(1, 2) * q(1, 2) +
                          Scalar(2) * q(0, 1) * q(0, 2) * q(1, 2) -
                          q(0, 1) * q(0, 1) * q(2, 2) - q(0, 2) * q(0, 2) * q(1, 1);
  const Scalar r1 = sig.cubic_primal[0] * sig.cubic_primal[0] - det_gram;
  const Scalar r2 = Scalar(2) * sig.cubic_primal[0] * sig.cubic_dual[0] -
                    dual_gram_expansion(sig.quad_primal, sig.quad_dual);
  return {r1, r2};
}

/// Names and values of the 14 entries of a k = 3 signature, in the fixed
/// order I_11..I_33, It_11..It_33, I_123, It_123.
template <typename Scalar>
std::vector<std::pair<std::string, Scalar>> flatten14(const InvariantSignature<Scalar>& sig) {
  if (sig.k != 3) throw std::invalid_argument("flatten14: defined for k = 3 only");
  std::vector<std::pair<std::string, Scalar>> out;
  static constexpr std::array<std::array<int, 2>, 6> pairs = {
      {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
  for (auto [i, j] : pairs)
    out.emplace_back("I_" + std::to_string(i + 1) + std::to_string(j + 1), sig.quad_primal(i, j));
  for (auto [i, j] : pairs)
    out.emplace_back("It_" + std::to_string(i + 1) + std::to_string(j + 1), sig.quad_dual(i, j));
  out.emplace_back("I_123", sig.cubic_primal[0]);
  out.emplace_back("It_123", sig.cubic_dual[0]);
  return out;
}

/// Per-invariant comparison of two twist triples.  Matching signatures are a
/// necessary condition for adjoint equivalence, not a proven sufficient one.
struct EquivalenceEntry {
  std::string name;
  double lhs;
  double rhs;
  double delta;  // relative, floored by the absolute tolerance
};

struct EquivalenceReport {
  bool match = true;
  std::vector<EquivalenceEntry> entries;
};

inline EquivalenceReport equivalent(const std::array<Twist<double>, 3>& a,
                                    const std::array<Twist<double>, 3>& b, double tol = 1e-9,
                                    double abs_floor = 1e-12) {
  const auto fa = flatten14(signature(a));
  const auto fb = flatten14(signature(b));
  EquivalenceReport report;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    const double x = fa[i].second, y = fb[i].second;
    EquivalenceEntry e{fa[i].first, x, y, rel_delta(x, y)};
    if (!rel_close(x, y, tol, abs_floor)) report.match = false;
    report.entries.push_back(std::move(e));
  }
  return report;
}

/// Analytic Jacobian of the 12 quadratic invariants (rows ordered
/// I_11,I_12,I_13,I_22,I_23,I_33 then the duals) with respect to the 18
/// coordinates (w1, v1, w2, v2, w3, v3).
inline Eigen::Matrix<double, 12, 18> quadratic_jacobian(const std::array<Twist<double>, 3>& s) {
  Eigen::Matrix<double, 12, 18> jac = Eigen::Matrix<double, 12, 18>::Zero();
  static constexpr std::array<std::array<int, 2>, 6> pairs = {
      {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
  auto wcol = [](int i) { return 6 * i; };
  auto vcol = [](int i) { return 6 * i + 3; };
  for (int r = 0; r < 6; ++r) {
    const auto [i, j] = pairs[r];
    // d(w_i.w_j)
    jac.block<1, 3>(r, wcol(i)) += s[j].omega.transpose();
    jac.block<1, 3>(r, wcol(j)) += s[i].omega.transpose();
    // d(w_i.v_j + v_i.w_j)
    jac.block<1, 3>(6 + r, wcol(i)) += s[j].v.transpose();
    jac.block<1, 3>(6 + r, wcol(j)) += s[i].v.transpose();
    jac.block<1, 3>(6 + r, vcol(j)) += s[i].omega.transpose();
    jac.block<1, 3>(6 + r, vcol(i)) += s[j].omega.transpose();
  }
  return jac;
}

/// Forward-difference Jacobian of the same 12 functions.
inline Eigen::Matrix<double, 12, 18> quadratic_jacobian_fd(const std::array<Twist<double>, 3>& s,
                                                           double step = 1e-6) {
  auto values = [](const std::array<Twist<double>, 3>& t) {
    const auto sig = signature(t);
    Eigen::Matrix<double, 12, 1> v;
    static constexpr std::array<std::array<int, 2>, 6> pairs = {
        {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
    for (int r = 0; r < 6; ++r) {
      v(r) = sig.quad_primal(pairs[r][0], pairs[r][1]);
      v(6 + r) = sig.quad_dual(pairs[r][0], pairs[r][1]);
    }
    return v;
  };
  const Eigen::Matrix<double, 12, 1> base = values(s);
  Eigen::Matrix<double, 12, 18> jac;
  for (int c = 0; c < 18; ++c) {
    std::array<Twist<double>, 3> t = s;
    const int twist = c / 6, comp = c % 6;
    if (comp < 3)
      t[twist].omega(comp) += step;
    else
      t[twist].v(comp - 3) += step;
    jac.col(c) = (values(t) - base) / step;
  }
  return jac;
}

/// Number of singular values above the threshold after normalizing each row
/// to unit length.
inline int numerical_rank(Eigen::Matrix<double, 12, 18> jac, double threshold = 1e-6) {
  for (int r = 0; r < jac.rows(); ++r) {
    const double n = jac.row(r).norm();
    if (n > 0.0) jac.row(r) /= n;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > threshold) ++rank;
  return rank;
}

}  // namespace twistinv
