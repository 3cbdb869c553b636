#pragma once

/// Twists (elements of se(3) in Pluecker coordinates), Euclidean motions with
/// explicit parity, the adjoint action, pitch/axis geometry, and the
/// isomorphism phi between dual-orthogonal matrices and proper motions.

#include <concepts>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "twistinv/dual.hpp"
#include "twistinv/types.hpp"

namespace twistinv {

/// Pluecker pair (omega, v): angular and linear parts of a twist.
template <typename Scalar>
struct Twist {
  Vec3<Scalar> omega = Vec3<Scalar>::Zero();
  Vec3<Scalar> v = Vec3<Scalar>::Zero();

  Twist() = default;
  Twist(Vec3<Scalar> w, Vec3<Scalar> lin) : omega(std::move(w)), v(std::move(lin)) {}

  bool is_zero() const { return omega == Vec3<Scalar>::Zero() && v == Vec3<Scalar>::Zero(); }

  friend Twist operator+(const Twist& a, const Twist& b) { return {a.omega + b.omega, a.v + b.v}; }
  friend Twist operator-(const Twist& a, const Twist& b) { return {a.omega - b.omega, a.v - b.v}; }
  friend Twist operator*(const Scalar& c, const Twist& s) { return {c * s.omega, c * s.v}; }
  Twist operator-() const { return {-omega, -v}; }
  friend bool operator==(const Twist& a, const Twist& b) { return a.omega == b.omega && a.v == b.v; }
};

/// Rotation-translation pair (A, a); parity = det A distinguishes proper
/// (+1) from improper (-1) isometries.
template <typename Scalar>
struct EuclideanMotion {
  Mat3<Scalar> rotation = Mat3<Scalar>::Identity();
  Vec3<Scalar> translation = Vec3<Scalar>::Zero();
  int parity = +1;

  static EuclideanMotion identity() { return {}; }

  /// Orthogonality and determinant consistency of the stored rotation.
  bool is_valid(const Scalar& tol = default_tolerance<Scalar>()) const {
    if (parity != 1 && parity != -1) return false;
    const Mat3<Scalar> gram = rotation * rotation.transpose();
    return max_abs((gram - Mat3<Scalar>::Identity()).eval()) <= tol &&
           abs_value(rotation.determinant() - Scalar(parity)) <= tol;
  }
};

template <typename Scalar>
Mat3<Scalar> hat(const Vec3<Scalar>& w) {
  Mat3<Scalar> s;
  s << Scalar(0), -w(2), w(1),
       w(2), Scalar(0), -w(0),
       -w(1), w(0), Scalar(0);
  return s;
}

/// Inverse of hat(); rejects inputs that are not skew-symmetric.
template <typename Scalar>
Vec3<Scalar> vee(const Mat3<Scalar>& s, const Scalar& tol = skew_tolerance<Scalar>()) {
  const Scalar residual = max_abs((s + s.transpose()).eval());
  if (residual > tol) {
    std::ostringstream os;
    os << "vee: matrix is not skew-symmetric (symmetry residual " << residual << ")";
    throw std::invalid_argument(os.str());
  }
  return Vec3<Scalar>(s(2, 1), s(0, 2), s(1, 0));
}

/// Adjoint action of (A, a): s = (omega, v) -> (A omega, a x (A omega) + A v).
template <typename Scalar>
Twist<Scalar> adjoint_apply(const EuclideanMotion<Scalar>& g, const Twist<Scalar>& s) {
  const Vec3<Scalar> rw = g.rotation * s.omega;
  return {rw, g.translation.cross(rw) + g.rotation * s.v};
}

/// The 6x6 matrix of the adjoint action, in the block form [[A, 0], [TA, A]].
template <typename Scalar>
Mat6<Scalar> adjoint_matrix(const EuclideanMotion<Scalar>& g) {
  Mat6<Scalar> m = Mat6<Scalar>::Zero();
  m.template topLeftCorner<3, 3>() = g.rotation;
  m.template bottomRightCorner<3, 3>() = g.rotation;
  m.template bottomLeftCorner<3, 3>() = hat(g.translation) * g.rotation;
  return m;
}

/// Group law of the partitioned adjoint forms: the 6x6 matrices
/// [[A, 0], [TA, A]] are closed under products, with the skew parts
/// combining as hat(a) + A hat(b) A^t = hat(a + det(A) A b).  For proper
/// motions this is the usual semi-direct product; improper rotations
/// conjugate translations with the extra parity sign.
template <typename Scalar>
EuclideanMotion<Scalar> compose(const EuclideanMotion<Scalar>& g, const EuclideanMotion<Scalar>& h) {
  return {g.rotation * h.rotation,
          Vec3<Scalar>(Scalar(g.parity) * (g.rotation * h.translation) + g.translation),
          g.parity * h.parity};
}

template <typename Scalar>
EuclideanMotion<Scalar> inverse(const EuclideanMotion<Scalar>& g) {
  const Mat3<Scalar> rt = g.rotation.transpose();
  return {rt, Vec3<Scalar>(Scalar(-g.parity) * (rt * g.translation)), g.parity};
}

/// Pitch omega.v / omega.omega; empty optional encodes infinite pitch
/// (omega = 0).  The zero twist has no pitch.
template <typename Scalar>
std::optional<Scalar> pitch(const Twist<Scalar>& s) {
  if (s.is_zero()) throw std::invalid_argument("pitch: zero twist");
  if (s.omega == Vec3<Scalar>::Zero()) return std::nullopt;
  return s.omega.dot(s.v) / s.omega.dot(s.omega);
}

/// Axis of the helical motion generated by a twist: unit direction, a point
/// on the axis, and the pitch.  Infinite pitch (pure translation) reports the
/// normalized linear part as direction and the origin as point.
template <std::floating_point Scalar>
struct ScrewAxis {
  Vec3<Scalar> direction;
  Vec3<Scalar> point;
  std::optional<Scalar> pitch;
};

template <std::floating_point Scalar>
ScrewAxis<Scalar> screw_axis(const Twist<Scalar>& s) {
  if (s.is_zero()) throw std::invalid_argument("screw_axis: zero twist");
  if (s.omega == Vec3<Scalar>::Zero())
    return {s.v.normalized(), Vec3<Scalar>::Zero(), std::nullopt};
  const Scalar ww = s.omega.dot(s.omega);
  return {s.omega.normalized(), Vec3<Scalar>(s.v.cross(s.omega) / ww), s.omega.dot(s.v) / ww};
}

/// Lie bracket on se(3): the dual vector product
/// (w1 x w2, w1 x v2 + v1 x w2).
template <typename Scalar>
Twist<Scalar> lie_bracket(const Twist<Scalar>& a, const Twist<Scalar>& b) {
  return {a.omega.cross(b.omega), a.omega.cross(b.v) + a.v.cross(b.omega)};
}

/// The 6x6 matrix of ad(s) = [s, .], block form [[hat w, 0], [hat v, hat w]].
template <typename Scalar>
Mat6<Scalar> ad_matrix(const Twist<Scalar>& s) {
  Mat6<Scalar> m = Mat6<Scalar>::Zero();
  m.template topLeftCorner<3, 3>() = hat(s.omega);
  m.template bottomRightCorner<3, 3>() = hat(s.omega);
  m.template bottomLeftCorner<3, 3>() = hat(s.v);
  return m;
}

/// Extracts the twist from a matrix in ad_matrix block form.
template <typename Scalar>
Twist<Scalar> twist_from_ad_matrix(const Mat6<Scalar>& m, const Scalar& tol = skew_tolerance<Scalar>()) {
  return {vee(Mat3<Scalar>(m.template topLeftCorner<3, 3>()), tol),
          vee(Mat3<Scalar>(m.template bottomLeftCorner<3, 3>()), tol)};
}

template <typename Scalar>
DualVector3<Scalar> to_dual(const Twist<Scalar>& s) {
  return {s.omega, s.v};
}

template <typename Scalar>
Twist<Scalar> from_dual(const DualVector3<Scalar>& u) {
  return {u.primal, u.dual};
}

/// phi: dual-orthogonal A0 + eps A1  ->  (A0, vee(A1 A0^t)).  A group
/// isomorphism onto the proper motions.
template <typename Scalar>
EuclideanMotion<Scalar> phi(const DualMatrix3<Scalar>& m, const Scalar& tol = default_tolerance<Scalar>()) {
  const auto residuals = check_dual_orthogonal(m);
  if (!residuals.within(tol))
    throw std::domain_error("phi: matrix is not dual-orthogonal (" + residuals.describe() + ")");
  const Mat3<Scalar> t = m.dual * m.primal.transpose();
  // Skewness already established above; accept its numerical residual.
  const Vec3<Scalar> a(t(2, 1), t(0, 2), t(1, 0));
  return {m.primal, a, +1};
}

template <typename Scalar>
DualMatrix3<Scalar> phi_inverse(const EuclideanMotion<Scalar>& g) {
  if (g.parity != +1)
    throw std::domain_error("phi_inverse: improper motion has no dual-orthogonal preimage");
  return {g.rotation, hat(g.translation) * g.rotation};
}

}  // namespace twistinv
