#pragma once

/// Dual-number ring D = { a + eps*b : eps^2 = 0 } and its modules D^3 and
/// D^3x3.  The primal part is `a`, the dual part `b`.  D has zero divisors:
/// a dual scalar is invertible iff its primal part is nonzero.
///
/// All values are immutable carriers; every operation is a pure function.

#include <sstream>
#include <stdexcept>

#include "twistinv/types.hpp"

namespace twistinv {

template <typename Scalar>
struct DualScalar {
  Scalar primal{};
  Scalar dual{};

  DualScalar() = default;
  DualScalar(Scalar p, Scalar d) : primal(std::move(p)), dual(std::move(d)) {}

  friend DualScalar operator+(const DualScalar& x, const DualScalar& y) {
    return {x.primal + y.primal, x.dual + y.dual};
  }
  friend DualScalar operator-(const DualScalar& x, const DualScalar& y) {
    return {x.primal - y.primal, x.dual - y.dual};
  }
  DualScalar operator-() const { return {-primal, -dual}; }

  // (a + eps b)(c + eps d) = ac + eps(ad + bc)
  friend DualScalar operator*(const DualScalar& x, const DualScalar& y) {
    return {x.primal * y.primal, x.primal * y.dual + x.dual * y.primal};
  }

  friend bool operator==(const DualScalar& x, const DualScalar& y) {
    return x.primal == y.primal && x.dual == y.dual;
  }
  friend bool operator!=(const DualScalar& x, const DualScalar& y) { return !(x == y); }
};

/// Inverse of a + eps b is 1/a - eps b/a^2; fails loudly on primal part zero.
template <typename Scalar>
DualScalar<Scalar> inverse(const DualScalar<Scalar>& x) {
  if (x.primal == Scalar(0))
    throw std::domain_error("DualScalar: not invertible (primal part is zero)");
  const Scalar inv = Scalar(1) / x.primal;
  return {inv, -x.dual * inv * inv};
}

template <typename Scalar>
DualScalar<Scalar> operator/(const DualScalar<Scalar>& x, const DualScalar<Scalar>& y) {
  return x * inverse(y);
}

template <typename Scalar>
struct DualVector3 {
  Vec3<Scalar> primal = Vec3<Scalar>::Zero();
  Vec3<Scalar> dual = Vec3<Scalar>::Zero();

  DualVector3() = default;
  DualVector3(Vec3<Scalar> p, Vec3<Scalar> d) : primal(std::move(p)), dual(std::move(d)) {}

  friend DualVector3 operator+(const DualVector3& u, const DualVector3& w) {
    return {u.primal + w.primal, u.dual + w.dual};
  }
  friend DualVector3 operator-(const DualVector3& u, const DualVector3& w) {
    return {u.primal - w.primal, u.dual - w.dual};
  }
  DualVector3 operator-() const { return {-primal, -dual}; }

  friend DualVector3 operator*(const DualScalar<Scalar>& s, const DualVector3& u) {
    return {s.primal * u.primal, s.primal * u.dual + s.dual * u.primal};
  }

  friend bool operator==(const DualVector3& u, const DualVector3& w) {
    return u.primal == w.primal && u.dual == w.dual;
  }
};

template <typename Scalar>
DualScalar<Scalar> dual_dot(const DualVector3<Scalar>& u, const DualVector3<Scalar>& w) {
  return {u.primal.dot(w.primal), u.primal.dot(w.dual) + u.dual.dot(w.primal)};
}

template <typename Scalar>
DualVector3<Scalar> dual_cross(const DualVector3<Scalar>& u, const DualVector3<Scalar>& w) {
  return {u.primal.cross(w.primal), u.primal.cross(w.dual) + u.dual.cross(w.primal)};
}

template <typename Scalar>
struct DualMatrix3 {
  Mat3<Scalar> primal = Mat3<Scalar>::Zero();
  Mat3<Scalar> dual = Mat3<Scalar>::Zero();

  DualMatrix3() = default;
  DualMatrix3(Mat3<Scalar> p, Mat3<Scalar> d) : primal(std::move(p)), dual(std::move(d)) {}

  static DualMatrix3 identity() { return {Mat3<Scalar>::Identity(), Mat3<Scalar>::Zero()}; }

  friend DualMatrix3 operator+(const DualMatrix3& a, const DualMatrix3& b) {
    return {a.primal + b.primal, a.dual + b.dual};
  }
  // (A0 + eps A1)(B0 + eps B1) = A0 B0 + eps(A0 B1 + A1 B0)
  friend DualMatrix3 operator*(const DualMatrix3& a, const DualMatrix3& b) {
    return {a.primal * b.primal, a.primal * b.dual + a.dual * b.primal};
  }
  friend DualVector3<Scalar> operator*(const DualMatrix3& a, const DualVector3<Scalar>& u) {
    return {a.primal * u.primal, a.primal * u.dual + a.dual * u.primal};
  }

  friend bool operator==(const DualMatrix3& a, const DualMatrix3& b) {
    return a.primal == b.primal && a.dual == b.dual;
  }
};

/// Determinant of a dual 3x3 matrix, expanded by columns: the dual part is
/// the sum over columns of det with that one column replaced by its dual.
template <typename Scalar>
DualScalar<Scalar> dual_det3(const DualMatrix3<Scalar>& m) {
  const Scalar p = m.primal.determinant();
  Scalar d(0);
  for (int c = 0; c < 3; ++c) {
    Mat3<Scalar> repl = m.primal;
    repl.col(c) = m.dual.col(c);
    d += repl.determinant();
  }
  return {p, d};
}

/// Residuals of the three dual-orthogonality conditions: A0 A0^t = I,
/// A1 A0^t skew-symmetric, det A0 = 1.  All entrywise max-norm.
template <typename Scalar>
struct DualOrthogonality {
  Scalar orthogonality_residual;
  Scalar skewness_residual;
  Scalar determinant_residual;

  bool within(const Scalar& tol) const {
    return orthogonality_residual <= tol && skewness_residual <= tol &&
           determinant_residual <= tol;
  }
  std::string describe() const {
    std::ostringstream os;
    os << "orthogonality=" << orthogonality_residual << " skewness=" << skewness_residual
       << " determinant=" << determinant_residual;
    return os.str();
  }
};

template <typename Scalar>
DualOrthogonality<Scalar> check_dual_orthogonal(const DualMatrix3<Scalar>& m) {
  const Mat3<Scalar> gram = m.primal * m.primal.transpose();
  const Mat3<Scalar> s = m.dual * m.primal.transpose();
  return {max_abs((gram - Mat3<Scalar>::Identity()).eval()),
          max_abs((s + s.transpose()).eval()),
          abs_value(m.primal.determinant() - Scalar(1))};
}

template <typename Scalar>
bool is_dual_orthogonal(const DualMatrix3<Scalar>& m, const Scalar& tol = default_tolerance<Scalar>()) {
  if (tol < Scalar(0)) throw std::invalid_argument("is_dual_orthogonal: negative tolerance");
  return check_dual_orthogonal(m).within(tol);
}

}  // namespace twistinv
