#include "twistinv/normal_form.hpp"

#include <cmath>
#include <stdexcept>

namespace twistinv {

namespace {

// Orthonormal rows completing e1; the second row is picked from the
// coordinate axis least aligned with e1.
Mat3<double> frame_rows_from_first(const Vec3<double>& e1) {
  int c = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(e1(i)) < std::abs(e1(c))) c = i;
  Vec3<double> u = Vec3<double>::Zero();
  u(c) = 1.0;
  const Vec3<double> e2 = (u - u.dot(e1) * e1).normalized();
  const Vec3<double> e3 = e1.cross(e2);
  Mat3<double> r;
  r.row(0) = e1.transpose();
  r.row(1) = e2.transpose();
  r.row(2) = e3.transpose();
  return r;
}

// Rotation about the x1-axis sending target's (y, z) part to (|..|, 0);
// identity when that part vanishes.
Mat3<double> roll_to_plane(const Vec3<double>& target) {
  const double y = target(1), z = target(2);
  const double r = std::hypot(y, z);
  Mat3<double> rx = Mat3<double>::Identity();
  if (r == 0.0) return rx;
  const double c = y / r, s = -z / r;
  rx(1, 1) = c;
  rx(1, 2) = -s;
  rx(2, 1) = s;
  rx(2, 2) = c;
  return rx;
}

Mat3<double> rows_from_pair(const Vec3<double>& first, const Vec3<double>& second_hint) {
  const Vec3<double> e1 = first.normalized();
  const Vec3<double> perp = second_hint - second_hint.dot(e1) * e1;
  if (perp.norm() == 0.0) return frame_rows_from_first(e1);
  const Vec3<double> e2 = perp.normalized();
  const Vec3<double> e3 = e1.cross(e2);
  Mat3<double> r;
  r.row(0) = e1.transpose();
  r.row(1) = e2.transpose();
  r.row(2) = e3.transpose();
  return r;
}

NormalFormParams read_params(const std::array<Twist<double>, 3>& t) {
  NormalFormParams p;
  p.alpha = {t[0].omega(0), t[1].omega(0), t[1].omega(1),
             t[2].omega(0), t[2].omega(1), t[2].omega(2)};
  p.beta = {t[0].v(0), t[1].v(0), t[1].v(1), t[2].v(0), t[2].v(1), t[2].v(2)};
  return p;
}

}  // namespace

NormalFormResult normalize_triple(const std::array<Twist<double>, 3>& twists,
                                  const NormalFormOptions& options) {
  const Twist<double>& s1 = twists[0];
  const Twist<double>& s2 = twists[1];
  if (s1.is_zero()) throw std::invalid_argument("normalize_triple: first twist is zero");

  const double n1 = s1.omega.norm();
  const double n2 = s2.omega.norm();

  NormalFormResult result;
  Mat3<double> rot;
  Vec3<double> t = Vec3<double>::Zero();

  if (n1 == 0.0) {
    result.branch = NormalFormBranch::OMEGA1_ZERO;
    // v1 != 0 here; align it with the x1-axis, then spend the roll freedom
    // on the second twist.
    const Mat3<double> r0 = frame_rows_from_first(s1.v.normalized());
    const Vec3<double> w2 = r0 * s2.omega;
    if (w2.tail<2>().norm() > 0.0) {
      rot = roll_to_plane(w2) * r0;
      const double a3 = (rot * s2.omega)(1);
      const double u23 = (rot * s2.v)(2);
      // v2_z' = t1 a3 - t2 a2 + u23 with t2 = 0
      t(0) = -u23 / a3;
    } else {
      const double a2 = w2(0);
      if (a2 != 0.0) {
        rot = r0;
        // v2_z' = -t2 a2 + u23; v1 is untouched by the translation
        t(1) = (r0 * s2.v)(2) / a2;
      } else {
        // w2 = 0: roll v2 into the plane instead
        rot = roll_to_plane(r0 * s2.v) * r0;
      }
    }
  } else if (n2 > 0.0 && s1.omega.cross(s2.omega).norm() > options.dependence_tol * n1 * n2) {
    result.branch = NormalFormBranch::GENERIC;
    rot = rows_from_pair(s1.omega, s2.omega);
    const double a1 = n1;
    const Vec3<double> w2 = rot * s2.omega;
    const Vec3<double> u1 = rot * s1.v;
    const Vec3<double> u2 = rot * s2.v;
    // zero v1_y', v1_z', then v2_z'
    t(1) = u1(2) / a1;
    t(2) = -u1(1) / a1;
    t(0) = (t(1) * w2(0) - u2(2)) / w2(1);
  } else {
    result.branch = NormalFormBranch::DEPENDENT_OMEGA12;
    // w2 = c w1; zeroing v1_z' fixes t2, so v2_z' vanishes iff the roll puts
    // d = v2 - c v1 into the x1x2-plane.
    const double c = s2.omega.dot(s1.omega) / s1.omega.dot(s1.omega);
    const Vec3<double> d = s2.v - c * s1.v;
    const Mat3<double> r0 = frame_rows_from_first(s1.omega.normalized());
    rot = roll_to_plane(r0 * d) * r0;
    const double a1 = n1;
    const Vec3<double> u1 = rot * s1.v;
    t(1) = u1(2) / a1;
    t(2) = -u1(1) / a1;
  }

  result.motion = {rot, t, +1};
  for (int i = 0; i < 3; ++i) result.transformed[i] = adjoint_apply(result.motion, twists[i]);
  result.params = read_params(result.transformed);
  return result;
}

std::array<Twist<double>, 3> params_to_twists(const NormalFormParams& p, NormalFormBranch branch) {
  const auto& a = p.alpha;
  const auto& b = p.beta;
  switch (branch) {
    case NormalFormBranch::GENERIC:
      if (!(a[0] > 0.0) || !(a[2] > 0.0))
        throw std::invalid_argument(
            "params_to_twists: generic branch requires alpha1 > 0 and alpha3 > 0");
      break;
    case NormalFormBranch::OMEGA1_ZERO:
      if (a[0] != 0.0)
        throw std::invalid_argument("params_to_twists: OMEGA1_ZERO branch requires alpha1 = 0");
      break;
    case NormalFormBranch::DEPENDENT_OMEGA12:
      if (a[2] != 0.0)
        throw std::invalid_argument(
            "params_to_twists: DEPENDENT_OMEGA12 branch requires alpha3 = 0");
      break;
  }
  return {Twist<double>{{a[0], 0, 0}, {b[0], 0, 0}},
          Twist<double>{{a[1], a[2], 0}, {b[1], b[2], 0}},
          Twist<double>{{a[3], a[4], a[5]}, {b[3], b[4], b[5]}}};
}

}  // namespace twistinv
