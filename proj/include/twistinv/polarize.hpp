#pragma once

/// Dualization of polynomials in the angular variables: f is sent to the
/// dual pair (f, sum_r v_r df/dw_r).  The map is an algebra homomorphism
/// into dual pairs under dual_product, which is what turns orthogonal-group
/// identities into Euclidean ones.

#include <vector>

#include "twistinv/poly.hpp"
#include "twistinv/types.hpp"

namespace twistinv {

/// (primal, dual) polynomial pair; the image of the dual mapping.
struct DualPoly {
  MultiPoly primal;
  MultiPoly dual;

  friend DualPoly operator+(const DualPoly& p, const DualPoly& q) {
    return {p.primal + q.primal, p.dual + q.dual};
  }
  friend DualPoly operator-(const DualPoly& p, const DualPoly& q) {
    return {p.primal - q.primal, p.dual - q.dual};
  }
  friend bool operator==(const DualPoly& p, const DualPoly& q) {
    return p.primal == q.primal && p.dual == q.dual;
  }
};

/// Partial polarization of a polynomial in angular variables only.
/// Throws if f involves any linear variable.
DualPoly dualize(const MultiPoly& f);

/// (p0, p1)(q0, q1) = (p0 q0, p0 q1 + p1 q0).
DualPoly dual_product(const DualPoly& p, const DualPoly& q);

/// Quadratic generator w_i . w_j over the twist table (indices 0-based).
MultiPoly quadratic_generator(const VarTablePtr& vars, int i, int j);
/// Cubic generator det[w_i w_j w_l].
MultiPoly cubic_generator(const VarTablePtr& vars, int i, int j, int l);
/// Dual cubic invariant as a polynomial: the cyclic sum of single-column
/// replacements det[w_i w_j v_l] + det[w_j w_l v_i] + det[w_l w_i v_j].
MultiPoly dual_cubic_polynomial(const VarTablePtr& vars, int i, int j, int l);

/// Generating invariants of the k-fold standard action of the rotation
/// group: all w_i . w_j for i <= j, then all det[w_i w_j w_l] for i < j < l.
std::vector<MultiPoly> so3_generators(int k);

/// Outcome of expanding both syzygies in exact arithmetic.  A residual that
/// fails to vanish is reported by its leading term.
struct SyzygyReport {
  bool primal_zero = false;
  bool dual_zero = false;
  bool printed_dual_zero = false;  // the explicit twelve-term expansion
  std::string primal_residual_leading;
  std::string dual_residual_leading;
  std::string printed_residual_leading;
  std::size_t expanded_terms = 0;

  bool ok() const { return primal_zero && dual_zero && printed_dual_zero; }
};

/// Expands I_123^2 - det(I_ij) over the 9 angular variables and the dual
/// companion identity over all 18 variables, and checks both reduce to the
/// zero polynomial.
SyzygyReport verify_syzygy_symbolic();

/// Per-sample result of the gradient-direction check for rotation
/// invariants: at every nonzero point, grad f must be parallel to the point,
/// i.e. grad f x w = 0 exactly.
struct GradientParallelReport {
  struct Sample {
    Vec3<Rational> point;
    Vec3<Rational> cross;
    bool parallel;
  };
  std::vector<Sample> samples;
  int failures = 0;

  bool ok() const { return failures == 0; }
};

/// f must be a polynomial in the angular variables of a single twist.
GradientParallelReport gradient_parallel_check(const MultiPoly& f,
                                               std::span<const Vec3<Rational>> points);

}  // namespace twistinv
