#pragma once

/// Reduction of a twist triple to the canonical sparsity pattern
///   s1' = (a1, 0, 0 | b1, 0, 0)
///   s2' = (a2, a3, 0 | b2, b3, 0)
///   s3' = (a4, a5, a6 | b4, b5, b6)
/// by an explicit proper motion.  The generic branch needs w1, w2 linearly
/// independent; the two degenerate branches cover w1 = 0 and w2 in span(w1).

#include <array>
#include <string>

#include "twistinv/invariants.hpp"
#include "twistinv/screw.hpp"

namespace twistinv {

enum class NormalFormBranch { GENERIC, OMEGA1_ZERO, DEPENDENT_OMEGA12 };

inline const char* to_string(NormalFormBranch b) {
  switch (b) {
    case NormalFormBranch::GENERIC: return "GENERIC";
    case NormalFormBranch::OMEGA1_ZERO: return "OMEGA1_ZERO";
    case NormalFormBranch::DEPENDENT_OMEGA12: return "DEPENDENT_OMEGA12";
  }
  return "?";
}

struct NormalFormParams {
  std::array<double, 6> alpha{};
  std::array<double, 6> beta{};
};

struct NormalFormResult {
  EuclideanMotion<double> motion;  // parity +1
  NormalFormParams params;
  NormalFormBranch branch = NormalFormBranch::GENERIC;
  std::array<Twist<double>, 3> transformed;

  /// Largest magnitude among the six pattern slots that must vanish.
  double pattern_residual() const {
    double r = 0.0;
    r = std::max(r, std::abs(transformed[0].omega(1)));
    r = std::max(r, std::abs(transformed[0].omega(2)));
    r = std::max(r, std::abs(transformed[0].v(1)));
    r = std::max(r, std::abs(transformed[0].v(2)));
    r = std::max(r, std::abs(transformed[1].omega(2)));
    r = std::max(r, std::abs(transformed[1].v(2)));
    return r;
  }
};

struct NormalFormOptions {
  /// |w1 x w2| > dependence_tol * |w1| |w2| selects the generic branch.
  double dependence_tol = 1e-10;
};

NormalFormResult normalize_triple(const std::array<Twist<double>, 3>& twists,
                                  const NormalFormOptions& options = {});

/// Rebuilds the patterned triple from parameters.  The generic branch
/// enforces the sign convention a1 > 0, a3 > 0; the degenerate branches
/// enforce their structural zeros (a1 = 0, resp. a3 = 0).
std::array<Twist<double>, 3> params_to_twists(const NormalFormParams& params,
                                              NormalFormBranch branch);

}  // namespace twistinv
