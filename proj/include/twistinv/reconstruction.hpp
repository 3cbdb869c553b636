#pragma once

/// Rational reconstruction of normal-form monomials from the invariants.
/// Even monomials (the 34 quadratic products of normal-form parameters) come
/// from the 12 quadratic invariants alone; odd monomials take one factor
/// from each parameter group and need I_123 as well.  Every formula is
/// validated against the normal-form oracle by the verification suites.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twistinv/invariants.hpp"
#include "twistinv/normal_form.hpp"
#include "twistinv/sampling.hpp"

namespace twistinv {

/// Normal-form parameters a1..a6, b1..b6 as symbols.
enum class Param : int { A1, A2, A3, A4, A5, A6, B1, B2, B3, B4, B5, B6 };

const char* to_string(Param p);
double param_value(const NormalFormParams& params, Param p);

/// The three parameter groups singled out by the improper sign flips.
inline constexpr std::array<Param, 6> kGroup1 = {Param::A1, Param::A2, Param::A4,
                                                 Param::B1, Param::B2, Param::B4};
inline constexpr std::array<Param, 4> kGroup2 = {Param::A3, Param::A5, Param::B3, Param::B5};
inline constexpr std::array<Param, 2> kGroup3 = {Param::A6, Param::B6};

/// The 34 quadratic monomials spanned by products within the groups.
const std::vector<std::pair<Param, Param>>& quadratic_monomials();

/// Values of the quadratic monomials, plus the cubic monomials
/// t1*t2*t3 with one factor per group.  Either reconstructed from a
/// signature or evaluated directly on normal-form parameters.
class MonomialTable {
 public:
  /// Reconstruction from the invariants; requires I_11 > 0 and
  /// I_11 I_22 - I_12^2 > 0 and throws naming the vanishing denominator.
  static MonomialTable from_invariants(const InvariantSignature<double>& sig);
  /// Direct products of parameters (the oracle side).
  static MonomialTable from_params(const NormalFormParams& params);

  /// Value of the monomial x*y; the pair must be one of the 34.
  double quad(Param x, Param y) const;
  /// Value of t1*t2*t3 with t1 in group 1, t2 in group 2, t3 in group 3.
  /// Reconstruction additionally requires I_123 != 0.
  double cubic(Param t1, Param t2, Param t3) const;

 private:
  MonomialTable() = default;
  int quad_slot(Param x, Param y) const;

  std::array<double, 34> quad_{};
  // group-wise seed products used by the cubic formula
  std::array<double, 6> alpha1_times_{};   // a1 * (each group-1 parameter)
  std::array<double, 4> alpha3_times_{};   // a3 * (each group-2 parameter)
  std::array<double, 2> alpha6_times_{};   // a6 * (each group-3 parameter)
  std::optional<double> b6b6_;             // needs det(I_ij) != 0 when reconstructed
  double cubic_scale_ = 0.0;               // I_123 / det(I_ij), or 1/(a1 a3 a6) on params
  bool cubic_available_ = false;
  std::string cubic_error_;
};

/// It_123 recovered from the other 13 generators through the dual syzygy;
/// requires I_123 != 0.
double itilde123_from_13(const InvariantSignature<double>& sig);

struct GenerationReport {
  int trials = 0;
  int failures = 0;
  double worst_residual = 0.0;
  std::vector<std::string> notes;

  bool ok() const { return failures == 0; }
};

/// Random even polynomials in the 34 monomials: direct evaluation on
/// normal-form parameters vs. reconstruction from the 12 quadratic
/// invariants of the *untransformed* triple, at 1e-8 relative.
GenerationReport verify_even_generation(int trials, std::uint64_t seed);

/// Random odd monomials t1 t2 t3 * M' reconstructed from the 12 quadratics
/// plus I_123, same comparison.
GenerationReport verify_odd_generation(int trials, std::uint64_t seed);

using TripleInvariant = std::function<double(const std::array<Twist<double>, 3>&)>;

struct EvenOddParts {
  TripleInvariant even;
  TripleInvariant odd;
};

/// Splits an adjoint-invariant f into even and odd parts using the point
/// reflection: f'(x) = f(-x) on all 18 coordinates, f_E = (f + f')/2,
/// f_O = (f - f')/2.
EvenOddParts decompose_even_odd(TripleInvariant f);

/// The fourteen generators as evaluators, with their parity under improper
/// motions (quadratics even, cubics odd).
struct NamedInvariant {
  std::string name;
  bool even;
  TripleInvariant fn;
};
std::vector<NamedInvariant> generator_evaluators();

}  // namespace twistinv
