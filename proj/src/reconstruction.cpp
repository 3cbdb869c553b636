#include "twistinv/reconstruction.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace twistinv {

const char* to_string(Param p) {
  static constexpr std::array<const char*, 12> names = {"a1", "a2", "a3", "a4", "a5", "a6",
                                                        "b1", "b2", "b3", "b4", "b5", "b6"};
  return names[static_cast<std::size_t>(p)];
}

double param_value(const NormalFormParams& params, Param p) {
  const int i = static_cast<int>(p);
  return i < 6 ? params.alpha[static_cast<std::size_t>(i)]
               : params.beta[static_cast<std::size_t>(i - 6)];
}

namespace {

std::pair<Param, Param> ordered(Param x, Param y) {
  return static_cast<int>(x) <= static_cast<int>(y) ? std::pair{x, y} : std::pair{y, x};
}

template <std::size_t N>
int position(const std::array<Param, N>& group, Param p) {
  for (std::size_t i = 0; i < N; ++i)
    if (group[i] == p) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<Param, Param>> build_monomials() {
  std::vector<std::pair<Param, Param>> m;
  for (std::size_t i = 0; i < kGroup3.size(); ++i)
    for (std::size_t j = i; j < kGroup3.size(); ++j) m.push_back(ordered(kGroup3[i], kGroup3[j]));
  for (std::size_t i = 0; i < kGroup2.size(); ++i)
    for (std::size_t j = i; j < kGroup2.size(); ++j) m.push_back(ordered(kGroup2[i], kGroup2[j]));
  for (std::size_t i = 0; i < kGroup1.size(); ++i)
    for (std::size_t j = i; j < kGroup1.size(); ++j) m.push_back(ordered(kGroup1[i], kGroup1[j]));
  return m;
}

}  // namespace

const std::vector<std::pair<Param, Param>>& quadratic_monomials() {
  static const std::vector<std::pair<Param, Param>> monomials = build_monomials();
  return monomials;
}

int MonomialTable::quad_slot(Param x, Param y) const {
  const auto key = ordered(x, y);
  const auto& all = quadratic_monomials();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == key) return static_cast<int>(i);
  std::ostringstream os;
  os << "MonomialTable: " << to_string(x) << "*" << to_string(y)
     << " is not one of the 34 quadratic monomials";
  throw std::invalid_argument(os.str());
}

double MonomialTable::quad(Param x, Param y) const {
  const int slot = quad_slot(x, y);
  if (ordered(x, y) == ordered(Param::B6, Param::B6) && !b6b6_)
    throw std::domain_error(
        "MonomialTable: b6^2 is not reconstructible here (det(I_ij) vanishes, i.e. I_123 = 0)");
  return quad_[static_cast<std::size_t>(slot)];
}

double MonomialTable::cubic(Param t1, Param t2, Param t3) const {
  const int p1 = position(kGroup1, t1);
  const int p2 = position(kGroup2, t2);
  const int p3 = position(kGroup3, t3);
  if (p1 < 0 || p2 < 0 || p3 < 0)
    throw std::invalid_argument("MonomialTable::cubic: factors must come one from each group");
  if (!cubic_available_) throw std::domain_error(cubic_error_);
  return alpha1_times_[static_cast<std::size_t>(p1)] *
         alpha3_times_[static_cast<std::size_t>(p2)] *
         alpha6_times_[static_cast<std::size_t>(p3)] * cubic_scale_;
}

MonomialTable MonomialTable::from_params(const NormalFormParams& params) {
  MonomialTable t;
  const auto& all = quadratic_monomials();
  for (std::size_t i = 0; i < all.size(); ++i)
    t.quad_[i] = param_value(params, all[i].first) * param_value(params, all[i].second);
  t.b6b6_ = t.quad_[t.quad_slot(Param::B6, Param::B6)];
  const double a1 = params.alpha[0], a3 = params.alpha[2], a6 = params.alpha[5];
  for (std::size_t i = 0; i < kGroup1.size(); ++i)
    t.alpha1_times_[i] = a1 * param_value(params, kGroup1[i]);
  for (std::size_t i = 0; i < kGroup2.size(); ++i)
    t.alpha3_times_[i] = a3 * param_value(params, kGroup2[i]);
  for (std::size_t i = 0; i < kGroup3.size(); ++i)
    t.alpha6_times_[i] = a6 * param_value(params, kGroup3[i]);
  const double denom = a1 * a3 * a6;
  if (denom != 0.0) {
    t.cubic_scale_ = 1.0 / denom;
    t.cubic_available_ = true;
  } else {
    t.cubic_error_ = "MonomialTable::cubic: a1 a3 a6 = 0 on these parameters";
  }
  return t;
}

MonomialTable MonomialTable::from_invariants(const InvariantSignature<double>& sig) {
  if (sig.k != 3) throw std::invalid_argument("MonomialTable: signature must have k = 3");
  const auto& q = sig.quad_primal;
  const auto& d = sig.quad_dual;
  const double i11 = q(0, 0), i12 = q(0, 1), i13 = q(0, 2);
  const double i22 = q(1, 1), i23 = q(1, 2), i33 = q(2, 2);
  const double t11 = d(0, 0), t12 = d(0, 1), t13 = d(0, 2);
  const double t22 = d(1, 1), t23 = d(1, 2);

  double scale = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) scale = std::max({scale, std::abs(q(i, j)), std::abs(d(i, j))});
  const double den_tol = 1e-12 * scale * scale;

  const double gram2 = i11 * i22 - i12 * i12;
  if (!(i11 > den_tol))
    throw std::domain_error("MonomialTable: genericity violated, I_11 vanishes");
  if (!(gram2 > den_tol))
    throw std::domain_error("MonomialTable: genericity violated, I_11 I_22 - I_12^2 vanishes");

  MonomialTable t;

  // Group-1 seeds a1*theta; every group-1 product is then
  // (a1 x)(a1 y)/I_11.
  std::array<double, 6> seed{};
  seed[position(kGroup1, Param::A1)] = i11;
  seed[position(kGroup1, Param::A2)] = i12;
  seed[position(kGroup1, Param::A4)] = i13;
  seed[position(kGroup1, Param::B1)] = t11 / 2.0;
  seed[position(kGroup1, Param::B2)] = t12 - i12 * t11 / (2.0 * i11);
  seed[position(kGroup1, Param::B4)] = t13 - i13 * t11 / (2.0 * i11);
  auto group1 = [&](Param x, Param y) {
    return seed[static_cast<std::size_t>(position(kGroup1, x))] *
           seed[static_cast<std::size_t>(position(kGroup1, y))] / i11;
  };

  // Group 2, solved in triangular order with denominators I_11 and the
  // 2x2 Gram minor only.
  const double a33 = gram2 / i11;
  const double e = i11 * i23 - i12 * i13;
  const double a35 = e / i11;
  const double a55 = e * e / (i11 * gram2);
  const double a3b3 = t22 / 2.0 - group1(Param::A2, Param::B2);
  const double a5b3 = a35 * a3b3 / a33;
  const double a3b5 = (t23 - group1(Param::A2, Param::B4) - group1(Param::A4, Param::B2)) - a5b3;
  const double b3b3 = a3b3 * a3b3 / a33;
  const double b5b5 = a3b5 * a3b5 / a33;
  const double b3b5 = a3b3 * a3b5 / a33;
  const double a5b5 = a35 * a3b5 / a33;

  // Group 3 via the full Gram determinant (equal to I_123^2) and the
  // quotient-rule companion; b6^2 exists only off the I_123 = 0 locus.
  const double det_gram = i11 * i22 * i33 - i11 * i23 * i23 + 2.0 * i12 * i13 * i23 -
                          i12 * i12 * i33 - i13 * i13 * i22;
  const double a66 = det_gram / gram2;
  const double dual_gram = dual_gram_expansion(sig.quad_primal, sig.quad_dual);
  const double gram2_dual = t11 * i22 + i11 * t22 - 2.0 * i12 * t12;
  const double a6b6 = (dual_gram * gram2 - det_gram * gram2_dual) / (2.0 * gram2 * gram2);

  auto put = [&](Param x, Param y, double value) {
    t.quad_[static_cast<std::size_t>(t.quad_slot(x, y))] = value;
  };
  for (std::size_t i = 0; i < kGroup1.size(); ++i)
    for (std::size_t j = i; j < kGroup1.size(); ++j)
      put(kGroup1[i], kGroup1[j], group1(kGroup1[i], kGroup1[j]));
  put(Param::A3, Param::A3, a33);
  put(Param::A5, Param::A5, a55);
  put(Param::A3, Param::A5, a35);
  put(Param::B3, Param::B3, b3b3);
  put(Param::B5, Param::B5, b5b5);
  put(Param::B3, Param::B5, b3b5);
  put(Param::A5, Param::B5, a5b5);
  put(Param::A3, Param::B3, a3b3);
  put(Param::A3, Param::B5, a3b5);
  put(Param::A5, Param::B3, a5b3);
  put(Param::A6, Param::A6, a66);
  put(Param::A6, Param::B6, a6b6);
  const double det_tol = den_tol * scale;  // degree-3 denominator
  if (std::abs(det_gram) > det_tol) {
    put(Param::B6, Param::B6, a6b6 * a6b6 / a66);
    t.b6b6_ = a6b6 * a6b6 / a66;
  } else {
    put(Param::B6, Param::B6, 0.0);
    t.b6b6_.reset();
  }

  // Cubic monomials t1 t2 t3 = (a1 t1)(a3 t2)(a6 t3) * I_123 / det(I_ij).
  for (std::size_t i = 0; i < kGroup1.size(); ++i) t.alpha1_times_[i] = seed[i];
  t.alpha3_times_ = {a33, a35, a3b3, a3b5};
  t.alpha6_times_ = {a66, a6b6};
  const double i123 = sig.cubic_primal[0];
  if (std::abs(i123) * std::abs(i123) > det_tol && std::abs(det_gram) > det_tol) {
    t.cubic_scale_ = i123 / det_gram;
    t.cubic_available_ = true;
  } else {
    t.cubic_error_ = "MonomialTable::cubic: genericity violated, I_123 vanishes";
  }
  return t;
}

double itilde123_from_13(const InvariantSignature<double>& sig) {
  if (sig.k != 3) throw std::invalid_argument("itilde123_from_13: signature must have k = 3");
  const double i123 = sig.cubic_primal[0];
  double scale = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      scale = std::max({scale, std::abs(sig.quad_primal(i, j)), std::abs(sig.quad_dual(i, j))});
  if (std::abs(i123) <= 1e-12 * scale * std::sqrt(std::max(scale, 0.0)))
    throw std::domain_error("itilde123_from_13: I_123 vanishes");
  return dual_gram_expansion(sig.quad_primal, sig.quad_dual) / (2.0 * i123);
}

namespace {

std::array<Twist<double>, 3> sample_triple(Rng& rng) {
  return {random_twist(rng), random_twist(rng), random_twist(rng)};
}

// Generic triple with comfortable margins on every reconstruction
// denominator, so user-chosen seeds cannot land on the degenerate locus.
std::array<Twist<double>, 3> sample_generic_triple(Rng& rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    auto triple = sample_triple(rng);
    const auto sig = signature(triple);
    const auto& q = sig.quad_primal;
    const double gram2 = q(0, 0) * q(1, 1) - q(0, 1) * q(0, 1);
    if (q(0, 0) > 1e-2 && gram2 > 1e-3 && std::abs(sig.cubic_primal[0]) > 1e-2) return triple;
  }
  throw std::runtime_error("sample_generic_triple: could not find a well-conditioned sample");
}

struct TwoPathComparison {
  double direct;
  double reconstructed;
  double scale;  // sum of term magnitudes on the direct side

  double residual() const {
    const double s = std::max({scale, std::abs(direct), std::abs(reconstructed), 1e-9});
    return std::abs(direct - reconstructed) / s;
  }
};

}  // namespace

GenerationReport verify_even_generation(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_even_generation: trials must be >= 1");
  GenerationReport report;
  report.trials = trials;
  const Rng master(seed);
  const auto& monomials = quadratic_monomials();
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = master.derive(static_cast<std::uint64_t>(trial));
    const auto triple = sample_generic_triple(rng);
    const auto nf = normalize_triple(triple);
    const auto oracle = MonomialTable::from_params(nf.params);
    const auto recon = MonomialTable::from_invariants(signature(triple));

    // random even polynomial: sum of products of quadratic monomials
    TwoPathComparison cmp{0.0, 0.0, 0.0};
    const long terms = rng.uniform_int(1, 3);
    for (long t = 0; t < terms; ++t) {
      const double coef = rng.uniform(-1.0, 1.0);
      double direct = coef, rec = coef;
      const long factors = rng.uniform_int(1, 3);
      for (long f = 0; f < factors; ++f) {
        const auto& m = monomials[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<long>(monomials.size()) - 1))];
        direct *= oracle.quad(m.first, m.second);
        rec *= recon.quad(m.first, m.second);
      }
      cmp.direct += direct;
      cmp.reconstructed += rec;
      cmp.scale += std::abs(direct);
    }
    const double residual = cmp.residual();
    report.worst_residual = std::max(report.worst_residual, residual);
    if (residual > 1e-8) {
      ++report.failures;
      std::ostringstream os;
      os << "trial " << trial << ": direct=" << cmp.direct
         << " reconstructed=" << cmp.reconstructed << " residual=" << residual;
      report.notes.push_back(os.str());
    }
  }
  return report;
}

GenerationReport verify_odd_generation(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_odd_generation: trials must be >= 1");
  GenerationReport report;
  report.trials = trials;
  const Rng master(seed);
  const auto& monomials = quadratic_monomials();
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = master.derive(static_cast<std::uint64_t>(trial));
    const auto triple = sample_generic_triple(rng);
    const auto nf = normalize_triple(triple);
    const auto oracle = MonomialTable::from_params(nf.params);
    const auto recon = MonomialTable::from_invariants(signature(triple));

    const Param t1 = kGroup1[static_cast<std::size_t>(rng.uniform_int(0, 5))];
    const Param t2 = kGroup2[static_cast<std::size_t>(rng.uniform_int(0, 3))];
    const Param t3 = kGroup3[static_cast<std::size_t>(rng.uniform_int(0, 1))];
    double direct = oracle.cubic(t1, t2, t3);
    double rec = recon.cubic(t1, t2, t3);
    const long factors = rng.uniform_int(0, 2);
    for (long f = 0; f < factors; ++f) {
      const auto& m = monomials[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<long>(monomials.size()) - 1))];
      direct *= oracle.quad(m.first, m.second);
      rec *= recon.quad(m.first, m.second);
    }
    const TwoPathComparison cmp{direct, rec, std::abs(direct)};
    const double residual = cmp.residual();
    report.worst_residual = std::max(report.worst_residual, residual);
    if (residual > 1e-8) {
      ++report.failures;
      std::ostringstream os;
      os << "trial " << trial << ": " << to_string(t1) << "*" << to_string(t2) << "*"
         << to_string(t3) << " direct=" << direct << " reconstructed=" << rec
         << " residual=" << residual;
      report.notes.push_back(os.str());
    }
  }
  return report;
}

EvenOddParts decompose_even_odd(TripleInvariant f) {
  auto reflect = [](const std::array<Twist<double>, 3>& x) {
    std::array<Twist<double>, 3> y;
    for (int i = 0; i < 3; ++i) y[i] = -x[i];
    return y;
  };
  auto even = [f, reflect](const std::array<Twist<double>, 3>& x) {
    return 0.5 * (f(x) + f(reflect(x)));
  };
  auto odd = [f, reflect](const std::array<Twist<double>, 3>& x) {
    return 0.5 * (f(x) - f(reflect(x)));
  };
  return {even, odd};
}

std::vector<NamedInvariant> generator_evaluators() {
  std::vector<NamedInvariant> out;
  static constexpr std::array<std::array<int, 2>, 6> pairs = {
      {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
  for (auto [i, j] : pairs) {
    out.push_back({"I_" + std::to_string(i + 1) + std::to_string(j + 1), true,
                   [i = i, j = j](const std::array<Twist<double>, 3>& s) {
                     return signature(s).quad_primal(i, j);
                   }});
  }
  for (auto [i, j] : pairs) {
    out.push_back({"It_" + std::to_string(i + 1) + std::to_string(j + 1), true,
                   [i = i, j = j](const std::array<Twist<double>, 3>& s) {
                     return signature(s).quad_dual(i, j);
                   }});
  }
  out.push_back({"I_123", false, [](const std::array<Twist<double>, 3>& s) {
                   return signature(s).cubic_primal[0];
                 }});
  out.push_back({"It_123", false, [](const std::array<Twist<double>, 3>& s) {
                   return signature(s).cubic_dual[0];
                 }});
  return out;
}

}  // namespace twistinv
