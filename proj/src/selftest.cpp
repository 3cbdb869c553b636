#include "twistinv/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "twistinv/invariants.hpp"
#include "twistinv/normal_form.hpp"
#include "twistinv/polarize.hpp"
#include "twistinv/reconstruction.hpp"
#include "twistinv/sampling.hpp"

namespace twistinv {

namespace {

std::array<Twist<double>, 3> sample_triple(Rng& rng) {
  return {random_twist(rng), random_twist(rng), random_twist(rng)};
}

SuiteResult run_invariance(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "invariance";
  r.trials = trials;
  const Rng master(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = master.derive(static_cast<std::uint64_t>(trial));
    const auto g = random_motion(rng);
    const auto triple = sample_triple(rng);
    std::array<Twist<double>, 3> mapped;
    for (int i = 0; i < 3; ++i) mapped[i] = adjoint_apply(g, triple[i]);
    const auto fa = flatten14(signature(triple));
    const auto fb = flatten14(signature(mapped));
    bool fail = false;
    for (std::size_t i = 0; i < fa.size(); ++i) {
      const double residual = floored_rel_delta(fa[i].second, fb[i].second);
      r.worst_residual = std::max(r.worst_residual, residual);
      if (residual > 1e-9) fail = true;
    }
    if (fail) ++r.failures;
  }
  r.passed = r.failures == 0;
  r.detail = "all 14 invariants preserved under random proper motions";
  return r;
}

SuiteResult run_syzygy(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "syzygy";
  r.trials = trials;
  const auto symbolic = verify_syzygy_symbolic();
  const Rng master(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = master.derive(static_cast<std::uint64_t>(trial));
    const auto sig = signature(sample_triple(rng));
    const auto [r1, r2] = syzygy_residuals(sig);
    // normalize against the magnitude of the expanded terms
    double scale = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        scale = std::max({scale, std::abs(sig.quad_primal(i, j)), std::abs(sig.quad_dual(i, j))});
    scale = std::max(scale * scale * scale, 1e-9);
    const double residual = std::max(std::abs(r1), std::abs(r2)) / scale;
    r.worst_residual = std::max(r.worst_residual, residual);
    if (residual > 1e-9) ++r.failures;
  }
  if (!symbolic.ok()) ++r.failures;
  r.passed = r.failures == 0;
  r.detail = symbolic.ok() ? "symbolic pair of syzygies expand to zero polynomials"
                           : "symbolic residual nonzero: " + symbolic.dual_residual_leading;
  return r;
}

SuiteResult run_dualize(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "dualize";
  r.trials = trials;
  const auto vars = VarTable::twists(3);
  std::vector<DualPoly> gens;
  for (const auto& g : so3_generators(3)) gens.push_back(dualize(g));

  const Rng master(seed);
  int exact_mismatches = 0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = master.derive(static_cast<std::uint64_t>(trial));

    // exact agreement between the polynomials and the numeric invariants
    std::array<Twist<Rational>, 3> rational_triple{
        random_rational_twist(rng), random_rational_twist(rng), random_rational_twist(rng)};
    std::vector<Rational> point;
    for (const auto& s : rational_triple) {
      for (int c = 0; c < 3; ++c) point.push_back(s.omega(c));
      for (int c = 0; c < 3; ++c) point.push_back(s.v(c));
    }
    const auto rsig = signature(rational_triple);
    int gi = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j, ++gi) {
        if (gens[static_cast<std::size_t>(gi)].primal.evaluate(point) != rsig.quad_primal(i, j))
          ++exact_mismatches;
        if (gens[static_cast<std::size_t>(gi)].dual.evaluate(point) != rsig.quad_dual(i, j))
          ++exact_mismatches;
      }
    if (gens[6].primal.evaluate(point) != rsig.cubic_primal[0]) ++exact_mismatches;
    if (gens[6].dual.evaluate(point) != rsig.cubic_dual[0]) ++exact_mismatches;

    // invariance of the dual pair under a dual-orthogonal matrix
    const auto m = phi_inverse(random_motion(rng));
    const auto triple = sample_triple(rng);
    std::vector<double> x, mx;
    for (const auto& s : triple) {
      const auto u = m * to_dual(s);
      for (int c = 0; c < 3; ++c) x.push_back(s.omega(c));
      for (int c = 0; c < 3; ++c) x.push_back(s.v(c));
      for (int c = 0; c < 3; ++c) mx.push_back(u.primal(c));
      for (int c = 0; c < 3; ++c) mx.push_back(u.dual(c));
    }
    bool fail = false;
    for (const auto& g : gens) {
      const double p0 = g.primal.evaluate_double(x), p1 = g.primal.evaluate_double(mx);
      const double d0 = g.dual.evaluate_double(x), d1 = g.dual.evaluate_double(mx);
      const double residual = std::max(floored_rel_delta(p0, p1), floored_rel_delta(d0, d1));
      r.worst_residual = std::max(r.worst_residual, residual);
      if (residual > 1e-9) fail = true;
    }
    if (fail) ++r.failures;
  }
  r.failures += exact_mismatches;
  r.passed = r.failures == 0;
  r.detail = "polarized generators: exact point agreement and dual-orthogonal invariance";
  return r;
}

SuiteResult run_normalform(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "normalform";
  r.trials = trials;
  const Rng master(seed);
  const int degenerate_every = 10;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = master.derive(static_cast<std::uint64_t>(trial));
    auto triple = sample_triple(rng);
    if (trial % degenerate_every == 1) {
      triple[0].omega.setZero();
      if (triple[0].v.norm() < 0.1) triple[0].v = Vec3<double>(0.5, 0.5, 0.5);
    } else if (trial % degenerate_every == 2) {
      triple[1].omega = rng.uniform(-2.0, 2.0) * triple[0].omega;
    }
    const auto nf = normalize_triple(triple);
    double residual = nf.pattern_residual();
    const auto fa = flatten14(signature(triple));
    const auto fb = flatten14(signature(nf.transformed));
    for (std::size_t i = 0; i < fa.size(); ++i)
      residual = std::max(residual, floored_rel_delta(fa[i].second, fb[i].second));
    r.worst_residual = std::max(r.worst_residual, residual);
    if (residual > 1e-9) ++r.failures;
  }
  r.passed = r.failures == 0;
  r.detail = "pattern reached and signature preserved (incl. degenerate branches)";
  return r;
}

SuiteResult run_reconstruction(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "reconstruction";
  r.trials = trials;
  const auto even = verify_even_generation(trials, seed);
  const auto odd = verify_odd_generation(trials, seed + 1);
  r.failures = even.failures + odd.failures;
  r.worst_residual = std::max(even.worst_residual, odd.worst_residual);
  r.passed = r.failures == 0;
  r.detail = "two-path monomial reconstruction, even and odd";
  return r;
}

SuiteResult run_evenodd(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "evenodd";
  r.trials = trials;
  const auto gens = generator_evaluators();
  const Rng master(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = master.derive(static_cast<std::uint64_t>(trial));
    const auto g = random_motion(rng, -1);
    const auto x = sample_triple(rng);
    std::array<Twist<double>, 3> gx;
    for (int i = 0; i < 3; ++i) gx[i] = adjoint_apply(g, x[i]);
    bool fail = false;
    for (const auto& gen : gens) {
      const double before = gen.fn(x), after = gen.fn(gx);
      const double expected = gen.even ? before : -before;
      const double residual = floored_rel_delta(after, expected);
      r.worst_residual = std::max(r.worst_residual, residual);
      if (residual > 1e-9) fail = true;

      const auto parts = decompose_even_odd(gen.fn);
      const double reassembled = parts.even(x) + parts.odd(x);
      if (!rel_close(reassembled, before, 1e-12)) fail = true;
    }
    if (fail) ++r.failures;
  }
  r.passed = r.failures == 0;
  r.detail = "quadratics even, cubics odd under improper motions; split reassembles";
  return r;
}

}  // namespace

const std::vector<std::string>& selftest_suite_names() {
  static const std::vector<std::string> names = {"invariance",  "syzygy",        "dualize",
                                                 "normalform",  "reconstruction", "evenodd"};
  return names;
}

std::vector<SuiteResult> run_selftest(const std::string& suite, std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("run_selftest: trials must be >= 1");
  auto dispatch = [&](const std::string& name) -> SuiteResult {
    if (name == "invariance") return run_invariance(seed, trials);
    if (name == "syzygy") return run_syzygy(seed, trials);
    if (name == "dualize") return run_dualize(seed, trials);
    if (name == "normalform") return run_normalform(seed, trials);
    if (name == "reconstruction") return run_reconstruction(seed, trials);
    if (name == "evenodd") return run_evenodd(seed, trials);
    throw std::invalid_argument("run_selftest: unknown suite '" + name + "'");
  };
  std::vector<SuiteResult> results;
  if (suite == "all") {
    for (const auto& name : selftest_suite_names()) results.push_back(dispatch(name));
  } else {
    results.push_back(dispatch(suite));
  }
  return results;
}

std::string format_selftest_report(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  bool all_passed = true;
  for (const auto& r : results) {
    char residual[32];
    std::snprintf(residual, sizeof(residual), "%.3e", r.worst_residual);
    os << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " trials=" << r.trials
       << " failures=" << r.failures << " worst_residual=" << residual << "  (" << r.detail
       << ")\n";
    all_passed = all_passed && r.passed;
  }
  os << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace twistinv
