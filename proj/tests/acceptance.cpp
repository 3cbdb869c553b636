// Acceptance suite: every criterion below runs at its stated tolerance and
// prints a single PASS/FAIL line.  The binary exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "twistinv/invariants.hpp"
#include "twistinv/normal_form.hpp"
#include "twistinv/polarize.hpp"
#include "twistinv/reconstruction.hpp"
#include "twistinv/sampling.hpp"

using namespace twistinv;

namespace {

int g_failures = 0;

void criterion(int index, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
              detail.empty() ? "" : " - ", detail.c_str());
  std::fflush(stdout);
}

std::array<Twist<double>, 3> sample_triple(Rng& rng) {
  return {random_twist(rng), random_twist(rng), random_twist(rng)};
}

std::array<Twist<double>, 3> worked_triple() {
  return {Twist<double>{{1, 0, 0}, {1, 0, 0}},
          Twist<double>{{1, 1, 0}, {0, 1, 0}},
          Twist<double>{{1, 1, 1}, {0, 0, 1}}};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

bool signature_entries_close(const std::array<Twist<double>, 3>& a,
                             const std::array<Twist<double>, 3>& b, double tol, double& worst) {
  const auto fa = flatten14(signature(a));
  const auto fb = flatten14(signature(b));
  bool ok = true;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    const double r = floored_rel_delta(fa[i].second, fb[i].second);
    worst = std::max(worst, r);
    if (r > tol) ok = false;
  }
  return ok;
}

// The fourteen evaluation identities of the normal form parameters.
bool parameter_identities_hold(const InvariantSignature<double>& sig, const NormalFormParams& p,
                               double tol, double& worst) {
  const auto& a = p.alpha;
  const auto& b = p.beta;
  const std::array<std::pair<double, double>, 14> identities = {{
      {sig.quad_primal(0, 0), a[0] * a[0]},
      {sig.quad_primal(0, 1), a[0] * a[1]},
      {sig.quad_primal(1, 1), a[1] * a[1] + a[2] * a[2]},
      {sig.quad_primal(0, 2), a[0] * a[3]},
      {sig.quad_primal(2, 2), a[3] * a[3] + a[4] * a[4] + a[5] * a[5]},
      {sig.quad_primal(1, 2), a[1] * a[3] + a[2] * a[4]},
      {sig.quad_dual(0, 0), 2 * a[0] * b[0]},
      {sig.quad_dual(0, 1), a[0] * b[1] + b[0] * a[1]},
      {sig.quad_dual(1, 1), 2 * a[1] * b[1] + 2 * a[2] * b[2]},
      {sig.quad_dual(0, 2), a[0] * b[3] + b[0] * a[3]},
      {sig.quad_dual(2, 2), 2 * a[3] * b[3] + 2 * a[4] * b[4] + 2 * a[5] * b[5]},
      {sig.quad_dual(1, 2), a[1] * b[3] + a[2] * b[4] + a[3] * b[1] + a[4] * b[2]},
      {sig.cubic_primal[0], a[0] * a[2] * a[5]},
      {sig.cubic_dual[0], b[0] * a[2] * a[5] + a[0] * b[2] * a[5] + a[0] * a[2] * b[5]},
  }};
  bool ok = true;
  for (const auto& [lhs, rhs] : identities) {
    const double r = floored_rel_delta(lhs, rhs);
    worst = std::max(worst, r);
    if (r > tol) ok = false;
  }
  return ok;
}

void criterion_1_adjoint_invariance() {
  criterion(1, "adjoint invariance of the 14 invariants (1000 samples, 1e-9)",
            [](std::string& detail) {
              const auto start = std::chrono::steady_clock::now();
              const Rng master(10001);
              double worst = 0.0;
              bool ok = true;
              for (int trial = 0; trial < 1000; ++trial) {
                Rng rng = master.derive(static_cast<std::uint64_t>(trial));
                const auto g = random_motion(rng);
                const auto triple = sample_triple(rng);
                std::array<Twist<double>, 3> mapped;
                for (int i = 0; i < 3; ++i) mapped[i] = adjoint_apply(g, triple[i]);
                ok = signature_entries_close(triple, mapped, 1e-9, worst) && ok;
              }
              const double seconds =
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
              detail = "worst residual " + fmt(worst) + ", " + fmt(seconds) + " s";
              return ok && seconds < 5.0;
            });
}

void criterion_2_symbolic_syzygies() {
  criterion(2, "symbolic expansion of both syzygies is the zero polynomial",
            [](std::string& detail) {
              const auto start = std::chrono::steady_clock::now();
              const auto report = verify_syzygy_symbolic();
              const double seconds =
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
              detail = std::to_string(report.expanded_terms) + " expanded terms, " + fmt(seconds) +
                       " s";
              if (!report.ok())
                detail += ", residual leading terms: " + report.primal_residual_leading + " / " +
                          report.dual_residual_leading + " / " + report.printed_residual_leading;
              return report.ok() && seconds < 60.0;
            });
}

void criterion_3_dualization() {
  criterion(
      3, "polarized generators: invariance (200 matrices) and 50 exact point matches",
      [](std::string& detail) {
        std::vector<DualPoly> gens;
        for (const auto& g : so3_generators(3)) gens.push_back(dualize(g));

        double worst = 0.0;
        bool ok = true;
        const Rng master(10003);
        for (int trial = 0; trial < 200; ++trial) {
          Rng rng = master.derive(static_cast<std::uint64_t>(trial));
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
          for (const auto& g : gens) {
            const double r =
                std::max(floored_rel_delta(g.primal.evaluate_double(x), g.primal.evaluate_double(mx)),
                         floored_rel_delta(g.dual.evaluate_double(x), g.dual.evaluate_double(mx)));
            worst = std::max(worst, r);
            if (r > 1e-9) ok = false;
          }
        }

        int mismatches = 0;
        Rng rng(10004);
        for (int point_index = 0; point_index < 50; ++point_index) {
          std::array<Twist<Rational>, 3> triple{random_rational_twist(rng),
                                                random_rational_twist(rng),
                                                random_rational_twist(rng)};
          std::vector<Rational> point;
          for (const auto& s : triple) {
            for (int c = 0; c < 3; ++c) point.push_back(s.omega(c));
            for (int c = 0; c < 3; ++c) point.push_back(s.v(c));
          }
          const auto sig = signature(triple);
          int gi = 0;
          for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j, ++gi) {
              if (gens[static_cast<std::size_t>(gi)].primal.evaluate(point) != sig.quad_primal(i, j))
                ++mismatches;
              if (gens[static_cast<std::size_t>(gi)].dual.evaluate(point) != sig.quad_dual(i, j))
                ++mismatches;
            }
          if (gens[6].primal.evaluate(point) != sig.cubic_primal[0]) ++mismatches;
          if (gens[6].dual.evaluate(point) != sig.cubic_dual[0]) ++mismatches;
        }
        detail = "worst residual " + fmt(worst) + ", exact mismatches " +
                 std::to_string(mismatches);
        return ok && mismatches == 0;
      });
}

void criterion_4_homomorphism() {
  criterion(4, "dual mapping is an algebra homomorphism (50 exact product identities)",
            [](std::string& detail) {
              const auto gens = so3_generators(3);
              Rng rng(10005);
              int failures = 0;
              for (int trial = 0; trial < 50; ++trial) {
                auto pick_product = [&]() {
                  auto p = gens[static_cast<std::size_t>(
                      rng.uniform_int(0, static_cast<long>(gens.size()) - 1))];
                  if (rng.uniform_int(0, 1) == 1)
                    p = p * gens[static_cast<std::size_t>(
                            rng.uniform_int(0, static_cast<long>(gens.size()) - 1))];
                  return p;
                };
                const auto f = pick_product();
                const auto g = pick_product();
                if (!(dualize(f * g) == dual_product(dualize(f), dualize(g)))) ++failures;
              }
              detail = std::to_string(failures) + " of 50 identities failed";
              return failures == 0;
            });
}

void criterion_5_jacobian_rank() {
  criterion(5, "quadratic-invariant Jacobian has numerical rank 12 (20 generic triples)",
            [](std::string& detail) {
              const Rng master(10007);
              double smallest = 1.0;
              bool ok = true;
              for (int trial = 0; trial < 20; ++trial) {
                Rng rng = master.derive(static_cast<std::uint64_t>(trial));
                const auto triple = sample_triple(rng);
                for (const auto jac :
                     {quadratic_jacobian(triple), quadratic_jacobian_fd(triple)}) {
                  Eigen::Matrix<double, 12, 18> rows = jac;
                  for (int r = 0; r < rows.rows(); ++r) {
                    const double n = rows.row(r).norm();
                    if (n > 0.0) rows.row(r) /= n;
                  }
                  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows);
                  const double sv12 = svd.singularValues()(11);
                  smallest = std::min(smallest, sv12);
                  if (numerical_rank(jac) != 12 || !(sv12 > 1e-6)) ok = false;
                }
              }
              detail = "smallest 12th singular value " + fmt(smallest);
              return ok;
            });
}

void criterion_6_normal_form() {
  criterion(
      6, "normal form: 500 generic + 2x50 degenerate reductions",
      [](std::string& detail) {
        double worst_pattern = 0.0, worst_sig = 0.0, worst_ident = 0.0;
        bool ok = true;
        const Rng master(10009);
        auto run_case = [&](const std::array<Twist<double>, 3>& triple,
                            NormalFormBranch expected) {
          const auto nf = normalize_triple(triple);
          if (nf.branch != expected) ok = false;
          worst_pattern = std::max(worst_pattern, nf.pattern_residual());
          if (!(nf.pattern_residual() < 1e-10)) ok = false;
          ok = signature_entries_close(triple, nf.transformed, 1e-9, worst_sig) && ok;
          ok = parameter_identities_hold(signature(triple), nf.params, 1e-9, worst_ident) && ok;
        };
        for (int trial = 0; trial < 500; ++trial) {
          Rng rng = master.derive(static_cast<std::uint64_t>(trial));
          run_case(sample_triple(rng), NormalFormBranch::GENERIC);
        }
        for (int trial = 0; trial < 50; ++trial) {
          Rng rng = master.derive(static_cast<std::uint64_t>(10000 + trial));
          auto triple = sample_triple(rng);
          triple[0].omega.setZero();
          if (triple[0].v.norm() < 0.1) triple[0].v = Vec3<double>(0.4, -0.8, 0.2);
          run_case(triple, NormalFormBranch::OMEGA1_ZERO);
        }
        for (int trial = 0; trial < 50; ++trial) {
          Rng rng = master.derive(static_cast<std::uint64_t>(20000 + trial));
          auto triple = sample_triple(rng);
          triple[1].omega = rng.uniform(-2.0, 2.0) * triple[0].omega;
          run_case(triple, NormalFormBranch::DEPENDENT_OMEGA12);
        }
        detail = "worst pattern " + fmt(worst_pattern) + ", signature " + fmt(worst_sig) +
                 ", identities " + fmt(worst_ident);
        return ok;
      });
}

void criterion_7_rational_generation() {
  criterion(
      7, "rational generation: even + odd suites (100 trials each) and the 13-generator reduction",
      [](std::string& detail) {
        const auto even = verify_even_generation(100, 10011);
        const auto odd = verify_odd_generation(100, 10012);

        double worst13 = 0.0;
        bool ok13 = true;
        const Rng master(10013);
        for (int trial = 0; trial < 100; ++trial) {
          Rng rng = master.derive(static_cast<std::uint64_t>(trial));
          std::array<Twist<double>, 3> triple;
          InvariantSignature<double> sig;
          // keep clear of the I_123 = 0 locus where the reduction degenerates
          do {
            triple = sample_triple(rng);
            sig = signature(triple);
          } while (std::abs(sig.cubic_primal[0]) < 1e-2);
          const double r = floored_rel_delta(itilde123_from_13(sig), sig.cubic_dual[0]);
          worst13 = std::max(worst13, r);
          if (r > 1e-8) ok13 = false;
        }
        detail = "even worst " + fmt(even.worst_residual) + ", odd worst " +
                 fmt(odd.worst_residual) + ", reduction worst " + fmt(worst13);
        return even.ok() && odd.ok() && ok13;
      });
}

void criterion_8_even_odd() {
  criterion(
      8, "even/odd split of all 14 generators and parity under 200 improper motions",
      [](std::string& detail) {
        const auto gens = generator_evaluators();
        double worst = 0.0;
        bool ok = true;
        const Rng master(10015);
        // recovery: quadratics split to (f, 0), cubics to (0, f)
        for (int trial = 0; trial < 50; ++trial) {
          Rng rng = master.derive(static_cast<std::uint64_t>(trial));
          const auto x = sample_triple(rng);
          for (const auto& gen : gens) {
            const auto parts = decompose_even_odd(gen.fn);
            const double fx = gen.fn(x);
            const double even_part = parts.even(x), odd_part = parts.odd(x);
            const double expect_even = gen.even ? fx : 0.0;
            const double expect_odd = gen.even ? 0.0 : fx;
            const double r = std::max(floored_rel_delta(even_part, expect_even),
                                      floored_rel_delta(odd_part, expect_odd));
            worst = std::max(worst, r);
            if (r > 1e-9) ok = false;
          }
        }
        // parity transformation under improper motions
        for (int trial = 0; trial < 200; ++trial) {
          Rng rng = master.derive(static_cast<std::uint64_t>(1000 + trial));
          const auto g = random_motion(rng, -1);
          const auto x = sample_triple(rng);
          std::array<Twist<double>, 3> gx;
          for (int i = 0; i < 3; ++i) gx[i] = adjoint_apply(g, x[i]);
          for (const auto& gen : gens) {
            const auto parts = decompose_even_odd(gen.fn);
            const double r = std::max(floored_rel_delta(parts.even(gx), parts.even(x)),
                                      floored_rel_delta(parts.odd(gx), -parts.odd(x)));
            worst = std::max(worst, r);
            if (r > 1e-9) ok = false;
          }
        }
        detail = "worst residual " + fmt(worst);
        return ok;
      });
}

void criterion_9_worked_triple() {
  criterion(9, "worked-triple regression (exact signature and zero residuals)",
            [](std::string& detail) {
              const auto sig = signature(worked_triple());
              const double expected_qp[3][3] = {{1, 1, 1}, {1, 2, 2}, {1, 2, 3}};
              const double expected_qd[3][3] = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
              bool ok = true;
              for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                  if (sig.quad_primal(i, j) != expected_qp[i][j]) ok = false;
                  if (sig.quad_dual(i, j) != expected_qd[i][j]) ok = false;
                }
              if (sig.cubic_primal[0] != 1.0 || sig.cubic_dual[0] != 3.0) ok = false;
              const auto [r1, r2] = syzygy_residuals(sig);
              if (std::abs(r1) > 1e-12 || std::abs(r2) > 1e-12) ok = false;
              detail = "syzygy residuals " + fmt(r1) + ", " + fmt(r2);
              return ok;
            });
}

}  // namespace

int main() {
  criterion_1_adjoint_invariance();
  criterion_2_symbolic_syzygies();
  criterion_3_dualization();
  criterion_4_homomorphism();
  criterion_5_jacobian_rank();
  criterion_6_normal_form();
  criterion_7_rational_generation();
  criterion_8_even_odd();
  criterion_9_worked_triple();
  std::printf("acceptance: %d/9 criteria passed\n", 9 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
