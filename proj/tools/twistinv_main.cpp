// Command-line front end: signatures, equivalence checks, normal forms, and
// the seeded verification suites.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "twistinv/io.hpp"
#include "twistinv/normal_form.hpp"
#include "twistinv/selftest.hpp"

namespace {

using namespace twistinv;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string num(double x) {
  if (x == 0.0) x = 0.0;  // fold -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double default_tolerance_from_env() {
  if (const char* env = std::getenv("TWISTINV_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
    std::cerr << "warning: ignoring invalid TWISTINV_TOL value '" << env << "'\n";
  }
  return 1e-9;
}

void print_signature_table(const TwistFileDocument& doc) {
  const auto sig = signature(doc.twists);
  const int k = sig.k;
  if (doc.label) std::cout << "label: " << *doc.label << "\n";
  std::cout << "k = " << k << "\n";
  std::cout << "quadratic invariants (primal | dual):\n";
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      std::cout << "  I_" << i + 1 << j + 1 << " = " << num(sig.quad_primal(i, j)) << "   It_"
                << i + 1 << j + 1 << " = " << num(sig.quad_dual(i, j)) << "\n";
  if (!sig.cubic_index.empty()) std::cout << "cubic invariants:\n";
  for (std::size_t t = 0; t < sig.cubic_index.size(); ++t) {
    const auto [i, j, l] = sig.cubic_index[t];
    std::cout << "  I_" << i + 1 << j + 1 << l + 1 << " = " << num(sig.cubic_primal[t])
              << "   It_" << i + 1 << j + 1 << l + 1 << " = " << num(sig.cubic_dual[t]) << "\n";
  }
  std::cout << "pitches:\n";
  for (std::size_t i = 0; i < doc.twists.size(); ++i) {
    std::cout << "  twist " << i + 1 << ": ";
    if (doc.twists[i].is_zero())
      std::cout << "undefined (zero twist)\n";
    else if (auto p = pitch(doc.twists[i]))
      std::cout << num(*p) << "\n";
    else
      std::cout << "inf\n";
  }
  if (k == 3) {
    const auto [r1, r2] = syzygy_residuals(sig);
    std::cout << "syzygy residuals: " << num(r1) << " " << num(r2) << "\n";
  }
}

int cmd_signature(const std::string& path, bool as_json) {
  const auto doc = read_twist_file(path);
  if (as_json)
    std::cout << signature_json(doc).dump(2) << "\n";
  else
    print_signature_table(doc);
  return kExitOk;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b, double tol) {
  const auto doc_a = read_twist_file(path_a);
  const auto doc_b = read_twist_file(path_b);
  if (doc_a.twists.size() != 3 || doc_b.twists.size() != 3) {
    std::cerr << "equiv: both files must contain exactly 3 twists (got "
              << doc_a.twists.size() << " and " << doc_b.twists.size() << ")\n";
    return kExitUsage;
  }
  const std::array<Twist<double>, 3> a{doc_a.twists[0], doc_a.twists[1], doc_a.twists[2]};
  const std::array<Twist<double>, 3> b{doc_b.twists[0], doc_b.twists[1], doc_b.twists[2]};
  const auto report = equivalent(a, b, tol);
  std::cout << "invariant        lhs              rhs              rel-delta\n";
  for (const auto& e : report.entries) {
    char line[128];
    std::snprintf(line, sizeof(line), "%-8s %16s %16s   %.3e", e.name.c_str(), num(e.lhs).c_str(),
                  num(e.rhs).c_str(), e.delta);
    std::cout << line << "\n";
  }
  std::cout << "tolerance: " << num(tol) << " (relative, absolute floor 1e-12)\n";
  std::cout << (report.match ? "MATCH" : "MISMATCH")
            << " - matching signatures are a necessary condition for adjoint equivalence, "
               "not a proven sufficient one\n";
  return report.match ? kExitOk : kExitMismatch;
}

int cmd_normalform(const std::string& path) {
  const auto doc = read_twist_file(path);
  if (doc.twists.size() != 3) {
    std::cerr << "normalform: file must contain exactly 3 twists (got " << doc.twists.size()
              << ")\n";
    return kExitUsage;
  }
  const std::array<Twist<double>, 3> triple{doc.twists[0], doc.twists[1], doc.twists[2]};
  NormalFormResult nf;
  try {
    nf = normalize_triple(triple);
  } catch (const std::invalid_argument& e) {
    std::cerr << "normalform: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << "branch: " << to_string(nf.branch) << "\n";
  std::cout << "rotation:\n";
  for (int i = 0; i < 3; ++i)
    std::cout << "  [" << num(nf.motion.rotation(i, 0)) << ", " << num(nf.motion.rotation(i, 1))
              << ", " << num(nf.motion.rotation(i, 2)) << "]\n";
  std::cout << "translation: [" << num(nf.motion.translation(0)) << ", "
            << num(nf.motion.translation(1)) << ", " << num(nf.motion.translation(2)) << "]\n";
  std::cout << "alpha:";
  for (double a : nf.params.alpha) std::cout << " " << num(a);
  std::cout << "\nbeta: ";
  for (double b : nf.params.beta) std::cout << " " << num(b);
  std::cout << "\npattern residual: " << num(nf.pattern_residual()) << "\n";

  const auto fa = flatten14(signature(triple));
  const auto fb = flatten14(signature(nf.transformed));
  double preservation = 0.0;
  for (std::size_t i = 0; i < fa.size(); ++i)
    preservation = std::max(preservation, rel_delta(fa[i].second, fb[i].second));
  std::cout << "signature preservation residual: " << num(preservation) << "\n";
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed, int trials, const std::string& suite) {
  if (trials < 1) {
    std::cerr << "selftest: trials must be >= 1\n";
    return kExitUsage;
  }
  std::vector<SuiteResult> results;
  try {
    results = run_selftest(suite, seed, trials);
  } catch (const std::invalid_argument& e) {
    std::cerr << "selftest: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << "seed=" << seed << " trials=" << trials << "\n";
  std::cout << format_selftest_report(results);
  for (const auto& r : results)
    if (!r.passed) return kExitMismatch;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adjoint invariants of twist systems"};
  app.require_subcommand(1);

  std::string sig_path;
  bool sig_json = false;
  auto* sig = app.add_subcommand("sig", "print the invariant signature of a twist file");
  sig->add_option("file", sig_path, "twist file (JSON)")->required();
  sig->add_flag("--json", sig_json, "machine-readable output");

  std::string equiv_a, equiv_b;
  double equiv_tol = default_tolerance_from_env();
  auto* equiv = app.add_subcommand("equiv", "compare the signatures of two twist triples");
  equiv->add_option("a", equiv_a, "first twist file")->required();
  equiv->add_option("b", equiv_b, "second twist file")->required();
  equiv->add_option("--tol", equiv_tol, "relative tolerance (default 1e-9 or TWISTINV_TOL)");

  std::string nf_path;
  auto* nf = app.add_subcommand("normalform", "reduce a twist triple to its normal form");
  nf->add_option("file", nf_path, "twist file (JSON)")->required();

  std::uint64_t seed = 42;
  int trials = 100;
  std::string suite = "all";
  auto* selftest = app.add_subcommand("selftest", "run the seeded verification suites");
  selftest->add_option("--seed", seed, "master seed (default 42)");
  selftest->add_option("--trials", trials, "trials per suite (default 100)");
  selftest->add_option("--suite", suite,
                       "all|invariance|syzygy|dualize|normalform|reconstruction|evenodd");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sig->parsed()) return cmd_signature(sig_path, sig_json);
    if (equiv->parsed()) return cmd_equiv(equiv_a, equiv_b, equiv_tol);
    if (nf->parsed()) return cmd_normalform(nf_path);
    if (selftest->parsed()) return cmd_selftest(seed, trials, suite);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
