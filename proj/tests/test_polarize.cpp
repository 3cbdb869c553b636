#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "twistinv/invariants.hpp"
#include "twistinv/polarize.hpp"
#include "twistinv/sampling.hpp"

using namespace twistinv;

namespace {

MultiPoly random_omega_poly(const VarTablePtr& vars, Rng& rng) {
  MultiPoly p(vars);
  const long terms = rng.uniform_int(1, 3);
  for (long t = 0; t < terms; ++t) {
    MultiPoly::Exponents e(static_cast<std::size_t>(vars->size()), 0);
    for (int i = 0; i < vars->size(); ++i)
      if (vars->is_omega(i)) e[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform_int(0, 2));
    p.add_term(e, random_rational(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("dualize the killing form") {
  const auto vars = VarTable::twists(1);
  const auto f = quadratic_generator(vars, 0, 0);
  const auto d = dualize(f);
  CHECK(d.primal == f);
  CHECK(d.dual.to_string() == "2*w1_1*v1_1 + 2*w1_2*v1_2 + 2*w1_3*v1_3");

  const auto c = dualize(MultiPoly::constant(vars, Rational(7)));
  CHECK(c.primal == MultiPoly::constant(vars, Rational(7)));
  CHECK(c.dual.is_zero());

  CHECK_THROWS_AS(dualize(MultiPoly::variable(vars, "v1_1")), std::invalid_argument);
}

TEST_CASE("dualize the bracket determinant") {
  const auto vars = VarTable::twists(3);
  const auto d = dualize(cubic_generator(vars, 0, 1, 2));
  // the dual part is the cyclic sum of single-column replacements
  CHECK(d.dual == dual_cubic_polynomial(vars, 0, 1, 2));
}

TEST_CASE("dual part of a dualized polynomial is linear in the linear block") {
  const auto vars = VarTable::twists(2);
  std::vector<int> vblock;
  for (int i = 0; i < vars->size(); ++i)
    if (!vars->is_omega(i)) vblock.push_back(i);
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_omega_poly(vars, rng);
    if (f.total_degree() == 0) continue;
    const auto d = dualize(f);
    CHECK(d.dual.block_degree(vblock) == (d.dual.is_zero() ? 0 : 1));
  }
}

TEST_CASE("dualization is an algebra homomorphism") {
  const auto vars = VarTable::twists(2);
  Rng rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_omega_poly(vars, rng);
    const auto g = random_omega_poly(vars, rng);
    CHECK(dualize(f * g) == dual_product(dualize(f), dualize(g)));
  }
  // unit and square rule
  const auto one = dualize(MultiPoly::constant(vars, Rational(1)));
  const auto f = dualize(quadratic_generator(vars, 0, 1));
  CHECK(dual_product(f, one) == f);
  const auto sq = dual_product(f, f);
  CHECK(sq.dual == MultiPoly::constant(vars, Rational(2)) * f.primal * f.dual);
}

TEST_CASE("generator counts") {
  CHECK(so3_generators(1).size() == 1);
  CHECK(so3_generators(2).size() == 3);
  CHECK(so3_generators(3).size() == 7);
  CHECK(so3_generators(4).size() == 14);  // 10 quadratics + 4 cubics

  const auto k1 = so3_generators(1);
  CHECK(k1[0].to_string() == "1*w1_1^2 + 1*w1_2^2 + 1*w1_3^2");
}

TEST_CASE("symbolic generator values match the numeric invariants exactly") {
  const auto vars = VarTable::twists(3);
  Rng rng(65);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<Twist<Rational>, 3> triple{random_rational_twist(rng), random_rational_twist(rng),
                                          random_rational_twist(rng)};
    std::vector<Rational> point;
    for (const auto& s : triple) {
      for (int c = 0; c < 3; ++c) point.push_back(s.omega(c));
      for (int c = 0; c < 3; ++c) point.push_back(s.v(c));
    }
    const auto sig = signature(triple);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const auto d = dualize(quadratic_generator(vars, i, j));
        CHECK(d.primal.evaluate(point) == sig.quad_primal(i, j));
        CHECK(d.dual.evaluate(point) == sig.quad_dual(i, j));
      }
    const auto dc = dualize(cubic_generator(vars, 0, 1, 2));
    CHECK(dc.primal.evaluate(point) == sig.cubic_primal[0]);
    CHECK(dc.dual.evaluate(point) == sig.cubic_dual[0]);
  }
}

TEST_CASE("dualized generators are invariant under dual-orthogonal matrices") {
  const auto vars = VarTable::twists(3);
  std::vector<DualPoly> gens;
  for (const auto& g : so3_generators(3)) gens.push_back(dualize(g));

  Rng rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    Rng t = rng.derive(trial);
    const auto m = phi_inverse(random_motion(t));
    std::array<Twist<double>, 3> triple{random_twist(t), random_twist(t), random_twist(t)};
    std::vector<double> point, mapped_point;
    for (const auto& s : triple) {
      const auto u = m * to_dual(s);
      for (int c = 0; c < 3; ++c) point.push_back(s.omega(c));
      for (int c = 0; c < 3; ++c) point.push_back(s.v(c));
      for (int c = 0; c < 3; ++c) mapped_point.push_back(u.primal(c));
      // interleaving fixed below: v-block follows the w-block per twist
      for (int c = 0; c < 3; ++c) mapped_point.push_back(u.dual(c));
    }
    for (const auto& g : gens) {
      CHECK(rel_close(g.primal.evaluate_double(point), g.primal.evaluate_double(mapped_point), 1e-9));
      CHECK(rel_close(g.dual.evaluate_double(point), g.dual.evaluate_double(mapped_point), 1e-9));
    }
  }
}

TEST_CASE("primal and dual parts are invariant under the adjoint action") {
  const auto vars = VarTable::twists(3);
  std::vector<DualPoly> gens;
  for (const auto& g : so3_generators(3)) gens.push_back(dualize(g));

  Rng rng(69);
  for (int trial = 0; trial < 200; ++trial) {
    Rng t = rng.derive(trial);
    const auto motion = random_motion(t);
    std::array<Twist<double>, 3> triple{random_twist(t), random_twist(t), random_twist(t)};
    std::vector<double> point, mapped_point;
    for (const auto& s : triple) {
      const auto ms = adjoint_apply(motion, s);
      for (int c = 0; c < 3; ++c) point.push_back(s.omega(c));
      for (int c = 0; c < 3; ++c) point.push_back(s.v(c));
      for (int c = 0; c < 3; ++c) mapped_point.push_back(ms.omega(c));
      for (int c = 0; c < 3; ++c) mapped_point.push_back(ms.v(c));
    }
    for (const auto& g : gens) {
      CHECK(rel_close(g.primal.evaluate_double(point), g.primal.evaluate_double(mapped_point), 1e-9));
      CHECK(rel_close(g.dual.evaluate_double(point), g.dual.evaluate_double(mapped_point), 1e-9));
    }
  }
}

TEST_CASE("rendered generators match the golden file") {
  std::ifstream golden(std::string(TWISTINV_TEST_DATA) + "/generators.golden.txt");
  REQUIRE(golden.good());
  std::ostringstream expected;
  expected << golden.rdbuf();

  const auto gens = so3_generators(3);
  const std::array<const char*, 7> names = {"I_11", "I_12", "I_13", "I_22",
                                            "I_23", "I_33", "I_123"};
  std::ostringstream actual;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto d = dualize(gens[i]);
    actual << names[i] << " = " << d.primal.to_string() << "\n";
    actual << "It" << (names[i] + 1) << " = " << d.dual.to_string() << "\n";
  }
  CHECK(actual.str() == expected.str());
}

TEST_CASE("symbolic syzygy verification") {
  const auto report = verify_syzygy_symbolic();
  CHECK(report.primal_zero);
  CHECK(report.dual_zero);
  CHECK(report.printed_dual_zero);
  CHECK(report.ok());
  CHECK(report.primal_residual_leading == "0");
  CHECK(report.dual_residual_leading == "0");
}

TEST_CASE("a perturbed identity leaves a nonzero residual with a leading term") {
  // sanity of the checker: I_123^2 - det(I_ij) + w1_1^2 is not the zero
  // polynomial and reports its leading term
  const auto vars = VarTable::twists(3);
  const auto cubic = cubic_generator(vars, 0, 1, 2);
  MultiPoly gram[3][3] = {{quadratic_generator(vars, 0, 0), quadratic_generator(vars, 0, 1),
                           quadratic_generator(vars, 0, 2)},
                          {quadratic_generator(vars, 0, 1), quadratic_generator(vars, 1, 1),
                           quadratic_generator(vars, 1, 2)},
                          {quadratic_generator(vars, 0, 2), quadratic_generator(vars, 1, 2),
                           quadratic_generator(vars, 2, 2)}};
  const MultiPoly det_gram =
      gram[0][0] * (gram[1][1] * gram[2][2] - gram[1][2] * gram[2][1]) -
      gram[0][1] * (gram[1][0] * gram[2][2] - gram[1][2] * gram[2][0]) +
      gram[0][2] * (gram[1][0] * gram[2][1] - gram[1][1] * gram[2][0]);
  const auto perturbed = cubic * cubic - det_gram + MultiPoly::variable(vars, "w1_1") *
                                                        MultiPoly::variable(vars, "w1_1");
  CHECK(!perturbed.is_zero());
  CHECK(perturbed.leading_term() != "0");
}

TEST_CASE("gradient of a rotation invariant is parallel to the point") {
  const auto vars = VarTable::twists(1);
  const auto killing = quadratic_generator(vars, 0, 0);

  std::vector<Vec3<Rational>> pts;
  pts.emplace_back(Rational(1), Rational(2), Rational(3));
  Rng rng(71);
  for (int i = 0; i < 20; ++i)
    pts.emplace_back(random_rational(rng), random_rational(rng), random_rational(rng));

  CHECK(gradient_parallel_check(killing, pts).ok());
  CHECK(gradient_parallel_check(killing * killing, pts).ok());  // (w.w)^2, exact

  // negative control: a bare coordinate is not invariant
  std::vector<Vec3<Rational>> e2{Vec3<Rational>(0, 1, 0)};
  const auto bad = gradient_parallel_check(MultiPoly::variable(vars, "w1_1"), e2);
  CHECK(!bad.ok());
  CHECK(bad.failures == 1);
  CHECK(bad.samples[0].cross == Vec3<Rational>(0, 0, 1));

  CHECK_THROWS_AS(gradient_parallel_check(MultiPoly::variable(vars, "v1_1"), pts),
                  std::invalid_argument);
}
