#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistinv/dual.hpp"
#include "twistinv/sampling.hpp"

using namespace twistinv;

namespace {

DualScalar<Rational> random_dual_scalar(Rng& rng) {
  return {random_rational(rng), random_rational(rng)};
}

DualMatrix3<Rational> random_dual_matrix(Rng& rng) {
  Mat3<Rational> p, d;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      p(i, j) = random_rational(rng);
      d(i, j) = random_rational(rng);
    }
  return {p, d};
}

}  // namespace

TEST_CASE("dual scalar multiplication") {
  using D = DualScalar<Rational>;
  // identity and nilpotency
  CHECK(D(1, 0) * D(5, 7) == D(5, 7));
  CHECK(D(0, 1) * D(0, 1) == D(0, 0));
  // (2 + e3)(4 + e5) = 8 + e(10 + 12)
  CHECK(D(2, 3) * D(4, 5) == D(8, 22));
}

TEST_CASE("dual scalar inverse") {
  using D = DualScalar<Rational>;
  const D x(Rational(2), Rational(3));
  const D xi = inverse(x);
  CHECK(xi == D(Rational(1, 2), Rational(-3, 4)));
  CHECK(x * xi == D(1, 0));
  CHECK_THROWS_AS(inverse(D(0, 5)), std::domain_error);

  const DualScalar<double> y(2.0, 3.0);
  CHECK(inverse(y).primal == doctest::Approx(0.5));
  CHECK(inverse(y).dual == doctest::Approx(-0.75));
  CHECK_THROWS_AS(inverse(DualScalar<double>(0.0, 1.0)), std::domain_error);
}

TEST_CASE("dual scalar ring axioms on random rationals") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_dual_scalar(rng);
    const auto b = random_dual_scalar(rng);
    const auto c = random_dual_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("dual dot") {
  using V = DualVector3<Rational>;
  const Vec3<Rational> e1(1, 0, 0), e2(0, 1, 0), zero(0, 0, 0);
  CHECK(dual_dot(V(e1, zero), V(e1, zero)) == DualScalar<Rational>(1, 0));
  CHECK(dual_dot(V(e1, e2), V(e2, e1)) == DualScalar<Rational>(0, 2));

  // (w + ev).(w + ev) = w.w + e 2 w.v
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Vec3<Rational> w(random_rational(rng), random_rational(rng), random_rational(rng));
    Vec3<Rational> v(random_rational(rng), random_rational(rng), random_rational(rng));
    const auto d = dual_dot(V(w, v), V(w, v));
    CHECK(d.primal == w.dot(w));
    CHECK(d.dual == Rational(2) * w.dot(v));
  }
}

TEST_CASE("dual cross") {
  using V = DualVector3<Rational>;
  const Vec3<Rational> e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1), zero(0, 0, 0);
  CHECK(dual_cross(V(e1, zero), V(e2, zero)) == V(e3, zero));
  // antisymmetry: u x u = 0
  const V u(e1, e2);
  CHECK(dual_cross(u, u) == V(zero, zero));
  // (e1 + e e2) x (e2 + e e3): primal e3, dual e1 x e3 + e2 x e2 = -e2
  CHECK(dual_cross(V(e1, e2), V(e2, e3)) == V(e3, Vec3<Rational>(0, -1, 0)));
}

TEST_CASE("primal orthogonality of the dual cross product") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    DualVector3<Rational> u{{random_rational(rng), random_rational(rng), random_rational(rng)},
                            {random_rational(rng), random_rational(rng), random_rational(rng)}};
    DualVector3<Rational> w{{random_rational(rng), random_rational(rng), random_rational(rng)},
                            {random_rational(rng), random_rational(rng), random_rational(rng)}};
    CHECK(dual_dot(u, dual_cross(u, w)).primal == Rational(0));
  }
}

TEST_CASE("dual determinant") {
  using M = DualMatrix3<Rational>;
  CHECK(dual_det3(M::identity()) == DualScalar<Rational>(1, 0));
  // identity columns with identity dual columns: 1 + e3
  CHECK(dual_det3(M{Mat3<Rational>::Identity(), Mat3<Rational>::Identity()}) ==
        DualScalar<Rational>(1, 3));
  // two equal (primal+dual) columns kill the alternating form
  Rng rng(9);
  auto m = random_dual_matrix(rng);
  m.primal.col(2) = m.primal.col(0);
  m.dual.col(2) = m.dual.col(0);
  CHECK(dual_det3(m) == DualScalar<Rational>(0, 0));
}

TEST_CASE("dual determinant is multiplicative") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_dual_matrix(rng);
    const auto b = random_dual_matrix(rng);
    CHECK(dual_det3(a * b) == dual_det3(a) * dual_det3(b));
  }
}

TEST_CASE("dual module axioms on random rationals") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    DualVector3<Rational> u{{random_rational(rng), random_rational(rng), random_rational(rng)},
                            {random_rational(rng), random_rational(rng), random_rational(rng)}};
    DualVector3<Rational> w{{random_rational(rng), random_rational(rng), random_rational(rng)},
                            {random_rational(rng), random_rational(rng), random_rational(rng)}};
    const auto a = random_dual_scalar(rng);
    const auto b = random_dual_scalar(rng);
    CHECK(a * (u + w) == a * u + a * w);
    CHECK((a + b) * u == a * u + b * u);
    CHECK((a * b) * u == a * (b * u));
  }
}

TEST_CASE("dual orthogonality check") {
  using M = DualMatrix3<Rational>;
  const Mat3<Rational> id = Mat3<Rational>::Identity();
  CHECK(is_dual_orthogonal(M{id, Mat3<Rational>::Zero()}));

  Mat3<Rational> skew;
  skew << 0, -3, 2, 3, 0, -1, -2, 1, 0;
  CHECK(is_dual_orthogonal(M{id, skew}));

  // (I, I): the symmetric part of A1 A0^t doubles on the diagonal
  const auto res = check_dual_orthogonal(M{id, id});
  CHECK(!res.within(Rational(0)));
  CHECK(res.skewness_residual == Rational(2));
  CHECK(res.orthogonality_residual == Rational(0));
  CHECK(res.determinant_residual == Rational(0));

  CHECK_THROWS_AS(is_dual_orthogonal(M::identity(), Rational(-1)), std::invalid_argument);
}

TEST_CASE("exactly dual-orthogonal matrices have dual determinant one") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto motion = random_rational_motion(rng);
    const DualMatrix3<Rational> m{motion.rotation, hat(motion.translation) * motion.rotation};
    REQUIRE(is_dual_orthogonal(m, Rational(0)));
    CHECK(dual_det3(m) == DualScalar<Rational>(1, 0));
  }
}
