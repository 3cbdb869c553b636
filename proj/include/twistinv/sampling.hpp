#pragma once

/// Seed-deterministic sampling of rotations, motions, twists and rational
/// points.  The generator is always an explicit parameter; suites derive one
/// independent stream per sample so results do not depend on scheduling.

#include <cmath>
#include <cstdint>
#include <random>

#include "twistinv/screw.hpp"

namespace twistinv {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Independent stream for sample #index under the same master seed.
  Rng derive(std::uint64_t index) const {
    // splitmix64 of (seed, index) so streams are decorrelated.
    std::uint64_t z = seed_ + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_()) / 18446744073709551616.0;  // 2^64
    return lo + (hi - lo) * u;
  }

  double gaussian() {
    // Box-Muller, no cached state.
    double u1 = uniform(0.0, 1.0);
    while (u1 <= 1e-300) u1 = uniform(0.0, 1.0);
    const double u2 = uniform(0.0, 1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Rotation from an (unnormalized) quaternion; exact in any scalar since the
/// formula divides by the squared norm only.
template <typename Scalar>
Mat3<Scalar> rotation_from_quaternion(const Scalar& w, const Scalar& x, const Scalar& y, const Scalar& z) {
  const Scalar n = w * w + x * x + y * y + z * z;
  if (n == Scalar(0)) throw std::invalid_argument("rotation_from_quaternion: zero quaternion");
  Mat3<Scalar> r;
  r << w * w + x * x - y * y - z * z, Scalar(2) * (x * y - w * z), Scalar(2) * (x * z + w * y),
       Scalar(2) * (x * y + w * z), w * w - x * x + y * y - z * z, Scalar(2) * (y * z - w * x),
       Scalar(2) * (x * z - w * y), Scalar(2) * (y * z + w * x), w * w - x * x - y * y + z * z;
  return Mat3<Scalar>(r / n);
}

/// Haar-uniform rotation via a 4-component Gaussian quaternion.
inline Mat3<double> random_rotation(Rng& rng) {
  const double w = rng.gaussian(), x = rng.gaussian(), y = rng.gaussian(), z = rng.gaussian();
  if (w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0) return Mat3<double>::Identity();
  return rotation_from_quaternion(w, x, y, z);
}

/// Motion with Haar rotation (negated through the point reflection -I when
/// parity is -1) and translation components uniform in [-1, 1].
inline EuclideanMotion<double> random_motion(Rng& rng, int parity = +1) {
  if (parity != +1 && parity != -1) throw std::invalid_argument("random_motion: parity must be +1 or -1");
  Mat3<double> rot = random_rotation(rng);
  if (parity == -1) rot = -rot;
  Vec3<double> a(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return {rot, a, parity};
}

inline Twist<double> random_twist(Rng& rng) {
  Vec3<double> w(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  Vec3<double> v(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return {w, v};
}

/// Exact sample point: numerator in [-9, 9], denominator fixed at 7.
inline Rational random_rational(Rng& rng) { return Rational(rng.uniform_int(-9, 9), 7); }

inline Twist<Rational> random_rational_twist(Rng& rng) {
  Vec3<Rational> w(random_rational(rng), random_rational(rng), random_rational(rng));
  Vec3<Rational> v(random_rational(rng), random_rational(rng), random_rational(rng));
  return {w, v};
}

/// Exact proper motion: rational quaternion rotation, rational translation.
inline EuclideanMotion<Rational> random_rational_motion(Rng& rng) {
  Rational w, x, y, z;
  do {
    w = random_rational(rng);
    x = random_rational(rng);
    y = random_rational(rng);
    z = random_rational(rng);
  } while (w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero());
  Vec3<Rational> a(random_rational(rng), random_rational(rng), random_rational(rng));
  return {rotation_from_quaternion(w, x, y, z), a, +1};
}

}  // namespace twistinv
