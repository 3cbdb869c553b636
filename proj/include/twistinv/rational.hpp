#pragma once

/// Arbitrary-precision rational scalar.
///
/// Thin value-semantics wrapper around GMP's mpq_class so that the type can
/// be dropped into Eigen as a scalar (GMP's expression templates interact
/// badly with Eigen's operator overloads otherwise).  Always canonical:
/// reduced fraction, positive denominator.

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace twistinv {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT: implicit by design
  Rational(long n) : v_(n) {}               // NOLINT
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  /// Parses "n" or "n/d".
  explicit Rational(const std::string& s) : v_(s) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  const mpq_class& raw() const { return v_; }
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return v_ == 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace twistinv

namespace Eigen {

template <>
struct NumTraits<twistinv::Rational> : GenericNumTraits<twistinv::Rational> {
  using Real = twistinv::Rational;
  using NonInteger = twistinv::Rational;
  using Nested = twistinv::Rational;
  using Literal = long;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
};

}  // namespace Eigen
