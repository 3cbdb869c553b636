#pragma once

/// Exact multivariate polynomials over Rational with a declared, ordered
/// variable list.  Terms are dense exponent vectors in graded-lex order, so
/// equality is structural and rendering is canonical.

#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistinv/rational.hpp"

namespace twistinv {

/// Immutable ordered list of indeterminate names, shared by all polynomials
/// of a computation.  The twist layout declares, per twist i, the angular
/// variables w{i}_1..3 followed by the linear variables v{i}_1..3.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  /// Variables of k twists: w1_1, w1_2, w1_3, v1_1, ..., vk_3.
  static std::shared_ptr<const VarTable> twists(int k);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  int index(std::string_view name) const;  // throws if absent

  bool twist_layout() const { return twist_count_ > 0; }
  int twist_count() const { return twist_count_; }
  bool is_omega(int i) const { return twist_layout() && i % 6 < 3; }
  /// Index of v{i}_c for the variable w{i}_c.
  int linear_partner(int omega_index) const;
  /// Variable index of w{i}_c (i, c zero-based).
  int omega_index(int twist, int coord) const;
  int v_index(int twist, int coord) const;

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  int twist_count_ = 0;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  /// Graded order, ties broken lexicographically on the exponent vector.
  struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
      const int da = std::accumulate(a.begin(), a.end(), 0);
      const int db = std::accumulate(b.begin(), b.end(), 0);
      if (da != db) return da < db;
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
  };
  using TermMap = std::map<Exponents, Rational, TermOrder>;

  explicit MultiPoly(VarTablePtr vars);
  static MultiPoly constant(VarTablePtr vars, Rational c);
  static MultiPoly variable(VarTablePtr vars, int index);
  static MultiPoly variable(VarTablePtr vars, std::string_view name);

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;
  int degree_in(int var_index) const;
  /// Largest combined degree over the given variable indices in any term.
  int block_degree(std::span<const int> var_indices) const;

  MultiPoly& add_term(const Exponents& exp, const Rational& coef);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(int n) const;

  MultiPoly partial_derivative(int var_index) const;

  /// Exact evaluation; `values` must bind every variable of the table.
  Rational evaluate(std::span<const Rational> values) const;
  /// Evaluation from a name->value map; throws naming the first variable
  /// that appears in the polynomial without a binding.
  Rational evaluate(const std::map<std::string, Rational>& bindings) const;
  double evaluate_double(std::span<const double> values) const;

  /// Leading (graded-lex greatest) term rendered like the terms of
  /// to_string(); "0" for the zero polynomial.
  std::string leading_term() const;
  /// Canonical rendering: `coef*w1_1^2*v2_3` terms, leading term first,
  /// joined by " + " with signs folded into the coefficients.
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void require_same_table(const MultiPoly& other) const;
  std::string render_term(const Exponents& exp, const Rational& coef) const;

  VarTablePtr vars_;
  TermMap terms_;
};

}  // namespace twistinv
