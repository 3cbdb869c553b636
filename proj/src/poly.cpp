#include "twistinv/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace twistinv {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("VarTable: empty variable list");
}

std::shared_ptr<const VarTable> VarTable::twists(int k) {
  if (k < 1) throw std::invalid_argument("VarTable::twists: k must be >= 1");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(6 * k));
  for (int i = 1; i <= k; ++i) {
    for (int c = 1; c <= 3; ++c) names.push_back("w" + std::to_string(i) + "_" + std::to_string(c));
    for (int c = 1; c <= 3; ++c) names.push_back("v" + std::to_string(i) + "_" + std::to_string(c));
  }
  auto table = std::make_shared<VarTable>(std::move(names));
  table->twist_count_ = k;
  return table;
}

int VarTable::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("VarTable: unknown variable '" + std::string(name) + "'");
}

int VarTable::linear_partner(int omega_index) const {
  if (!is_omega(omega_index)) throw std::invalid_argument("VarTable: not an angular variable");
  return omega_index + 3;
}

int VarTable::omega_index(int twist, int coord) const {
  if (!twist_layout() || twist < 0 || twist >= twist_count_ || coord < 0 || coord > 2)
    throw std::invalid_argument("VarTable: bad twist variable request");
  return 6 * twist + coord;
}

int VarTable::v_index(int twist, int coord) const { return omega_index(twist, coord) + 3; }

MultiPoly::MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("MultiPoly: null variable table");
}

MultiPoly MultiPoly::constant(VarTablePtr vars, Rational c) {
  MultiPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exponents(static_cast<std::size_t>(p.vars_->size()), 0), std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(VarTablePtr vars, int index) {
  MultiPoly p(std::move(vars));
  if (index < 0 || index >= p.vars_->size())
    throw std::invalid_argument("MultiPoly::variable: index out of range");
  Exponents e(static_cast<std::size_t>(p.vars_->size()), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::variable(VarTablePtr vars, std::string_view name) {
  const int idx = vars->index(name);
  return variable(std::move(vars), idx);
}

int MultiPoly::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

int MultiPoly::degree_in(int var_index) const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[static_cast<std::size_t>(var_index)]);
  return deg;
}

int MultiPoly::block_degree(std::span<const int> var_indices) const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i : var_indices) d += e[static_cast<std::size_t>(i)];
    deg = std::max(deg, d);
  }
  return deg;
}

MultiPoly& MultiPoly::add_term(const Exponents& exp, const Rational& coef) {
  if (exp.size() != static_cast<std::size_t>(vars_->size()))
    throw std::invalid_argument("MultiPoly::add_term: exponent vector has wrong length");
  if (coef.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(exp, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

void MultiPoly::require_same_table(const MultiPoly& other) const {
  if (vars_ != other.vars_ && !(*vars_ == *other.vars_))
    throw std::invalid_argument("MultiPoly: operands declared over different variable lists");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_table(b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_table(b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_table(b);
  MultiPoly out(a.vars_);
  const std::size_t n = static_cast<std::size_t>(a.vars_->size());
  MultiPoly::Exponents e(n, 0);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, c * coef);
  return out;
}

MultiPoly MultiPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
  MultiPoly out = constant(vars_, Rational(1));
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

MultiPoly MultiPoly::partial_derivative(int var_index) const {
  if (var_index < 0 || var_index >= vars_->size())
    throw std::invalid_argument("MultiPoly::partial_derivative: index out of range");
  MultiPoly out(vars_);
  const std::size_t v = static_cast<std::size_t>(var_index);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    --d[v];
    out.add_term(d, c * Rational(e[v]));
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
  if (values.size() != static_cast<std::size_t>(vars_->size()))
    throw std::invalid_argument("MultiPoly::evaluate: wrong number of values");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int p = 0; p < e[i]; ++p) term *= values[i];
    acc += term;
  }
  return acc;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& bindings) const {
  std::vector<Rational> values(static_cast<std::size_t>(vars_->size()), Rational(0));
  std::vector<bool> bound(static_cast<std::size_t>(vars_->size()), false);
  for (const auto& [name, value] : bindings) {
    const int idx = vars_->index(name);
    values[static_cast<std::size_t>(idx)] = value;
    bound[static_cast<std::size_t>(idx)] = true;
  }
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && !bound[i])
        throw std::invalid_argument("MultiPoly::evaluate: no binding for variable '" +
                                    vars_->name(static_cast<int>(i)) + "'");
  return evaluate(values);
}

double MultiPoly::evaluate_double(std::span<const double> values) const {
  if (values.size() != static_cast<std::size_t>(vars_->size()))
    throw std::invalid_argument("MultiPoly::evaluate_double: wrong number of values");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int p = 0; p < e[i]; ++p) term *= values[i];
    acc += term;
  }
  return acc;
}

std::string MultiPoly::render_term(const Exponents& exp, const Rational& coef) const {
  std::ostringstream os;
  os << coef;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    os << "*" << vars_->name(static_cast<int>(i));
    if (exp[i] > 1) os << "^" << exp[i];
  }
  return os.str();
}

std::string MultiPoly::leading_term() const {
  if (terms_.empty()) return "0";
  const auto& [e, c] = *terms_.rbegin();
  return render_term(e, c);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += render_term(it->first, it->second);
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return (*a.vars_ == *b.vars_) && a.terms_ == b.terms_;
}

}  // namespace twistinv
