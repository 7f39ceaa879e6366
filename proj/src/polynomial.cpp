#include "glueform/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "glueform/error.hpp"

namespace glueform {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto names = std::make_shared<const std::vector<std::string>>();
  return names;
}

void require_same_context(const Polynomial& a, const Polynomial& b, const char* op) {
  if (!(a.context() == b.context()))
    throw UsageError(std::string(op) + ": context mismatch " + a.context().to_string() +
                     " vs " + b.context().to_string());
}

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || digit(c); });
}

VarContext::VarContext() : names_(empty_names()) {}

VarContext::VarContext(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw UsageError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw UsageError("duplicate variable name '" + n + "'");
  }
  names_ = names.empty() ? empty_names()
                         : std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  const auto& v = *names_;
  const auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

std::string VarContext::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += name(i);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::unit(std::size_t variables, std::size_t index) {
  Monomial m(variables);
  m.exponents_.at(index) = 1;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.exponents_[i] = a.exponents_[i] + b.exponents_[i];
  return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  return grlex_less(b, a);
}

std::vector<Monomial> monomials_up_to(std::size_t variables, std::uint32_t max_degree) {
  std::vector<Monomial> out;
  Monomial current(variables);
  // Fill exponents of positions [pos, variables) with total at most `budget`.
  auto recurse = [&](auto&& self, std::size_t pos, std::uint32_t budget) -> void {
    if (pos == variables) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t e = 0; e <= budget; ++e) {
      current[pos] = e;
      self(self, pos + 1, budget - e);
    }
    current[pos] = 0;
  };
  recurse(recurse, 0, max_degree);
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(VarContext context, const Rational& value) {
  Polynomial p(std::move(context));
  p.add_term(Monomial(p.context_.size()), value);
  return p;
}

Polynomial Polynomial::variable(VarContext context, std::size_t index) {
  if (index >= context.size()) throw UsageError("variable index out of range");
  Polynomial p(std::move(context));
  p.add_term(Monomial::unit(p.context_.size(), index), Rational(1));
  return p;
}

Polynomial Polynomial::term(VarContext context, Monomial monomial, const Rational& coefficient) {
  if (monomial.size() != context.size()) throw UsageError("monomial length mismatch");
  Polynomial p(std::move(context));
  p.add_term(monomial, coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::int64_t Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<std::int64_t>(terms_.begin()->first.degree());
}

Rational Polynomial::coefficient(const Monomial& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(context_.size())); }

void Polynomial::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_context(*this, other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_context(*this, other, "subtract");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b, "multiply");
  Polynomial out(a.context());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    const Rational mag = c.abs();
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += context_.name(i);
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + '*' + mono;
    }
  }
  return out;
}

Polynomial pow(const Polynomial& base, std::uint32_t exponent) {
  Polynomial result = Polynomial::constant(base.context(), Rational(1));
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

// ---------------------------------------------------------------------------
// PolyMap

PolyMap::PolyMap(VarContext source, std::vector<Polynomial> components)
    : source_(std::move(source)), components_(std::move(components)) {
  for (const auto& c : components_)
    if (!(c.context() == source_))
      throw UsageError("PolyMap component over " + c.context().to_string() +
                       ", expected " + source_.to_string());
}

PolyMap PolyMap::identity(const VarContext& context) {
  std::vector<Polynomial> comps;
  comps.reserve(context.size());
  for (std::size_t i = 0; i < context.size(); ++i) comps.push_back(Polynomial::variable(context, i));
  return PolyMap(context, std::move(comps));
}

std::string PolyMap::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += components_[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Free operations

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial compose(const Polynomial& p, const PolyMap& map) {
  const std::size_t n = p.context().size();
  if (map.target_arity() != n)
    throw UsageError("compose: map has arity " + std::to_string(map.target_arity()) +
                     ", polynomial has " + std::to_string(n) + " variables");
  // powers[i][e] = component_i^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(map.source(), Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * map.component(i));
    return cache[e];
  };
  Polynomial out(map.source());
  for (const auto& [m, c] : p.terms()) {
    Polynomial product = Polynomial::constant(map.source(), c);
    for (std::size_t i = 0; i < n && !product.is_zero(); ++i)
      if (m[i] > 0) product = product * power(i, m[i]);
    out += product;
  }
  return out;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  std::vector<Polynomial> comps;
  comps.reserve(outer.target_arity());
  for (const auto& c : outer.components()) comps.push_back(compose(c, inner));
  return PolyMap(inner.source(), std::move(comps));
}

Polynomial partial(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.context().size())
    throw UsageError("partial: variable index " + std::to_string(var_index) + " out of range");
  Polynomial out(p.context());
  for (const auto& [m, c] : p.terms()) {
    if (m[var_index] == 0) continue;
    Monomial lowered = m;
    lowered[var_index] -= 1;
    out.add_term(lowered, c * Rational(static_cast<std::int64_t>(m[var_index])));
  }
  return out;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  const std::size_t n = p.context().size();
  if (point.size() != n)
    throw UsageError("evaluate: point has " + std::to_string(point.size()) +
                     " coordinates, expected " + std::to_string(n));
  Rational total;
  for (const auto& [m, c] : p.terms()) {
    mpq_class value = c.raw();
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      mpq_class f;
      mpz_pow_ui(f.get_num_mpz_t(), point[i].raw().get_num_mpz_t(), m[i]);
      mpz_pow_ui(f.get_den_mpz_t(), point[i].raw().get_den_mpz_t(), m[i]);
      value *= f;
    }
    total += Rational(value);
  }
  return total;
}

std::vector<Rational> evaluate(const PolyMap& map, std::span<const Rational> point) {
  std::vector<Rational> out;
  out.reserve(map.target_arity());
  for (const auto& c : map.components()) out.push_back(evaluate(c, point));
  return out;
}

}  // namespace glueform
