#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glueform/rational.hpp"

namespace glueform {

// Ordered list of distinct variable names. Copies share storage.
class VarContext {
 public:
  VarContext();
  explicit VarContext(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& name(std::size_t index) const { return names_->at(index); }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarContext& a, const VarContext& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

  std::string to_string() const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view name);

// Exponent vector; its length equals the owning context's variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variables) : exponents_(variables, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  static Monomial unit(std::size_t variables, std::size_t index);

  std::size_t size() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::uint64_t degree() const;
  bool is_one() const { return degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

// Graded lexicographic order, largest first: higher total degree precedes,
// ties broken lexicographically on exponents.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Ascending graded order used for enumerating truncated bases.
bool grlex_less(const Monomial& a, const Monomial& b);

// All monomials in `variables` variables with total degree <= max_degree,
// ascending in graded lexicographic order.
std::vector<Monomial> monomials_up_to(std::size_t variables, std::uint32_t max_degree);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  Polynomial() = default;
  explicit Polynomial(VarContext context) : context_(std::move(context)) {}

  static Polynomial constant(VarContext context, const Rational& value);
  static Polynomial variable(VarContext context, std::size_t index);
  static Polynomial term(VarContext context, Monomial monomial, const Rational& coefficient);

  const VarContext& context() const { return context_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Degree of the zero polynomial is reported as -1.
  std::int64_t degree() const;
  Rational coefficient(const Monomial& monomial) const;
  Rational constant_term() const;

  void add_term(const Monomial& monomial, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.context_ == b.context_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  VarContext context_;
  Terms terms_;
};

Polynomial pow(const Polynomial& base, std::uint32_t exponent);

// Polynomial map from `source` variables to an n-dimensional target.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(VarContext source, std::vector<Polynomial> components);

  static PolyMap identity(const VarContext& context);

  const VarContext& source() const { return source_; }
  std::size_t target_arity() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& component(std::size_t i) const { return components_.at(i); }

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

  std::string to_string() const;

 private:
  VarContext source_;
  std::vector<Polynomial> components_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

// Substitutes map.components()[i] for variable i of p; result lives on map.source().
Polynomial compose(const Polynomial& p, const PolyMap& map);

// (outer ∘ inner), componentwise.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

Polynomial partial(const Polynomial& p, std::size_t var_index);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);
std::vector<Rational> evaluate(const PolyMap& map, std::span<const Rational> point);

// Grammar:
//   expr   := ['-'] term (('+'|'-') ['-'] term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | var | '(' expr ')'
//   rational := uint ('/' uint)?
// Whitespace is insignificant; implicit multiplication is rejected.
Polynomial parse_polynomial(std::string_view text, const VarContext& context);

}  // namespace glueform
