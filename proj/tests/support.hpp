#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "glueform/form.hpp"
#include "glueform/polynomial.hpp"

namespace glueform::testing {

inline VarContext vars(std::initializer_list<const char*> names) {
  return VarContext(std::vector<std::string>(names.begin(), names.end()));
}

inline Polynomial P(const char* text, const VarContext& ctx) { return parse_polynomial(text, ctx); }

// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(std::int64_t magnitude = 9) {
    const auto num = integer(-magnitude, magnitude);
    return Rational(num, integer(1, 5));
  }
  Rational nonzero_rational() {
    Rational r;
    while (r.is_zero()) r = rational();
    return r;
  }

  VarContext context(std::size_t n) {
    static const char* names[] = {"x", "y", "z", "w", "v"};
    std::vector<std::string> out(names, names + n);
    return VarContext(out);
  }

  Monomial monomial(std::size_t n, std::uint32_t max_degree) {
    Monomial m(n);
    std::uint32_t budget = static_cast<std::uint32_t>(integer(0, max_degree));
    for (std::size_t i = 0; i < n && budget > 0; ++i) {
      const auto e = static_cast<std::uint32_t>(integer(0, budget));
      m[i] = e;
      budget -= e;
    }
    if (n > 0 && budget > 0) m[n - 1] += budget;
    return m;
  }

  Polynomial polynomial(const VarContext& ctx, std::uint32_t max_degree, int max_terms = 4) {
    Polynomial p(ctx);
    const auto terms = integer(0, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) p.add_term(monomial(ctx.size(), max_degree), rational());
    return p;
  }

  IndexTuple frame(std::size_t n, std::size_t k) {
    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0U);
    std::shuffle(all.begin(), all.end(), rng_);
    IndexTuple f(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(f.begin(), f.end());
    return f;
  }

  DifferentialForm form(const VarContext& ctx, std::size_t k, std::uint32_t max_degree,
                        int max_terms = 3) {
    DifferentialForm w(ctx, k);
    if (k > ctx.size()) return w;
    const auto terms = integer(0, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) w.add_term(frame(ctx.size(), k), polynomial(ctx, max_degree, 2));
    return w;
  }

  PolyMap map(const VarContext& source, std::size_t arity, std::uint32_t max_degree) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < arity; ++i) comps.push_back(polynomial(source, max_degree, 3));
    return PolyMap(source, std::move(comps));
  }

  std::vector<Rational> point(std::size_t n) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(rational());
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Determinant by the Leibniz permutation expansion.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational product(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) product *= m[i][perm[i]];
    total += product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// w_p(v_1, ..., v_k) = sum_I w_I(p) det[v_j[I_i]]: evaluation of the
// alternating multilinear form straight from its definition.
inline Rational evaluate_alternating(const DifferentialForm& w, const std::vector<Rational>& point,
                                     const std::vector<std::vector<Rational>>& vectors) {
  Rational total;
  for (const auto& [frame, coeff] : w.terms()) {
    std::vector<std::vector<Rational>> minor(frame.size(), std::vector<Rational>(frame.size()));
    for (std::size_t i = 0; i < frame.size(); ++i)
      for (std::size_t j = 0; j < frame.size(); ++j) minor[i][j] = vectors[j][frame[i]];
    total += evaluate(coeff, point) * leibniz_det(minor);
  }
  return total;
}

}  // namespace glueform::testing
