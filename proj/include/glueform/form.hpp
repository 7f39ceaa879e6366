#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glueform/linalg.hpp"
#include "glueform/polynomial.hpp"

namespace glueform {

// Strictly increasing variable indices i1 < ... < ik naming dx_i1 ^ ... ^ dx_ik.
using IndexTuple = std::vector<std::uint32_t>;

// Degree-k differential form with polynomial coefficients on the Euclidean
// domain spanned by `context`. Canonical: no zero coefficients, keys are
// strictly increasing k-tuples. Degree above the dimension leaves only the
// zero form.
class DifferentialForm {
 public:
  using Terms = std::map<IndexTuple, Polynomial>;

  DifferentialForm() = default;
  DifferentialForm(VarContext context, std::size_t degree)
      : context_(std::move(context)), degree_(degree) {}

  static DifferentialForm function(const Polynomial& f);
  // coefficient * dx_frame[0] ^ ... ; the frame must be strictly increasing.
  static DifferentialForm monomial(const Polynomial& coefficient, IndexTuple frame);
  // df = sum_j (df/dx_j) dx_j
  static DifferentialForm differential(const Polynomial& f);

  const VarContext& context() const { return context_; }
  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(const IndexTuple& frame) const;

  void add_term(const IndexTuple& frame, const Polynomial& coefficient);

  DifferentialForm& operator+=(const DifferentialForm& other);
  DifferentialForm& operator-=(const DifferentialForm& other);
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  DifferentialForm operator-() const;
  friend DifferentialForm operator*(const Rational& s, const DifferentialForm& w);
  friend DifferentialForm operator*(const Polynomial& f, const DifferentialForm& w);

  friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

  // Maximum coefficient degree, -1 for the zero form.
  std::int64_t coefficient_degree() const;

  std::string to_string() const;

 private:
  VarContext context_;
  std::size_t degree_ = 0;
  Terms terms_;
};

// Sorts `indices` in place; returns 0 on a repeated index, else the sign of
// the sorting permutation.
int sort_with_sign(IndexTuple& indices);

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm exterior_derivative(const DifferentialForm& w);

// f^*w on f.source(); requires f.target_arity() == w.context().size().
DifferentialForm pullback(const PolyMap& f, const DifferentialForm& w);

std::string frame_to_string(const VarContext& context, const IndexTuple& frame);

// {x^a dx_I : |I| = k, |a| <= max_degree}, frames in lexicographic order,
// monomials ascending within each frame.
std::vector<DifferentialForm> monomial_form_basis(const VarContext& context, std::size_t k,
                                                  std::uint32_t max_degree);

// Writes each rational coefficient of w into `column` under a label
// "<prefix>|<frame>|<exponents>".
void flatten_into(const DifferentialForm& w, const std::string& prefix,
                  linalg::ColumnAssembler::SparseColumn& column);

}  // namespace glueform
