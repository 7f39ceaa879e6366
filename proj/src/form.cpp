#include "glueform/form.hpp"

#include <algorithm>

#include "glueform/error.hpp"

namespace glueform {

namespace {

void require_same_context(const DifferentialForm& a, const DifferentialForm& b, const char* op) {
  if (!(a.context() == b.context()))
    throw UsageError(std::string(op) + ": context mismatch " + a.context().to_string() + " vs " +
                     b.context().to_string());
}

// Lexicographic enumeration of strictly increasing k-subsets of {0..m-1}.
std::vector<IndexTuple> frames(std::size_t m, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > m) return out;
  IndexTuple current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = static_cast<std::uint32_t>(i);
  for (;;) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace

int sort_with_sign(IndexTuple& indices) {
  int sign = 1;
  // Insertion sort; each adjacent swap is a transposition.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  return sign;
}

DifferentialForm DifferentialForm::function(const Polynomial& f) {
  DifferentialForm w(f.context(), 0);
  w.add_term({}, f);
  return w;
}

DifferentialForm DifferentialForm::monomial(const Polynomial& coefficient, IndexTuple frame) {
  DifferentialForm w(coefficient.context(), frame.size());
  w.add_term(frame, coefficient);
  return w;
}

DifferentialForm DifferentialForm::differential(const Polynomial& f) {
  DifferentialForm w(f.context(), 1);
  for (std::size_t j = 0; j < f.context().size(); ++j)
    w.add_term({static_cast<std::uint32_t>(j)}, partial(f, j));
  return w;
}

Polynomial DifferentialForm::coefficient(const IndexTuple& frame) const {
  const auto it = terms_.find(frame);
  return it == terms_.end() ? Polynomial(context_) : it->second;
}

void DifferentialForm::add_term(const IndexTuple& frame, const Polynomial& coefficient) {
  if (frame.size() != degree_)
    throw UsageError("frame of length " + std::to_string(frame.size()) + " in a degree-" +
                     std::to_string(degree_) + " form");
  if (!(coefficient.context() == context_))
    throw UsageError("form coefficient over " + coefficient.context().to_string() +
                     ", expected " + context_.to_string());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (frame[i] >= context_.size()) throw UsageError("frame index out of range");
    if (i > 0 && frame[i - 1] >= frame[i]) throw UsageError("frame is not strictly increasing");
  }
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(frame, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& other) {
  require_same_context(*this, other, "form add");
  if (degree_ != other.degree_) throw UsageError("form add: degree mismatch");
  for (const auto& [frame, c] : other.terms_) add_term(frame, c);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& other) {
  require_same_context(*this, other, "form subtract");
  if (degree_ != other.degree_) throw UsageError("form subtract: degree mismatch");
  for (const auto& [frame, c] : other.terms_) add_term(frame, -c);
  return *this;
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm out = *this;
  for (auto& [frame, c] : out.terms_) c = -c;
  return out;
}

DifferentialForm operator*(const Rational& s, const DifferentialForm& w) {
  DifferentialForm out(w.context(), w.degree());
  for (const auto& [frame, c] : w.terms()) out.add_term(frame, c * s);
  return out;
}

DifferentialForm operator*(const Polynomial& f, const DifferentialForm& w) {
  return wedge(DifferentialForm::function(f), w);
}

std::int64_t DifferentialForm::coefficient_degree() const {
  std::int64_t d = -1;
  for (const auto& [frame, c] : terms_) d = std::max(d, c.degree());
  return d;
}

std::string frame_to_string(const VarContext& context, const IndexTuple& frame) {
  std::string out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (i) out += "^";
    out += "d" + context.name(frame[i]);
  }
  return out;
}

std::string DifferentialForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [frame, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (frame.empty()) {
      out += c.to_string();
    } else if (c == Polynomial::constant(context_, Rational(1))) {
      out += frame_to_string(context_, frame);
    } else if (c.terms().size() == 1 && c.terms().begin()->second.sign() > 0) {
      out += c.to_string() + " " + frame_to_string(context_, frame);
    } else {
      out += "(" + c.to_string() + ") " + frame_to_string(context_, frame);
    }
  }
  return out;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_context(a, b, "wedge");
  DifferentialForm out(a.context(), a.degree() + b.degree());
  for (const auto& [fa, ca] : a.terms()) {
    for (const auto& [fb, cb] : b.terms()) {
      IndexTuple joined = fa;
      joined.insert(joined.end(), fb.begin(), fb.end());
      const int sign = sort_with_sign(joined);
      if (sign == 0) continue;
      Polynomial c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(joined, c);
    }
  }
  return out;
}

DifferentialForm exterior_derivative(const DifferentialForm& w) {
  DifferentialForm out(w.context(), w.degree() + 1);
  for (const auto& [frame, c] : w.terms()) {
    for (std::size_t j = 0; j < w.context().size(); ++j) {
      IndexTuple joined{static_cast<std::uint32_t>(j)};
      joined.insert(joined.end(), frame.begin(), frame.end());
      const int sign = sort_with_sign(joined);
      if (sign == 0) continue;
      Polynomial dc = partial(c, j);
      if (sign < 0) dc = -dc;
      out.add_term(joined, dc);
    }
  }
  return out;
}

DifferentialForm pullback(const PolyMap& f, const DifferentialForm& w) {
  if (f.target_arity() != w.context().size())
    throw UsageError("pullback: map arity " + std::to_string(f.target_arity()) +
                     " does not match form domain " + w.context().to_string());
  std::vector<DifferentialForm> dfs;
  dfs.reserve(f.target_arity());
  for (const auto& component : f.components()) dfs.push_back(DifferentialForm::differential(component));

  DifferentialForm out(f.source(), w.degree());
  for (const auto& [frame, c] : w.terms()) {
    DifferentialForm term = DifferentialForm::function(compose(c, f));
    for (auto i : frame) {
      term = wedge(term, dfs[i]);
      if (term.is_zero()) break;
    }
    if (!term.is_zero()) out += term;
  }
  return out;
}

std::vector<DifferentialForm> monomial_form_basis(const VarContext& context, std::size_t k,
                                                  std::uint32_t max_degree) {
  std::vector<DifferentialForm> out;
  const auto monomials = monomials_up_to(context.size(), max_degree);
  for (const auto& frame : frames(context.size(), k))
    for (const auto& m : monomials)
      out.push_back(DifferentialForm::monomial(Polynomial::term(context, m, Rational(1)), frame));
  return out;
}

void flatten_into(const DifferentialForm& w, const std::string& prefix,
                  linalg::ColumnAssembler::SparseColumn& column) {
  for (const auto& [frame, c] : w.terms()) {
    std::string frame_label;
    for (auto i : frame) frame_label += std::to_string(i) + ",";
    for (const auto& [m, coeff] : c.terms()) {
      std::string label = prefix + "|" + frame_label + "|";
      for (auto e : m.exponents()) label += std::to_string(e) + ",";
      column[label] += coeff;
    }
  }
}

}  // namespace glueform
