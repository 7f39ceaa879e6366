#include "glueform/linalg.hpp"

#include <algorithm>

#include "glueform/error.hpp"

namespace glueform::linalg {

namespace {

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

LabeledMatrix::LabeledMatrix(std::size_t rows, std::size_t cols)
    : LabeledMatrix(numbered("r", rows), numbered("c", cols)) {}

LabeledMatrix::LabeledMatrix(std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels)
    : rows_(row_labels.size()),
      cols_(col_labels.size()),
      entries_(rows_ * cols_),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {}

LabeledMatrix LabeledMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  LabeledMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw UsageError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector LabeledMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw UsageError("apply: vector length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

LabeledMatrix LabeledMatrix::with_column(const Vector& v, std::string label) const {
  if (v.size() != rows_) throw UsageError("augment: vector length mismatch");
  auto labels = col_labels_;
  labels.push_back(std::move(label));
  LabeledMatrix out(row_labels_, std::move(labels));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    out(r, cols_) = v[r];
  }
  return out;
}

void ColumnAssembler::add_column(std::string label, SparseColumn column) {
  for (auto it = column.begin(); it != column.end();) {
    if (it->second.is_zero()) {
      it = column.erase(it);
    } else {
      rows_.try_emplace(it->first, 0);
      ++it;
    }
  }
  col_labels_.push_back(std::move(label));
  columns_.push_back(std::move(column));
}

void ColumnAssembler::declare_row(const std::string& label) { rows_.try_emplace(label, 0); }

LabeledMatrix ColumnAssembler::build() const {
  std::vector<std::string> row_labels;
  std::map<std::string, std::size_t> index;
  for (const auto& [label, unused] : rows_) {
    index.emplace(label, row_labels.size());
    row_labels.push_back(label);
  }
  LabeledMatrix m(std::move(row_labels), col_labels_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& [label, value] : columns_[c]) m(index.at(label), c) = value;
  return m;
}

Echelon reduced_row_echelon(const LabeledMatrix& m) {
  Echelon e{m, {}};
  LabeledMatrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    const Rational inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a(row, c).is_zero()) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const LabeledMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::vector<Vector> kernel_basis(const LabeledMatrix& m) {
  const Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Rational(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
    if (!lead->is_one()) {
      const Rational scale = lead->inverse();
      for (auto& x : v) x *= scale;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool image_membership(const LabeledMatrix& m, const Vector& v) {
  if (v.size() != m.rows())
    throw UsageError("image_membership: vector has " + std::to_string(v.size()) +
                     " entries, matrix has " + std::to_string(m.rows()) + " rows");
  return rank(m.with_column(v)) == rank(m);
}

}  // namespace glueform::linalg
