#pragma once

#include <map>
#include <string>
#include <vector>

#include "glueform/rational.hpp"

namespace glueform::linalg {

using Vector = std::vector<Rational>;

// Dense rational matrix whose rows and columns carry basis labels.
class LabeledMatrix {
 public:
  LabeledMatrix() = default;
  LabeledMatrix(std::size_t rows, std::size_t cols);
  LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);
  static LabeledMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  Vector apply(const Vector& v) const;
  LabeledMatrix with_column(const Vector& v, std::string label = "rhs") const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Assembles a matrix column by column from sparse (row label -> value) maps.
// Rows are ordered by label.
class ColumnAssembler {
 public:
  using SparseColumn = std::map<std::string, Rational>;

  void add_column(std::string label, SparseColumn column);
  // Ensures a row exists even if every column is zero there.
  void declare_row(const std::string& label);
  LabeledMatrix build() const;
  std::size_t cols() const { return columns_.size(); }

 private:
  std::vector<std::string> col_labels_;
  std::vector<SparseColumn> columns_;
  std::map<std::string, std::size_t> rows_;
};

struct Echelon {
  LabeledMatrix reduced;           // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

// Gauss-Jordan elimination; the pivot for each column is the first nonzero
// entry at or below the current row.
Echelon reduced_row_echelon(const LabeledMatrix& m);

std::size_t rank(const LabeledMatrix& m);

// Right null space basis, one vector per free column in ascending column
// order, scaled so the first nonzero entry equals 1.
std::vector<Vector> kernel_basis(const LabeledMatrix& m);

// True iff v lies in the column span of m.
bool image_membership(const LabeledMatrix& m, const Vector& v);

}  // namespace glueform::linalg
