#include <gtest/gtest.h>

#include "glueform/error.hpp"
#include "glueform/linalg.hpp"
#include "support.hpp"

using namespace glueform;
using namespace glueform::linalg;

namespace {

LabeledMatrix M(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return LabeledMatrix::from_rows(out);
}

Vector V(std::initializer_list<std::int64_t> entries) { return Vector(entries.begin(), entries.end()); }

std::string render(const std::vector<Vector>& basis) {
  std::string out;
  for (const auto& v : basis) {
    for (const auto& x : v) out += x.to_string() + ",";
    out += ";";
  }
  return out;
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(M({{1, 0}, {0, 1}})), 2U);
  EXPECT_EQ(rank(M({{0, 0}, {0, 0}})), 0U);
  EXPECT_EQ(rank(M({{1, 2}, {2, 4}})), 1U);
  EXPECT_EQ(rank(LabeledMatrix(0, 3)), 0U);
}

TEST(KernelBasis, Examples) {
  const auto k1 = kernel_basis(M({{1, 1}}));
  ASSERT_EQ(k1.size(), 1U);
  EXPECT_EQ(k1[0], V({1, -1}));

  EXPECT_TRUE(kernel_basis(M({{2, 1}, {1, 1}})).empty());

  const LabeledMatrix m = M({{1, 0, -1}, {0, 1, -1}});
  const auto k3 = kernel_basis(m);
  ASSERT_EQ(k3.size(), 1U);
  EXPECT_EQ(k3[0], V({1, 1, 1}));
  EXPECT_EQ(m.apply(k3[0]), V({0, 0}));
}

TEST(KernelBasis, NoRowsMeansIdentityBasis) {
  const auto k = kernel_basis(LabeledMatrix(0, 3));
  ASSERT_EQ(k.size(), 3U);
  EXPECT_EQ(k[0], V({1, 0, 0}));
  EXPECT_EQ(k[2], V({0, 0, 1}));
}

TEST(ImageMembership, Examples) {
  EXPECT_TRUE(image_membership(M({{1, 2}, {3, 4}, {5, 6}}), V({0, 0, 0})));
  EXPECT_TRUE(image_membership(M({{1, 0}, {0, 1}}), V({7, -3})));
  EXPECT_FALSE(image_membership(M({{1}, {0}}), V({0, 1})));
  EXPECT_THROW(image_membership(M({{1}, {0}}), V({0})), UsageError);
}

TEST(ColumnAssembler, SortsRowsAndDropsZeros) {
  ColumnAssembler a;
  a.add_column("c0", {{"b", Rational(2)}, {"a", Rational(0)}});
  a.add_column("c1", {{"a", Rational(1)}});
  a.declare_row("z");
  const LabeledMatrix m = a.build();
  EXPECT_EQ(m.row_labels(), (std::vector<std::string>{"a", "b", "z"}));
  EXPECT_EQ(m.col_labels(), (std::vector<std::string>{"c0", "c1"}));
  EXPECT_EQ(m(0, 1), Rational(1));
  EXPECT_EQ(m(1, 0), Rational(2));
  EXPECT_TRUE(m(2, 0).is_zero());
}

class LinalgProperty : public ::testing::Test {
 protected:
  glueform::testing::Gen gen{99};

  // Product of random factors, so ranks below full occur regularly.
  LabeledMatrix random_matrix() {
    const auto rows = static_cast<std::size_t>(gen.integer(1, 7));
    const auto cols = static_cast<std::size_t>(gen.integer(1, 7));
    const auto inner = static_cast<std::size_t>(gen.integer(1, 7));
    LabeledMatrix a(rows, inner), b(inner, cols), out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < inner; ++c) a(r, c) = gen.integer(0, 2) ? gen.rational(4) : Rational();
    for (std::size_t r = 0; r < inner; ++r)
      for (std::size_t c = 0; c < cols; ++c) b(r, c) = gen.rational(4);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t k = 0; k < inner; ++k) out(r, c) += a(r, k) * b(k, c);
    return out;
  }
};

TEST_F(LinalgProperty, KernelVectorsAnnihilateAndCountsMatch) {
  for (int i = 0; i < 300; ++i) {
    const LabeledMatrix m = random_matrix();
    const auto basis = kernel_basis(m);
    for (const auto& v : basis) {
      ASSERT_EQ(m.apply(v), Vector(m.rows()));
      const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
      ASSERT_TRUE(lead != v.end() && lead->is_one());
    }
    ASSERT_EQ(rank(m) + basis.size(), m.cols());
    // Kernel vectors are independent.
    if (!basis.empty()) {
      LabeledMatrix k(m.cols(), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < m.cols(); ++r) k(r, c) = basis[c][r];
      ASSERT_EQ(rank(k), basis.size());
    }
  }
}

TEST_F(LinalgProperty, ColumnsAreInTheirOwnImage) {
  for (int i = 0; i < 200; ++i) {
    const LabeledMatrix m = random_matrix();
    Vector combo(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational w = gen.rational();
      for (std::size_t r = 0; r < m.rows(); ++r) combo[r] += w * m(r, c);
    }
    ASSERT_TRUE(image_membership(m, combo));
  }
}

TEST_F(LinalgProperty, Deterministic) {
  for (int i = 0; i < 50; ++i) {
    const LabeledMatrix m = random_matrix();
    ASSERT_EQ(render(kernel_basis(m)), render(kernel_basis(m)));
  }
}
