#include "sphorb/lattice.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using sphorb::IntMatrix;
using sphorb::LatticeVector;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  int r = 0;
  for (const auto &row : rows) {
    int c = 0;
    for (int x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

// Hermite-style membership test: does the Z-span of `basis` contain v?
// Brute force over small coefficient boxes, enough for the tiny cases here.
bool in_span(const std::vector<LatticeVector> &basis, const LatticeVector &v, int box = 4) {
  if (basis.empty()) return v.is_zero();
  std::vector<int> coef(basis.size(), -box);
  for (;;) {
    LatticeVector s(v.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) s += coef[k] * basis[k];
    if (s == v) return true;
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] > box) coef[k++] = -box;
    if (k == coef.size()) return false;
  }
}

} // namespace

TEST(LatticeVector, ArithmeticAndOrdering) {
  const LatticeVector a{1, 2, 0}, b{0, 1, 1};
  EXPECT_EQ(a + b, (LatticeVector{1, 3, 1}));
  EXPECT_EQ(a - b, (LatticeVector{1, 1, -1}));
  EXPECT_EQ(-a, (LatticeVector{-1, -2, 0}));
  EXPECT_EQ(3 * b, (LatticeVector{0, 3, 3}));
  EXPECT_EQ(a.height(), 3);
  EXPECT_TRUE(a.is_nonnegative());
  EXPECT_FALSE((a - b).is_nonnegative());
  EXPECT_FALSE((a - b).is_nonpositive());
  EXPECT_LT(b, a);
  EXPECT_EQ(a.str(), "[1,2,0]");
  EXPECT_EQ(a.support(), (std::vector<int>{0, 1}));
}

TEST(LatticeVector, RejectsOversizedDimension) {
  EXPECT_THROW(LatticeVector(9), std::invalid_argument);
  EXPECT_THROW(IntMatrix(-1), std::invalid_argument);
}

TEST(IntMatrix, ProductsActOnColumns) {
  const IntMatrix m = from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(m * LatticeVector({3, 5}), (LatticeVector{5, 3}));
  EXPECT_TRUE((m * m).is_identity());
  EXPECT_EQ(m.column(0), (LatticeVector{0, 1}));
  EXPECT_EQ(m.transposed(), m);
}

TEST(Rank, SmallCases) {
  EXPECT_EQ(sphorb::rank(IntMatrix(3)), 0);
  EXPECT_EQ(sphorb::rank(IntMatrix::identity(4)), 4);
  EXPECT_EQ(sphorb::rank(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2);
  EXPECT_EQ(sphorb::rank(from_rows({{2, 4}, {3, 6}})), 1);
}

TEST(IntegerKernel, SaturatedBasis) {
  // kernel of [2 4] is spanned by (2,-1); a rational method scaled wrongly
  // would give (4,-2)
  const auto k = sphorb::integer_kernel_basis(from_rows({{2, 4}, {0, 0}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (LatticeVector{2, -1}));
}

TEST(IntegerKernel, SpanMatchesKnownGenerators) {
  // 3x3 with kernel {x : x1 + x2 + x3 = 0} intersected with x1 = x3
  const IntMatrix m = from_rows({{1, 1, 1}, {1, 0, -1}, {0, 0, 0}});
  const auto k = sphorb::integer_kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(in_span(k, LatticeVector{1, -2, 1}));
  for (const auto &v : k) EXPECT_TRUE((m * v).is_zero());
}

TEST(IntegerKernel, RandomMatricesRankNullity) {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.uniform(1, 6);
    IntMatrix m(n);
    const int rows = gen.uniform(0, n);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = gen.uniform(-3, 3);
    // duplicate a row combination to force dependence sometimes
    if (rows >= 2 && rows < n)
      for (int c = 0; c < n; ++c) m(rows, c) = m(0, c) - 2 * m(1, c);
    const auto k = sphorb::integer_kernel_basis(m);
    EXPECT_EQ(static_cast<int>(k.size()) + sphorb::rank(m), n);
    for (const auto &v : k) {
      EXPECT_TRUE((m * v).is_zero());
      int g = 0;
      for (int x : v.coeffs()) g = std::gcd(g, std::abs(x));
      EXPECT_EQ(g, 1) << v;
    }
  }
}
