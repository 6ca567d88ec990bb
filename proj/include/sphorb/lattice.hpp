#pragma once

// Small fixed-capacity integer vectors and matrices for rank <= 8 lattices,
// with exact rank and integer-kernel computations.

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphorb {

inline constexpr int kMaxRank = 8;

/// Integer vector in the simple-root basis. Storage is 0-based:
/// v[0] is the coefficient of alpha_1.
class LatticeVector {
public:
  LatticeVector() = default;

  explicit LatticeVector(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxRank)
      throw std::invalid_argument("lattice dimension out of range: " + std::to_string(dim));
  }

  LatticeVector(std::initializer_list<int> coeffs) : LatticeVector(static_cast<int>(coeffs.size())) {
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
  }

  explicit LatticeVector(std::span<const int> coeffs) : LatticeVector(static_cast<int>(coeffs.size())) {
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
  }

  static LatticeVector unit(int dim, int index0) {
    LatticeVector v(dim);
    v.c_[index0] = 1;
    return v;
  }

  int dim() const noexcept { return dim_; }
  int operator[](int i) const noexcept { return c_[i]; }
  int &operator[](int i) noexcept { return c_[i]; }
  std::span<const int> coeffs() const noexcept { return {c_.data(), static_cast<std::size_t>(dim_)}; }
  std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + dim_}; }

  int height() const noexcept { return std::accumulate(c_.begin(), c_.begin() + dim_, 0); }

  bool is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.begin() + dim_, [](int x) { return x == 0; });
  }
  bool is_nonnegative() const noexcept {
    return std::all_of(c_.begin(), c_.begin() + dim_, [](int x) { return x >= 0; });
  }
  bool is_nonpositive() const noexcept {
    return std::all_of(c_.begin(), c_.begin() + dim_, [](int x) { return x <= 0; });
  }

  /// Support as 0-based indices of nonzero coefficients.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < dim_; ++i)
      if (c_[i] != 0) s.push_back(i);
    return s;
  }

  LatticeVector &operator+=(const LatticeVector &o) noexcept {
    for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVector &operator-=(const LatticeVector &o) noexcept {
    for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  LatticeVector &operator*=(int k) noexcept {
    for (int i = 0; i < dim_; ++i) c_[i] *= k;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector &b) noexcept { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector &b) noexcept { return a -= b; }
  friend LatticeVector operator*(int k, LatticeVector a) noexcept { return a *= k; }
  LatticeVector operator-() const noexcept {
    LatticeVector r = *this;
    r *= -1;
    return r;
  }

  // unused tail entries are always zero, so whole-array comparison is exact
  friend bool operator==(const LatticeVector &, const LatticeVector &) = default;
  friend auto operator<=>(const LatticeVector &a, const LatticeVector &b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.c_ <=> b.c_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(dim_);
    for (int i = 0; i < dim_; ++i) h = h * 1000003u ^ static_cast<std::size_t>(c_[i] + 512);
    return h;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < dim_; ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + "]";
  }

  friend std::ostream &operator<<(std::ostream &os, const LatticeVector &v) { return os << v.str(); }

private:
  std::array<int, kMaxRank> c_{};
  int dim_ = 0;
};

/// Square integer matrix acting on column vectors. Column j holds the image
/// of the j-th basis vector.
class IntMatrix {
public:
  IntMatrix() = default;

  explicit IntMatrix(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxRank)
      throw std::invalid_argument("matrix dimension out of range: " + std::to_string(dim));
  }

  static IntMatrix identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_columns(std::span<const LatticeVector> cols) {
    IntMatrix m(static_cast<int>(cols.size()));
    for (int j = 0; j < m.dim_; ++j)
      for (int i = 0; i < m.dim_; ++i) m(i, j) = cols[j][i];
    return m;
  }

  int dim() const noexcept { return dim_; }
  int operator()(int r, int c) const noexcept { return a_[r * kMaxRank + c]; }
  int &operator()(int r, int c) noexcept { return a_[r * kMaxRank + c]; }

  LatticeVector column(int c) const {
    LatticeVector v(dim_);
    for (int r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(int c, const LatticeVector &v) noexcept {
    for (int r = 0; r < dim_; ++r) (*this)(r, c) = v[r];
  }

  LatticeVector operator*(const LatticeVector &v) const noexcept {
    LatticeVector out(dim_);
    for (int r = 0; r < dim_; ++r) {
      int s = 0;
      for (int c = 0; c < dim_; ++c) s += (*this)(r, c) * v[c];
      out[r] = s;
    }
    return out;
  }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) noexcept {
    IntMatrix out(a.dim_);
    for (int r = 0; r < a.dim_; ++r)
      for (int k = 0; k < a.dim_; ++k) {
        const int x = a(r, k);
        if (x == 0) continue;
        for (int c = 0; c < a.dim_; ++c) out(r, c) += x * b(k, c);
      }
    return out;
  }
  friend IntMatrix operator+(IntMatrix a, const IntMatrix &b) noexcept {
    for (int i = 0; i < kMaxRank * kMaxRank; ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix &b) noexcept {
    for (int i = 0; i < kMaxRank * kMaxRank; ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  IntMatrix operator-() const noexcept {
    IntMatrix r = *this;
    for (auto &x : r.a_) x = -x;
    return r;
  }
  IntMatrix transposed() const noexcept {
    IntMatrix t(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_identity() const noexcept { return *this == identity(dim_); }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  std::size_t hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) h = h * 1000003u ^ static_cast<std::size_t>((*this)(r, c) + 512);
    return h;
  }

  friend std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
    for (int r = 0; r < m.dim_; ++r) {
      os << (r ? "\n[" : "[");
      for (int c = 0; c < m.dim_; ++c) os << (c ? " " : "") << m(r, c);
      os << "]";
    }
    return os;
  }

private:
  std::array<int, kMaxRank * kMaxRank> a_{};
  int dim_ = 0;
};

namespace detail {

struct ColumnReduction {
  int rank = 0;
  // columns rank..n-1 of `transform` span the integer kernel
  std::vector<std::vector<std::int64_t>> transform;
};

// Unimodular column reduction A*U = H with H in column echelon form. The
// trailing zero columns of H pick out a Z-basis of {x in Z^n : A x = 0},
// which is automatically saturated.
inline ColumnReduction column_reduce(const IntMatrix &a) {
  const int n = a.dim();
  std::vector<std::vector<std::int64_t>> h(n, std::vector<std::int64_t>(n));
  std::vector<std::vector<std::int64_t>> u(n, std::vector<std::int64_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) h[r][c] = a(r, c);
  for (int i = 0; i < n; ++i) u[i][i] = 1;

  auto col_axpy = [&](int dst, int src, std::int64_t q) {
    for (int r = 0; r < n; ++r) {
      h[r][dst] -= q * h[r][src];
      u[r][dst] -= q * u[r][src];
    }
  };
  auto col_swap = [&](int x, int y) {
    for (int r = 0; r < n; ++r) {
      std::swap(h[r][x], h[r][y]);
      std::swap(u[r][x], u[r][y]);
    }
  };

  int pivot = 0;
  for (int row = 0; row < n && pivot < n; ++row) {
    for (;;) {
      int best = -1;
      for (int c = pivot; c < n; ++c)
        if (h[row][c] != 0 && (best < 0 || std::llabs(h[row][c]) < std::llabs(h[row][best]))) best = c;
      if (best < 0) break;
      col_swap(pivot, best);
      bool done = true;
      for (int c = pivot + 1; c < n; ++c) {
        if (h[row][c] == 0) continue;
        col_axpy(c, pivot, h[row][c] / h[row][pivot]);
        if (h[row][c] != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  return {pivot, std::move(u)};
}

} // namespace detail

/// Rank over the rationals.
inline int rank(const IntMatrix &m) { return detail::column_reduce(m).rank; }

/// Z-basis of the integer kernel {x in Z^n : m x = 0}; each vector is
/// primitive and its first nonzero entry is positive.
inline std::vector<LatticeVector> integer_kernel_basis(const IntMatrix &m) {
  const auto red = detail::column_reduce(m);
  const int n = m.dim();
  std::vector<LatticeVector> basis;
  for (int c = red.rank; c < n; ++c) {
    std::int64_t g = 0;
    for (int r = 0; r < n; ++r) g = std::gcd(g, red.transform[r][c]);
    assert(g != 0);
    LatticeVector v(n);
    for (int r = 0; r < n; ++r) v[r] = static_cast<int>(red.transform[r][c] / g);
    const auto s = v.support();
    if (!s.empty() && v[s.front()] < 0) v = -v;
    basis.push_back(v);
  }
  return basis;
}

} // namespace sphorb

template <> struct std::hash<sphorb::LatticeVector> {
  std::size_t operator()(const sphorb::LatticeVector &v) const noexcept { return v.hash(); }
};
template <> struct std::hash<sphorb::IntMatrix> {
  std::size_t operator()(const sphorb::IntMatrix &m) const noexcept { return m.hash(); }
};
