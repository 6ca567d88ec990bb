#pragma once

// Weyl group elements as integer matrices on the root lattice.

#include "sphorb/rootsys.hpp"

#include <algorithm>
#include <vector>

namespace sphorb {

using Word = std::vector<int>;

/// Immutable Weyl group element. The matrix acts on column vectors in the
/// simple-root basis; column j is the image of alpha_{j+1}.
class WeylElement {
public:
  static WeylElement identity(RootSystemPtr rs) {
    const int n = rs->rank();
    return WeylElement(std::move(rs), IntMatrix::identity(n), 0);
  }

  static WeylElement simple_reflection(RootSystemPtr rs, int i) {
    rs->check_index(i);
    IntMatrix m = IntMatrix::identity(rs->rank());
    right_mul_simple(*rs, m, i);
    return WeylElement(std::move(rs), m, 1);
  }

  /// from_word([a,b,c]) = s_a s_b s_c.
  static WeylElement from_word(RootSystemPtr rs, const Word &word) {
    IntMatrix m = IntMatrix::identity(rs->rank());
    for (int i : word) {
      rs->check_index(i);
      right_mul_simple(*rs, m, i);
    }
    return from_matrix(std::move(rs), m);
  }

  /// Wraps a matrix known to lie in W; the length is recomputed.
  static WeylElement from_matrix(RootSystemPtr rs, const IntMatrix &m) {
    const int len = inversion_count(*rs, m);
    return WeylElement(std::move(rs), m, len);
  }

  /// Reflection s_gamma for any root gamma, built as u^-1 s_i u where u
  /// carries gamma down to the simple root alpha_i.
  static WeylElement reflection(RootSystemPtr rs, const LatticeVector &gamma) {
    if (!rs->is_root(gamma)) throw std::invalid_argument(gamma.str() + " is not a root of " + rs->name());
    const LatticeVector pos = gamma.is_nonnegative() ? gamma : -gamma;
    auto [path, simple] = rs->descent_to_simple(pos);
    // u = s_{i_k} .. s_{i_1} sends pos to alpha_simple; s_gamma = u^-1 s u
    Word w(path.begin(), path.end());
    w.push_back(simple);
    w.insert(w.end(), path.rbegin(), path.rend());
    return from_word(std::move(rs), w);
  }

  const RootSystemPtr &root_system() const noexcept { return rs_; }
  const IntMatrix &matrix() const noexcept { return m_; }
  int length() const noexcept { return len_; }
  int rank() const noexcept { return m_.dim(); }

  LatticeVector apply(const LatticeVector &v) const {
    rs_->check_vector(v);
    return m_ * v;
  }
  LatticeVector image_of_simple(int i) const {
    rs_->check_index(i);
    return m_.column(i - 1);
  }

  /// True iff w(alpha_i) is negative, i.e. l(w s_i) < l(w).
  bool is_right_descent(int i) const {
    rs_->check_index(i);
    for (int r = 0; r < rank(); ++r)
      if (m_(r, i - 1) != 0) return m_(r, i - 1) < 0;
    return false;
  }

  /// True iff l(s_i w) < l(w).
  bool is_left_descent(int i) const { return inverse().is_right_descent(i); }

  friend WeylElement operator*(const WeylElement &a, const WeylElement &b) {
    a.check_same(b);
    return from_matrix(a.rs_, a.m_ * b.m_);
  }

  WeylElement times_simple(int i) const {
    rs_->check_index(i);
    IntMatrix m = m_;
    const bool down = is_right_descent(i);
    right_mul_simple(*rs_, m, i);
    return WeylElement(rs_, m, len_ + (down ? -1 : 1));
  }

  WeylElement simple_times(int i) const { return WeylElement::simple_reflection(rs_, i) * *this; }

  WeylElement inverse() const {
    Word w = reduced_word();
    std::reverse(w.begin(), w.end());
    IntMatrix m = IntMatrix::identity(rank());
    for (int i : w) right_mul_simple(*rs_, m, i);
    return WeylElement(rs_, m, len_);
  }

  /// Reduced word obtained by peeling right descents.
  Word reduced_word() const {
    Word word;
    IntMatrix m = m_;
    while (static_cast<int>(word.size()) < len_) {
      int d = -1;
      for (int i = 0; i < rank() && d < 0; ++i)
        for (int r = 0; r < rank(); ++r)
          if (m(r, i) != 0) {
            if (m(r, i) < 0) d = i;
            break;
          }
      if (d < 0) throw std::logic_error("reduced_word: no descent before reaching the identity");
      right_mul_simple(*rs_, m, d + 1);
      word.push_back(d + 1);
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  bool is_identity() const { return len_ == 0; }
  bool is_involution() const { return (m_ * m_).is_identity(); }

  friend bool operator==(const WeylElement &a, const WeylElement &b) {
    return a.rs_->type() == b.rs_->type() && a.m_ == b.m_;
  }

  std::size_t hash() const noexcept { return m_.hash(); }

  /// Internal constructor for callers that already know the length.
  static WeylElement unchecked(RootSystemPtr rs, const IntMatrix &m, int length) {
    return WeylElement(std::move(rs), m, length);
  }

  /// m <- m * s_i, updating only column i.
  static void right_mul_simple(const RootSystem &rs, IntMatrix &m, int i) {
    const int n = rs.rank();
    const int c = i - 1;
    const LatticeVector wi = m.column(c);
    for (int j = 0; j < n; ++j) {
      if (j == c) continue;
      const int k = rs.cartan()(j, c);
      if (k == 0) continue;
      for (int r = 0; r < n; ++r) m(r, j) -= k * wi[r];
    }
    for (int r = 0; r < n; ++r) m(r, c) = -wi[r];
  }

  static int inversion_count(const RootSystem &rs, const IntMatrix &m) {
    int count = 0;
    for (const auto &beta : rs.positive_roots()) {
      const LatticeVector img = m * beta;
      for (int r = 0; r < rs.rank(); ++r)
        if (img[r] != 0) {
          count += img[r] < 0;
          break;
        }
    }
    return count;
  }

private:
  WeylElement(RootSystemPtr rs, const IntMatrix &m, int len) : rs_(std::move(rs)), m_(m), len_(len) {}

  void check_same(const WeylElement &o) const {
    if (rs_->type() != o.rs_->type())
      throw std::invalid_argument("Weyl elements from different root systems: " + rs_->name() + " vs " +
                                  o.rs_->name());
  }

  RootSystemPtr rs_;
  IntMatrix m_;
  int len_ = 0;
};

inline WeylElement from_word(const RootSystemPtr &rs, const Word &word) { return WeylElement::from_word(rs, word); }

inline WeylElement multiply(const WeylElement &a, const WeylElement &b) { return a * b; }

inline WeylElement inverse(const WeylElement &w) { return w.inverse(); }

inline LatticeVector apply(const WeylElement &w, const LatticeVector &v) { return w.apply(v); }

inline Word reduced_word(const WeylElement &w) { return w.reduced_word(); }

inline bool is_involution(const WeylElement &w) { return w.is_involution(); }

/// Longest element w_pi of the parabolic subgroup W_pi; pi = all gives w0.
inline WeylElement longest_element(const RootSystemPtr &rs, SimpleSet pi) {
  rs->check_subset(pi);
  IntMatrix m = IntMatrix::identity(rs->rank());
  // keep right-multiplying by an ascent inside pi until none is left
  for (;;) {
    int ascent = -1;
    for (int i : pi.indices()) {
      for (int r = 0; r < rs->rank(); ++r)
        if (m(r, i - 1) != 0) {
          if (m(r, i - 1) > 0) ascent = i;
          break;
        }
      if (ascent > 0) break;
    }
    if (ascent < 0) break;
    WeylElement::right_mul_simple(*rs, m, ascent);
  }
  return WeylElement::from_matrix(rs, m);
}

inline WeylElement longest_element(const RootSystemPtr &rs) {
  return longest_element(rs, SimpleSet::full(rs->rank()));
}

/// Bruhat order. Scans a reduced word of w from the right and strips a
/// letter from u whenever it is a right descent of what is left of u;
/// u <= w iff nothing of u remains.
inline bool bruhat_leq(const WeylElement &u, const WeylElement &w) {
  if (u.root_system()->type() != w.root_system()->type())
    throw std::invalid_argument("bruhat_leq: elements from different root systems");
  if (u.length() > w.length()) return false;
  if (u.length() == w.length()) return u == w;
  const Word word = w.reduced_word();
  const auto &rs = *u.root_system();
  IntMatrix cur = u.matrix();
  int remaining = u.length();
  for (auto it = word.rbegin(); it != word.rend() && remaining > 0; ++it) {
    const int c = *it - 1;
    for (int r = 0; r < rs.rank(); ++r)
      if (cur(r, c) != 0) {
        if (cur(r, c) < 0) {
          WeylElement::right_mul_simple(rs, cur, *it);
          --remaining;
        }
        break;
      }
  }
  return remaining == 0;
}

/// Rank of 1 - w over Q.
inline int rank_one_minus(const WeylElement &w) { return rank(IntMatrix::identity(w.rank()) - w.matrix()); }

/// {i : w(alpha_i) = alpha_i}.
inline SimpleSet fixed_simples(const WeylElement &w) {
  SimpleSet s;
  for (int i = 1; i <= w.rank(); ++i)
    if (w.image_of_simple(i) == LatticeVector::unit(w.rank(), i - 1)) s.insert(i);
  return s;
}

/// Inversion set {beta in Phi+ : w(beta) < 0}.
inline std::vector<LatticeVector> inversion_set(const WeylElement &w) {
  std::vector<LatticeVector> out;
  for (const auto &beta : w.root_system()->positive_roots())
    if (w.apply(beta).is_nonpositive()) out.push_back(beta);
  return out;
}

/// theta = -w0 as a permutation of simple indices: result[i-1] = j where
/// -w0(alpha_i) = alpha_j.
inline std::vector<int> theta(const RootSystemPtr &rs) {
  const WeylElement w0 = longest_element(rs);
  std::vector<int> perm(rs->rank());
  for (int i = 1; i <= rs->rank(); ++i) {
    const LatticeVector img = -w0.image_of_simple(i);
    const auto sup = img.support();
    if (sup.size() != 1 || img[sup[0]] != 1) throw std::logic_error("-w0 does not permute the simple roots");
    perm[i - 1] = sup[0] + 1;
  }
  return perm;
}

inline bool w0_is_minus_one(const RootSystemPtr &rs) {
  return longest_element(rs).matrix() == -IntMatrix::identity(rs->rank());
}

/// |W| from the classical formulas.
inline long long weyl_group_order(RootSystemType t) {
  auto fact = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
  case Family::A: return fact(n + 1);
  case Family::B:
  case Family::C: return (1LL << n) * fact(n);
  case Family::D: return (1LL << (n - 1)) * fact(n);
  case Family::E: return n == 6 ? 51840LL : n == 7 ? 2903040LL : 696729600LL;
  case Family::F: return 1152;
  case Family::G: return 12;
  }
  return 0;
}

} // namespace sphorb

template <> struct std::hash<sphorb::WeylElement> {
  std::size_t operator()(const sphorb::WeylElement &w) const noexcept { return w.hash(); }
};
