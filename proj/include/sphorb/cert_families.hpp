#pragma once

// Closed-form certificate families for the classical types. Each generator
// walks the admissible pi of one type and emits (gamma, sigma) pairs.
//
// Notation: sum(a, b) = alpha_a + ... + alpha_b (zero when a > b);
// up(a, b) = [a, a+1, ..., b] and down(a, b) = [a, a-1, ..., b], both empty
// when the range runs the wrong way.

#include "sphorb/certs.hpp"

namespace sphorb::families {

namespace detail {

inline Word up(int a, int b) {
  Word w;
  for (int p = a; p <= b; ++p) w.push_back(p);
  return w;
}

inline Word down(int a, int b) {
  Word w;
  for (int p = a; p >= b; --p) w.push_back(p);
  return w;
}

inline Word cat(Word a, const Word &b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline LatticeVector sum(int n, int a, int b, int coeff = 1) {
  LatticeVector v(n);
  for (int p = a; p <= b; ++p) v[p - 1] += coeff;
  return v;
}

class Emitter {
public:
  Emitter(RootSystemPtr rs, SimpleSet pi) : rs_(std::move(rs)), pi_(pi) {}

  void operator()(const LatticeVector &gamma, Word sigma, const std::string &tag) {
    const std::string label = rs_->name() + " pi=" + pi_.str() + " " + tag;
    if (!rs_->is_positive_root(gamma))
      throw std::logic_error("family generator: " + label + " gives non-root " + gamma.str());
    if (RootSystem::supported_on(gamma, pi_))
      throw std::logic_error("family generator: " + label + " gives a root of Phi(pi)");
    out.push_back({rs_->type(), pi_, gamma, std::move(sigma), std::nullopt, label});
  }

  bool orthogonal_to_pi(const LatticeVector &gamma) const {
    for (int a : pi_.indices())
      if (rs_->cartan_pairing(gamma, a) != 0) return false;
    return true;
  }

  std::vector<ExclusionCert> out;

private:
  RootSystemPtr rs_;
  SimpleSet pi_;
};

struct Shape {
  SimpleSet tail;          // component containing alpha_n (B, C)
  int l = 0;               // smallest index of the tail, n+1 when absent
  std::vector<int> isolated; // singleton components other than {n}
};

inline Shape shape_of(const RootSystem &rs, SimpleSet pi) {
  const int n = rs.rank();
  Shape s;
  s.l = n + 1;
  for (const SimpleSet c : rs.components(pi)) {
    if (c.contains(n)) {
      s.tail = c;
      s.l = c.indices().front();
    } else if (c.size() == 1) {
      s.isolated.push_back(c.indices().front());
    }
  }
  return s;
}

inline std::string ij(int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); }

} // namespace detail

/// A_n: pi = {alpha_l..alpha_{n-l+1}} (including the empty set).
inline std::vector<ExclusionCert> type_a(int n) {
  using namespace detail;
  const auto rs = RootSystem::get(RootSystemType::make(Family::A, n));
  std::vector<ExclusionCert> out;
  for (const auto &d : enumerate_pi(rs)) {
    if (d.central) continue;
    const SimpleSet pi = d.pi;
    Emitter emit(rs, pi);
    const int l = pi.empty() ? (n + 3) / 2 : pi.indices().front();
    // roots adjacent to pi, for each alpha_i in pi
    for (int i : pi.indices()) {
      for (int t = 1; t <= l - 1; ++t) emit(sum(n, t, i - 1), up(t, i - 1), "mu " + ij(i, t));
      for (int t = n - l + 2; t <= n; ++t) emit(sum(n, i + 1, t), down(t, i + 1), "nu " + ij(i, t));
    }
    // roots orthogonal to pi that theta does not fix
    for (int j = 1; j <= n; ++j)
      for (int t = j + 1; t <= n; ++t) {
        if (t == n - j + 1) continue;
        const LatticeVector g = sum(n, j, t);
        if (!emit.orthogonal_to_pi(g)) continue;
        const std::string tag = "orth j=" + std::to_string(j) + " t=" + std::to_string(t);
        if (j <= l - 1 && t >= n - l + 1)
          emit(g, t > n - j + 1 ? up(j, t) : down(t, j), tag);
        else if (t <= l - 2 || n - l + 3 <= j)
          emit(g, up(j, t), tag);
      }
    out.insert(out.end(), emit.out.begin(), emit.out.end());
  }
  return out;
}

/// B_n: pi = {alpha_l..alpha_n} and the alternating family.
inline std::vector<ExclusionCert> type_b(int n) {
  using namespace detail;
  const auto rs = RootSystem::get(RootSystemType::make(Family::B, n));
  std::vector<ExclusionCert> out;
  for (const auto &d : enumerate_pi(rs)) {
    if (d.central || d.pi.empty()) continue;
    Emitter emit(rs, d.pi);
    const Shape s = shape_of(*rs, d.pi);
    // nu_j = sum(j, i) + 2 sum(i+1, n), sigma = up(j, n) down(n-1, i+1)
    auto nu = [&](int i, int j) { return sum(n, j, i) + sum(n, i + 1, n, 2); };
    auto tau = [&](int i, int j) { return cat(up(j, n), down(n - 1, i + 1)); };
    for (int i : s.tail.indices()) {
      if (i == n) continue;
      for (int j = 1; j < s.l; ++j) {
        emit(sum(n, j, i - 1), up(j, i - 1), "tail mu " + ij(i, j));
        emit(nu(i, j), tau(i, j), "tail nu " + ij(i, j));
      }
    }
    for (int i : s.isolated) {
      for (int j = 1; j < i - 1; ++j) emit(sum(n, j, i - 1), up(j, i - 1), "isolated mu " + ij(i, j));
      for (int j = i + 2; j <= n; ++j) emit(sum(n, i + 1, j), down(j, i + 1), "isolated mu' " + ij(i, j));
      for (int j = 1; j < i; ++j) emit(nu(i, j), tau(i, j), "isolated nu " + ij(i, j));
      for (int j = i + 2; j <= n; ++j)
        emit(sum(n, i + 1, j - 1) + sum(n, j, n, 2), cat(up(j - 1, n - 1), down(n, i + 1)),
             "isolated nu' " + ij(i, j));
    }
    if (!s.tail.empty() && s.isolated.empty())
      for (int j = 1; j < s.l; ++j) {
        emit(sum(n, j, n - 1), up(j, n - 1), "gamma j=" + std::to_string(j));
        emit(sum(n, j, n - 1) + sum(n, n, n, 2), cat(up(j, n - 1), {n}), "gamma+2a_n j=" + std::to_string(j));
      }
    out.insert(out.end(), emit.out.begin(), emit.out.end());
  }
  return out;
}

/// C_n, n >= 3: same pi as in type B.
inline std::vector<ExclusionCert> type_c(int n) {
  using namespace detail;
  if (n < 3) throw std::invalid_argument("type_c certificates need n >= 3");
  const auto rs = RootSystem::get(RootSystemType::make(Family::C, n));
  std::vector<ExclusionCert> out;
  for (const auto &d : enumerate_pi(rs)) {
    if (d.central || d.pi.empty()) continue;
    Emitter emit(rs, d.pi);
    const Shape s = shape_of(*rs, d.pi);
    // nu_ji = sum(j, i) + 2 sum(i+1, n-1) + alpha_n, sigma = up(j, n-1) down(n, i+1)
    auto nu = [&](int i, int j) { return sum(n, j, i) + sum(n, i + 1, n - 1, 2) + sum(n, n, n); };
    auto tau = [&](int i, int j) { return cat(up(j, n - 1), down(n, i + 1)); };
    if (!s.tail.empty())
      for (int j = 1; j < s.l; ++j) emit(sum(n, j, n - 1), up(j, n - 1), "mu j=" + std::to_string(j));
    for (int i : s.tail.indices()) {
      if (i == n) continue;
      for (int j = 1; j < s.l; ++j) {
        emit(sum(n, j, i - 1), up(j, i - 1), "tail mu " + ij(i, j));
        emit(nu(i, j), tau(i, j), "tail nu " + ij(i, j));
      }
    }
    for (int i : s.isolated) {
      for (int j = 1; j < i; ++j) emit(sum(n, j, i - 1), up(j, i - 1), "isolated mu " + ij(i, j));
      for (int j = i + 2; j <= n - 1; ++j) emit(sum(n, i + 1, j), down(j, i + 1), "isolated mu' " + ij(i, j));
      for (int j = i + 2; j <= n; ++j)
        emit(sum(n, i + 1, j - 1) + sum(n, j, n - 1, 2) + sum(n, n, n), cat(up(j - 1, n - 1), down(n, i + 1)),
             "isolated delta " + ij(i, j));
      for (int j = 1; j < i; ++j) emit(nu(i, j), tau(i, j), "isolated nu " + ij(i, j));
      emit(sum(n, i + 1, n - 1, 2) + sum(n, n, n), down(n, i + 1), "isolated nu-a_i i=" + std::to_string(i));
    }
    if (!s.isolated.empty())
      for (int j = 1; j < s.l; ++j)
        emit(sum(n, j, n - 1, 2) + sum(n, n, n), down(n, j), "nu+a_j j=" + std::to_string(j));
    out.insert(out.end(), emit.out.begin(), emit.out.end());
  }
  return out;
}

/// D_n with n odd, for pi without a component through alpha_{n-1}, alpha_n:
/// gamma = sum(j, n-2) + alpha_q, q in {n-1, n}, orthogonal to pi.
inline std::vector<ExclusionCert> type_d_odd(int n) {
  using namespace detail;
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("type_d_odd certificates need odd n >= 5");
  const auto rs = RootSystem::get(RootSystemType::make(Family::D, n));
  std::vector<ExclusionCert> out;
  for (const auto &d : enumerate_pi(rs)) {
    if (d.central || d.pi.contains(n - 1) || d.pi.contains(n)) continue;
    Emitter emit(rs, d.pi);
    for (int j = 1; j <= n - 2; ++j)
      for (int q : {n - 1, n}) {
        const LatticeVector g = sum(n, j, n - 2) + sum(n, q, q);
        if (!emit.orthogonal_to_pi(g)) continue;
        emit(g, cat(up(j, n - 2), {q}), "orth j=" + std::to_string(j) + " q=" + std::to_string(q));
      }
    out.insert(out.end(), emit.out.begin(), emit.out.end());
  }
  return out;
}

} // namespace sphorb::families
