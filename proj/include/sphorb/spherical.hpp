#pragma once

// Admissible fixed-root subsets pi of the simple roots, the element
// w = w0 w_pi attached to each one, and the dimension l(w) + rk(1 - w).

#include "sphorb/weyl.hpp"

#include <optional>

namespace sphorb {

/// Fix(w0 w_pi) restricted to the simple roots is exactly pi.
inline bool is_admissible(const RootSystemPtr &rs, SimpleSet pi) {
  rs->check_subset(pi);
  return fixed_simples(longest_element(rs) * longest_element(rs, pi)) == pi;
}

struct QualiNoWitness {
  int alpha = 0; // the isolated root of pi
  int beta = 0;  // the offending simple root
};

/// Looks for an isolated component {alpha} of pi and a simple beta != alpha
/// with the same length as alpha, w0(beta) = -beta, (alpha, beta) != 0 and
/// beta orthogonal to pi minus alpha.
inline std::optional<QualiNoWitness> quali_no_violation(const RootSystemPtr &rs, SimpleSet pi) {
  rs->check_subset(pi);
  const WeylElement w0 = longest_element(rs);
  for (const SimpleSet comp : rs->components(pi)) {
    if (comp.size() != 1) continue;
    const int a = comp.indices().front();
    const LatticeVector alpha = rs->simple_root(a);
    for (int b = 1; b <= rs->rank(); ++b) {
      if (b == a) continue;
      const LatticeVector beta = rs->simple_root(b);
      if (rs->length_of(beta) != rs->length_of(alpha)) continue;
      if (w0.apply(beta) != -beta) continue;
      if (rs->orthogonal(alpha, beta)) continue;
      bool orth = true;
      for (int c : (pi - comp).indices()) orth = orth && rs->orthogonal(beta, rs->simple_root(c));
      if (orth) return QualiNoWitness{a, b};
    }
  }
  return std::nullopt;
}

inline bool passes_quali_no(const RootSystemPtr &rs, SimpleSet pi, QualiNoWitness *witness = nullptr) {
  const auto v = quali_no_violation(rs, pi);
  if (v && witness) *witness = *v;
  return !v;
}

struct SphericalDatum {
  RootSystemType type;
  SimpleSet pi;
  WeylElement w;
  int length = 0;
  int rank_one_minus = 0;
  int dimension = 0;
  bool central = false;
};

inline SphericalDatum make_datum(const RootSystemPtr &rs, SimpleSet pi) {
  if (!is_admissible(rs, pi))
    throw std::invalid_argument("pi = " + pi.str() + " is not admissible in " + rs->name());
  WeylElement w = longest_element(rs) * longest_element(rs, pi);
  const int rk = rank_one_minus(w);
  const int len = w.length();
  return {rs->type(), pi, std::move(w), len, rk, len + rk, pi == SimpleSet::full(rs->rank())};
}

inline constexpr int kEnumerateMaxRank = 8;

/// All pi passing both the fixed-point test and the isolated-root filter,
/// sorted by dimension and then by pi. Always contains the empty set and
/// the full set (flagged central).
inline std::vector<SphericalDatum> enumerate_pi(const RootSystemPtr &rs) {
  if (rs->rank() > kEnumerateMaxRank)
    throw std::invalid_argument("enumerate_pi: rank " + std::to_string(rs->rank()) + " exceeds the limit of 8 (" +
                                std::to_string(1u << rs->rank()) + " subsets)");
  const WeylElement w0 = longest_element(rs);
  std::vector<SphericalDatum> out;
  for (std::uint32_t mask = 0; mask < (1u << rs->rank()); ++mask) {
    const SimpleSet pi(mask);
    const WeylElement w = w0 * longest_element(rs, pi);
    if (fixed_simples(w) != pi || !passes_quali_no(rs, pi)) continue;
    const int rk = rank_one_minus(w);
    out.push_back({rs->type(), pi, w, w.length(), rk, w.length() + rk, pi == SimpleSet::full(rs->rank())});
  }
  std::sort(out.begin(), out.end(), [](const SphericalDatum &a, const SphericalDatum &b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.pi < b.pi;
  });
  return out;
}

/// l(w0 w_pi) + rk(1 - w0 w_pi).
inline int dimension(const RootSystemPtr &rs, SimpleSet pi) { return make_datum(rs, pi).dimension; }

/// n - |pi| for types with w0 = -1, checked against the matrix rank.
inline int toro1_rank(const RootSystemPtr &rs, SimpleSet pi) {
  if (!w0_is_minus_one(rs)) throw std::invalid_argument("toro1_rank: w0 != -1 in " + rs->name());
  const SphericalDatum d = make_datum(rs, pi);
  const int expected = rs->rank() - pi.size();
  if (d.rank_one_minus != expected)
    throw std::logic_error("toro1_rank: rk(1 - w) = " + std::to_string(d.rank_one_minus) + " but n - |pi| = " +
                           std::to_string(expected) + " for " + rs->name() + " pi = " + pi.str());
  return expected;
}

/// Saturated Z-basis of Ker(1 + w) in the root lattice, w = w0 w_pi.
inline std::vector<LatticeVector> neg_eigenlattice_basis(const RootSystemPtr &rs, SimpleSet pi) {
  const SphericalDatum d = make_datum(rs, pi);
  return integer_kernel_basis(IntMatrix::identity(rs->rank()) + d.w.matrix());
}

/// -w0 lambda = lambda.
inline bool is_theta_symmetric(const RootSystemPtr &rs, const LatticeVector &lambda) {
  rs->check_vector(lambda);
  return -longest_element(rs).apply(lambda) == lambda;
}

/// <lambda, alpha_i^vee> >= 0 for every i.
inline bool is_dominant(const RootSystemPtr &rs, const LatticeVector &lambda) {
  for (int i = 1; i <= rs->rank(); ++i)
    if (rs->cartan_pairing(lambda, i) < 0) return false;
  return true;
}

inline bool is_theta_stable(const RootSystemPtr &rs, SimpleSet pi) {
  const auto th = theta(rs);
  for (int i : pi.indices())
    if (!pi.contains(th[i - 1])) return false;
  return true;
}

/// Orthogonal cascade of highest roots: beta_1 is the highest root, and
/// beta_{k+1} is the highest root of the simple roots orthogonal to
/// beta_1..beta_k. Stops when the remaining simple roots equal `until`.
/// Requires the remaining diagram to stay connected (true in type A).
inline std::vector<LatticeVector> highest_root_cascade(const RootSystemPtr &rs, SimpleSet until) {
  rs->check_subset(until);
  std::vector<LatticeVector> cascade;
  SimpleSet left = SimpleSet::full(rs->rank());
  while (left != until) {
    if (left.empty() || (until - left).size() != 0)
      throw std::invalid_argument("highest_root_cascade: " + until.str() + " is not reached by the cascade in " +
                                  rs->name());
    if (rs->components(left).size() != 1)
      throw std::invalid_argument("highest_root_cascade: remaining diagram " + left.str() + " is disconnected");
    const auto sub = rs->subsystem_positive_roots(left);
    const LatticeVector beta = sub.back();
    cascade.push_back(beta);
    SimpleSet next;
    for (int i : left.indices())
      if (rs->orthogonal(beta, rs->simple_root(i))) next.insert(i);
    left = next;
  }
  return cascade;
}

} // namespace sphorb
