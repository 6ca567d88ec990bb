#pragma once

// Exclusion certificates: a root gamma outside Phi(pi) together with a word
// sigma = s_{i_t} .. s_{i_1}, checked against
//   cond1  sigma(gamma) = -alpha_{i_t}
//   cond3  u(alpha_{i_t}) in Phi+ \ {alpha_{i_t}},  u = sigma w sigma^-1
//   cond4  u s_{i_t} is not an involution
// with w = w0 w_pi. The cond2 roots s_{i_1}..s_{i_j}(alpha_{i_{j+1}}),
// j = 0..t-2, are only listed; deciding whether they occur is out of reach.

#include "sphorb/spherical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphorb {

struct ExclusionCert {
  RootSystemType type;
  SimpleSet pi;
  LatticeVector gamma;
  Word sigma; // [i_t, ..., i_1], leftmost factor first
  std::optional<std::vector<LatticeVector>> expected_cond2;
  std::string label;
};

struct CertReport {
  bool cond1 = false;
  std::vector<LatticeVector> cond2_witnesses;
  std::optional<bool> cond2_match;
  bool cond3 = false;
  bool cond4_noninvolution = false;
  bool pass = false;
  LatticeVector sigma_gamma;  // sigma(gamma)
  LatticeVector conjugate_image; // u(alpha_{i_t})
  std::string error;          // set when the certificate is malformed
};

class CertError : public std::invalid_argument {
public:
  CertError(const std::string &label, const std::string &what)
      : std::invalid_argument((label.empty() ? std::string("certificate") : "certificate '" + label + "'") + ": " +
                              what) {}
};

/// Throws CertError when the certificate is malformed.
inline void validate(const ExclusionCert &c) {
  const auto rs = RootSystem::get(c.type);
  if (c.sigma.empty()) throw CertError(c.label, "sigma word is empty");
  for (int i : c.sigma)
    if (i < 1 || i > rs->rank())
      throw CertError(c.label, "sigma letter " + std::to_string(i) + " out of range for " + rs->name());
  if (c.pi.max_index() > rs->rank()) throw CertError(c.label, "pi " + c.pi.str() + " out of range");
  if (c.gamma.dim() != rs->rank()) throw CertError(c.label, "gamma " + c.gamma.str() + " has the wrong length");
  if (!rs->is_root(c.gamma)) throw CertError(c.label, "gamma " + c.gamma.str() + " is not a root");
  if (!rs->is_positive_root(c.gamma)) throw CertError(c.label, "gamma " + c.gamma.str() + " is not positive");
  if (RootSystem::supported_on(c.gamma, c.pi))
    throw CertError(c.label, "gamma " + c.gamma.str() + " lies in Phi(pi)");
  if (!is_admissible(rs, c.pi)) throw CertError(c.label, "pi " + c.pi.str() + " is not admissible");
  if (c.expected_cond2)
    for (const auto &r : *c.expected_cond2)
      if (r.dim() != rs->rank()) throw CertError(c.label, "expected cond2 root " + r.str() + " has the wrong length");
}

/// The cond2 roots s_{i_1}..s_{i_j}(alpha_{i_{j+1}}) for j = 0..t-2.
inline std::vector<LatticeVector> cond2_witnesses(const RootSystemPtr &rs, const Word &sigma) {
  const int t = static_cast<int>(sigma.size());
  auto letter = [&](int k) { return sigma[t - k]; }; // i_k
  std::vector<LatticeVector> out;
  for (int j = 0; j <= t - 2; ++j) {
    LatticeVector v = rs->simple_root(letter(j + 1));
    for (int k = j; k >= 1; --k) v = rs->reflect(letter(k), v);
    out.push_back(v);
  }
  return out;
}

inline CertReport verify(const ExclusionCert &c) {
  validate(c);
  const auto rs = RootSystem::get(c.type);
  CertReport r;
  const int it = c.sigma.front();
  const LatticeVector a_it = rs->simple_root(it);
  const WeylElement sigma = WeylElement::from_word(rs, c.sigma);
  r.sigma_gamma = sigma.apply(c.gamma);
  r.cond1 = r.sigma_gamma == -a_it;

  r.cond2_witnesses = cond2_witnesses(rs, c.sigma);
  if (c.expected_cond2) r.cond2_match = r.cond2_witnesses == *c.expected_cond2;

  const WeylElement w = longest_element(rs) * longest_element(rs, c.pi);
  const WeylElement u = sigma * w * sigma.inverse();
  r.conjugate_image = u.apply(a_it);
  r.cond3 = rs->is_positive_root(r.conjugate_image) && r.conjugate_image != a_it;
  r.cond4_noninvolution = !(u.times_simple(it)).is_involution();
  r.pass = r.cond1 && r.cond3 && r.cond4_noninvolution;
  return r;
}

struct VerifySummary {
  int passed = 0;
  int failed = 0;
  std::vector<CertReport> reports;
};

/// Malformed certificates count as failures with CertReport::error set.
inline VerifySummary verify_all(const std::vector<ExclusionCert> &certs) {
  VerifySummary s;
  for (const auto &c : certs) {
    CertReport r;
    try {
      r = verify(c);
    } catch (const std::exception &e) {
      r.error = e.what();
    }
    (r.pass ? s.passed : s.failed) += 1;
    s.reports.push_back(std::move(r));
  }
  return s;
}

/// Human-readable list of the conditions that failed.
inline std::string failed_conditions(const CertReport &r) {
  if (!r.error.empty()) return "error: " + r.error;
  std::string s;
  auto add = [&](const char *what) { s += (s.empty() ? "" : ", ") + std::string(what); };
  if (!r.cond1) add("cond1");
  if (!r.cond3) add("cond3");
  if (!r.cond4_noninvolution) add("cond4");
  if (r.cond2_match && !*r.cond2_match) add("cond2 mismatch");
  return s;
}

} // namespace sphorb
