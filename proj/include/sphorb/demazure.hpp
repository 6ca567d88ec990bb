#pragma once

// The Demazure (0-Hecke) monoid M(W) and the involution-step dynamics.
//
// Elements m(w) of M(W) are indexed by w in W; m(s)m(w) = m(sw) when
// l(sw) > l(w) and m(w) otherwise.
//
// Geometric case labels attached to the four length cases below. They are
// documentation only: telling the sub-cases apart needs stabiliser data that
// the combinatorics does not see.
//   case 1: I
//   case 2: IIa, IIb
//   case 3: IIIa, IIIb
//   case 4: IVa, IVb

#include "sphorb/weyl.hpp"

#include <deque>
#include <sstream>
#include <unordered_set>

namespace sphorb {

/// m(w1) m(w2), returned as the Weyl element indexing the product.
inline WeylElement demazure_mul(const WeylElement &w1, const WeylElement &w2) {
  if (w1.root_system()->type() != w2.root_system()->type())
    throw std::invalid_argument("demazure_mul: elements from different root systems");
  const Word word = w1.reduced_word();
  WeylElement r = w2;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    WeylElement sr = r.simple_times(*it);
    if (sr.length() > r.length()) r = std::move(sr);
  }
  return r;
}

struct StepOutcome {
  int case_id = 0;
  std::vector<WeylElement> candidates;
};

/// Classifies (w, s_i) for an involution w into the four length cases and
/// returns the candidate set:
///   1: l(sws) = l(w)+2              -> {sws}
///   2: l(sw) > l(w), l(sws) = l(w)  -> {sw, w}
///   3: l(sw) < l(w), l(sws) = l(w)  -> {w, ws}
///   4: l(sws) = l(w)-2              -> {w}
/// In cases 2 and 3 sw = ws is checked and a logic_error is raised if not.
inline StepOutcome involution_step(const WeylElement &w, int i) {
  if (!w.is_involution()) throw std::invalid_argument("involution_step: input is not an involution");
  const auto &rs = w.root_system();
  rs->check_index(i);
  const WeylElement sw = w.simple_times(i);
  const WeylElement ws = w.times_simple(i);
  const WeylElement sws = sw.times_simple(i);
  const int l = w.length();
  StepOutcome out;
  if (sws.length() == l + 2) {
    out.case_id = 1;
    out.candidates = {sws};
  } else if (sws.length() == l - 2) {
    out.case_id = 4;
    out.candidates = {w};
  } else if (sws.length() == l) {
    if (!(sw == ws)) throw std::logic_error("involution_step: sw != ws with l(sws) = l(w)");
    if (sw.length() > l) {
      out.case_id = 2;
      out.candidates = {sw, w};
    } else {
      out.case_id = 3;
      out.candidates = {w, ws};
    }
  } else {
    throw std::logic_error("involution_step: l(sws) - l(w) outside {-2, 0, 2}");
  }
  return out;
}

inline constexpr int kReachabilityMaxRank = 4;

/// Closure of {1} under every candidate of involution_step. Guarded to
/// rank <= 4.
inline std::vector<WeylElement> involution_reachability(const RootSystemPtr &rs) {
  if (rs->rank() > kReachabilityMaxRank) {
    std::ostringstream msg;
    msg << "involution_reachability: " << rs->name() << " has rank " << rs->rank() << " > "
        << kReachabilityMaxRank << "; the closure could visit up to |W| = " << weyl_group_order(rs->type())
        << " elements";
    throw std::invalid_argument(msg.str());
  }
  std::unordered_set<WeylElement> seen;
  std::deque<WeylElement> queue;
  std::vector<WeylElement> order;
  const WeylElement one = WeylElement::identity(rs);
  seen.insert(one);
  queue.push_back(one);
  while (!queue.empty()) {
    const WeylElement w = queue.front();
    queue.pop_front();
    order.push_back(w);
    for (int i = 1; i <= rs->rank(); ++i)
      for (const auto &c : involution_step(w, i).candidates)
        if (seen.insert(c).second) queue.push_back(c);
  }
  std::sort(order.begin(), order.end(), [](const WeylElement &a, const WeylElement &b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.reduced_word() < b.reduced_word();
  });
  return order;
}

} // namespace sphorb
