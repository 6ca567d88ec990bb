#pragma once

// Finite crystallographic root systems A-G in Bourbaki numbering.
//
// Conventions used throughout the library:
//   - simple indices in the public API are 1-based (alpha_1 .. alpha_n);
//   - LatticeVector storage is 0-based (v[0] is the alpha_1 coefficient);
//   - cartan()(i, j) = <alpha_{i+1}, alpha_{j+1}^vee>.

#include "sphorb/lattice.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sphorb {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  /// Rank constraints: A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2,
  /// and rank <= 8 for storage.
  static std::optional<std::string> invalid_reason(Family f, int n) {
    auto bad = [&](const char *what) {
      return std::string("invalid type ") + static_cast<char>(f) + std::to_string(n) + ": " + what;
    };
    if (n < 1) return bad("rank must be positive");
    if (n > kMaxRank) return bad("rank above 8 is not supported");
    switch (f) {
    case Family::A: return std::nullopt;
    case Family::B:
    case Family::C: return n >= 2 ? std::nullopt : std::optional(bad("rank must be at least 2"));
    case Family::D: return n >= 3 ? std::nullopt : std::optional(bad("rank must be at least 3"));
    case Family::E: return (n >= 6 && n <= 8) ? std::nullopt : std::optional(bad("rank must be 6, 7 or 8"));
    case Family::F: return n == 4 ? std::nullopt : std::optional(bad("rank must be 4"));
    case Family::G: return n == 2 ? std::nullopt : std::optional(bad("rank must be 2"));
    }
    return bad("unknown family");
  }

  static RootSystemType make(Family f, int n) {
    if (auto why = invalid_reason(f, n)) throw std::invalid_argument(*why);
    return {f, n};
  }

  /// Parses strings such as "B3" or "e8".
  static RootSystemType parse(std::string_view s) {
    if (s.size() < 2) throw std::invalid_argument("invalid type string '" + std::string(s) + "'");
    char c = s[0];
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    if (c < 'A' || c > 'G') throw std::invalid_argument("unknown family in '" + std::string(s) + "'");
    int n = 0;
    for (char d : s.substr(1)) {
      if (d < '0' || d > '9' || n > 100) throw std::invalid_argument("invalid rank in '" + std::string(s) + "'");
      n = n * 10 + (d - '0');
    }
    return make(static_cast<Family>(c), n);
  }

  std::string name() const { return static_cast<char>(family) + std::to_string(rank); }

  friend bool operator==(const RootSystemType &, const RootSystemType &) = default;
  friend auto operator<=>(const RootSystemType &, const RootSystemType &) = default;
};

/// Every valid type of rank <= max_rank, in family order.
inline std::vector<RootSystemType> all_types(int max_rank = kMaxRank) {
  std::vector<RootSystemType> out;
  for (char f : std::string_view("ABCDEFG"))
    for (int n = 1; n <= max_rank; ++n)
      if (!RootSystemType::invalid_reason(static_cast<Family>(f), n)) out.push_back({static_cast<Family>(f), n});
  return out;
}

/// Subset of simple indices, stored as a bitmask (bit i-1 <-> alpha_i).
class SimpleSet {
public:
  constexpr SimpleSet() = default;
  constexpr explicit SimpleSet(std::uint32_t mask) : mask_(mask) {}
  SimpleSet(std::initializer_list<int> idx) {
    for (int i : idx) insert(i);
  }
  static SimpleSet from_indices(const std::vector<int> &idx) {
    SimpleSet s;
    for (int i : idx) s.insert(i);
    return s;
  }
  static constexpr SimpleSet full(int n) { return SimpleSet((1u << n) - 1u); }
  static SimpleSet interval(int lo, int hi) {
    SimpleSet s;
    for (int i = lo; i <= hi; ++i) s.insert(i);
    return s;
  }

  void insert(int i) {
    if (i < 1 || i > 31) throw std::out_of_range("simple index out of range: " + std::to_string(i));
    mask_ |= 1u << (i - 1);
  }
  void erase(int i) { mask_ &= ~(1u << (i - 1)); }
  constexpr bool contains(int i) const { return i >= 1 && i <= 31 && ((mask_ >> (i - 1)) & 1u); }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::uint32_t mask() const { return mask_; }
  /// Largest index present, or 0.
  constexpr int max_index() const { return 32 - std::countl_zero(mask_); }

  std::vector<int> indices() const {
    std::vector<int> v;
    for (int i = 1; i <= 31; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }

  friend constexpr SimpleSet operator|(SimpleSet a, SimpleSet b) { return SimpleSet(a.mask_ | b.mask_); }
  friend constexpr SimpleSet operator&(SimpleSet a, SimpleSet b) { return SimpleSet(a.mask_ & b.mask_); }
  friend constexpr SimpleSet operator-(SimpleSet a, SimpleSet b) { return SimpleSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(SimpleSet, SimpleSet) = default;

  /// Orders by size, then lexicographically by sorted index list.
  friend bool operator<(const SimpleSet &a, const SimpleSet &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      s += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
    return s + "}";
  }

private:
  std::uint32_t mask_ = 0;
};

enum class RootLength { Long, Short };

/// Immutable root system. Obtain instances through build() or get().
class RootSystem {
public:
  static std::shared_ptr<const RootSystem> build(RootSystemType t) {
    return std::shared_ptr<const RootSystem>(new RootSystem(t));
  }

  /// Process-wide cached instance.
  static std::shared_ptr<const RootSystem> get(RootSystemType t) {
    static std::mutex mu;
    static std::map<RootSystemType, std::shared_ptr<const RootSystem>> cache;
    std::lock_guard lock(mu);
    auto &slot = cache[t];
    if (!slot) slot = build(t);
    return slot;
  }
  static std::shared_ptr<const RootSystem> get(std::string_view name) { return get(RootSystemType::parse(name)); }

  const RootSystemType &type() const noexcept { return type_; }
  std::string name() const { return type_.name(); }
  int rank() const noexcept { return type_.rank; }
  const IntMatrix &cartan() const noexcept { return cartan_; }

  /// Positive roots sorted by height, ties broken lexicographically.
  const std::vector<LatticeVector> &positive_roots() const noexcept { return positive_; }
  int num_positive_roots() const noexcept { return static_cast<int>(positive_.size()); }

  LatticeVector simple_root(int i) const {
    check_index(i);
    return LatticeVector::unit(rank(), i - 1);
  }

  void check_index(int i) const {
    if (i < 1 || i > rank())
      throw std::out_of_range("simple index " + std::to_string(i) + " out of range for " + name());
  }
  void check_subset(SimpleSet s) const {
    if (s.max_index() > rank()) throw std::out_of_range("subset " + s.str() + " out of range for " + name());
  }
  void check_vector(const LatticeVector &v) const {
    if (v.dim() != rank())
      throw std::invalid_argument("vector " + v.str() + " has wrong length for " + name());
  }

  /// <lambda, alpha_i^vee>.
  int cartan_pairing(const LatticeVector &lambda, int i) const {
    check_index(i);
    check_vector(lambda);
    return pairing0(lambda, i - 1);
  }

  /// s_i(v) = v - <v, alpha_i^vee> alpha_i.
  LatticeVector reflect(int i, const LatticeVector &v) const {
    check_index(i);
    check_vector(v);
    LatticeVector out = v;
    out[i - 1] -= pairing0(v, i - 1);
    return out;
  }

  bool is_root(const LatticeVector &v) const { return v.dim() == rank() && index_.contains(v); }
  bool is_positive_root(const LatticeVector &v) const { return is_root(v) && v.is_nonnegative(); }

  /// Position of a positive root in positive_roots().
  std::optional<int> positive_index(const LatticeVector &v) const {
    auto it = index_.find(v);
    if (it == index_.end() || it->second < 0) return std::nullopt;
    return it->second;
  }

  std::optional<LatticeVector> root_sum(const LatticeVector &a, const LatticeVector &b) const {
    check_vector(a);
    check_vector(b);
    LatticeVector s = a + b;
    if (is_root(s)) return s;
    return std::nullopt;
  }

  /// 2(u,v) in the normalisation where the shortest simple root has
  /// (a,a) = 1. Exact; used only for orthogonality and length tests.
  int scaled_inner(const LatticeVector &u, const LatticeVector &v) const {
    int s = 0;
    for (int i = 0; i < rank(); ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < rank(); ++j) s += u[i] * v[j] * cartan_(i, j) * norm_[j];
    }
    return s;
  }

  /// Inner product normalised so that long roots have squared length 2.
  double inner_product(const LatticeVector &u, const LatticeVector &v) const {
    return static_cast<double>(scaled_inner(u, v)) / long_norm_;
  }

  bool orthogonal(const LatticeVector &u, const LatticeVector &v) const { return scaled_inner(u, v) == 0; }

  /// Simply laced types classify every root as long.
  RootLength length_of(const LatticeVector &root) const {
    if (!is_root(root)) throw std::invalid_argument(root.str() + " is not a root of " + name());
    return scaled_inner(root, root) == 2 * long_norm_ ? RootLength::Long : RootLength::Short;
  }

  bool simply_laced() const noexcept {
    return type_.family == Family::A || type_.family == Family::D || type_.family == Family::E;
  }

  /// Symmetriser d_i = (alpha_i, alpha_i), scaled so the smallest is 1.
  int symmetrizer(int i) const {
    check_index(i);
    return norm_[i - 1];
  }

  /// Minimal length of sigma in W with sigma(beta) negative, found by BFS
  /// over simple reflections acting on roots.
  int depth(const LatticeVector &beta) const {
    if (!is_positive_root(beta)) throw std::invalid_argument(beta.str() + " is not a positive root of " + name());
    std::unordered_map<LatticeVector, int> dist{{beta, 0}};
    std::deque<LatticeVector> queue{beta};
    while (!queue.empty()) {
      const LatticeVector cur = queue.front();
      queue.pop_front();
      const int d = dist[cur];
      for (int i = 0; i < rank(); ++i) {
        LatticeVector next = cur;
        next[i] -= pairing0(cur, i);
        if (!next.is_nonnegative()) return d + 1;
        if (dist.emplace(next, d + 1).second) queue.push_back(next);
      }
    }
    throw std::logic_error("depth search exhausted without reaching a negative root");
  }

  /// A shortest word [i_1..i_k] with s_{i_k}..s_{i_1}(beta) simple, and that
  /// simple index. k = depth(beta) - 1.
  std::pair<std::vector<int>, int> descent_to_simple(const LatticeVector &beta) const {
    if (!is_positive_root(beta)) throw std::invalid_argument(beta.str() + " is not a positive root of " + name());
    std::unordered_map<LatticeVector, std::pair<LatticeVector, int>> parent{{beta, {beta, 0}}};
    std::deque<LatticeVector> queue{beta};
    while (!queue.empty()) {
      const LatticeVector cur = queue.front();
      queue.pop_front();
      if (cur.height() == 1) {
        std::vector<int> word;
        for (LatticeVector v = cur; v != beta; v = parent.at(v).first) word.push_back(parent.at(v).second);
        std::reverse(word.begin(), word.end());
        return {word, cur.support().front() + 1};
      }
      for (int i = 0; i < rank(); ++i) {
        LatticeVector next = cur;
        next[i] -= pairing0(cur, i);
        if (next.is_nonnegative() && parent.emplace(next, std::pair{cur, i + 1}).second) queue.push_back(next);
      }
    }
    throw std::logic_error("descent search exhausted without reaching a simple root");
  }

  /// Positive roots supported on pi.
  std::vector<LatticeVector> subsystem_positive_roots(SimpleSet pi) const {
    check_subset(pi);
    std::vector<LatticeVector> out;
    for (const auto &r : positive_)
      if (supported_on(r, pi)) out.push_back(r);
    return out;
  }

  static bool supported_on(const LatticeVector &v, SimpleSet pi) {
    for (int i : v.support())
      if (!pi.contains(i + 1)) return false;
    return true;
  }

  const LatticeVector &highest_root() const noexcept { return positive_.back(); }

  /// Classical |Phi^+| for the type.
  static int classical_positive_count(RootSystemType t) {
    const int n = t.rank;
    switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return -1;
  }

  /// Dynkin adjacency: i ~ j iff cartan(i,j) != 0 with i != j (1-based).
  bool adjacent(int i, int j) const { return i != j && cartan_(i - 1, j - 1) != 0; }

  /// Connected components of the Dynkin subdiagram on pi.
  std::vector<SimpleSet> components(SimpleSet pi) const {
    check_subset(pi);
    std::vector<SimpleSet> out;
    SimpleSet left = pi;
    while (!left.empty()) {
      const int start = left.indices().front();
      SimpleSet comp{start};
      std::vector<int> stack{start};
      while (!stack.empty()) {
        const int a = stack.back();
        stack.pop_back();
        for (int b : left.indices())
          if (!comp.contains(b) && adjacent(a, b)) {
            comp.insert(b);
            stack.push_back(b);
          }
      }
      out.push_back(comp);
      left = left - comp;
    }
    return out;
  }

private:
  explicit RootSystem(RootSystemType t) : type_(t) {
    if (auto why = RootSystemType::invalid_reason(t.family, t.rank)) throw std::invalid_argument(*why);
    cartan_ = make_cartan(t);
    compute_norms();
    enumerate_roots();
  }

  int pairing0(const LatticeVector &v, int i) const noexcept {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += v[j] * cartan_(j, i);
    return s;
  }

  struct Bond {
    int a, b;   // 1-based
    int ab, ba; // <alpha_a, alpha_b^vee>, <alpha_b, alpha_a^vee>
  };

  static IntMatrix make_cartan(RootSystemType t) {
    const int n = t.rank;
    std::vector<Bond> bonds;
    auto chain = [&](int lo, int hi) {
      for (int i = lo; i < hi; ++i) bonds.push_back({i, i + 1, -1, -1});
    };
    switch (t.family) {
    case Family::A: chain(1, n); break;
    case Family::B:
      chain(1, n - 1);
      bonds.push_back({n - 1, n, -2, -1});
      break;
    case Family::C:
      chain(1, n - 1);
      bonds.push_back({n - 1, n, -1, -2});
      break;
    case Family::D:
      chain(1, n - 2);
      bonds.push_back({n - 2, n - 1, -1, -1});
      bonds.push_back({n - 2, n, -1, -1});
      break;
    case Family::E:
      bonds.push_back({1, 3, -1, -1});
      bonds.push_back({2, 4, -1, -1});
      chain(3, n);
      break;
    case Family::F:
      bonds.push_back({1, 2, -1, -1});
      bonds.push_back({2, 3, -2, -1});
      bonds.push_back({3, 4, -1, -1});
      break;
    case Family::G: bonds.push_back({1, 2, -1, -3}); break;
    }
    IntMatrix c(n);
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    for (const auto &b : bonds) {
      c(b.a - 1, b.b - 1) = b.ab;
      c(b.b - 1, b.a - 1) = b.ba;
    }
    return c;
  }

  // (alpha_a, alpha_a) / (alpha_b, alpha_b) = C(a,b) / C(b,a) along each bond
  void compute_norms() {
    const int n = rank();
    std::vector<std::int64_t> num(n, 0), den(n, 1);
    num[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b) {
        if (b == a || cartan_(a, b) == 0 || num[b] != 0) continue;
        num[b] = num[a] * cartan_(b, a);
        den[b] = den[a] * cartan_(a, b);
        const std::int64_t g = std::gcd(num[b], den[b]);
        num[b] /= g;
        den[b] /= g;
        if (den[b] < 0) {
          num[b] = -num[b];
          den[b] = -den[b];
        }
        stack.push_back(b);
      }
    }
    std::int64_t l = 1;
    for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
    std::int64_t g = 0;
    for (int i = 0; i < n; ++i) g = std::gcd(g, num[i] * (l / den[i]));
    long_norm_ = 0;
    for (int i = 0; i < n; ++i) {
      norm_[i] = static_cast<int>(num[i] * (l / den[i]) / g);
      long_norm_ = std::max(long_norm_, norm_[i]);
    }
  }

  void enumerate_roots() {
    const int n = rank();
    std::vector<LatticeVector> found;
    std::unordered_map<LatticeVector, int> seen;
    std::deque<LatticeVector> queue;
    for (int i = 0; i < n; ++i) {
      auto s = LatticeVector::unit(n, i);
      seen.emplace(s, 0);
      queue.push_back(s);
    }
    while (!queue.empty()) {
      const LatticeVector cur = queue.front();
      queue.pop_front();
      found.push_back(cur);
      for (int i = 0; i < n; ++i) {
        LatticeVector next = cur;
        next[i] -= pairing0(cur, i);
        if (seen.emplace(next, 0).second) queue.push_back(next);
      }
    }
    for (const auto &r : found)
      if (r.is_nonnegative()) positive_.push_back(r);
    std::sort(positive_.begin(), positive_.end(), [](const LatticeVector &a, const LatticeVector &b) {
      if (a.height() != b.height()) return a.height() < b.height();
      return a < b;
    });
    for (int k = 0; k < static_cast<int>(positive_.size()); ++k) {
      index_.emplace(positive_[k], k);
      index_.emplace(-positive_[k], -k - 1);
    }
    if (static_cast<int>(found.size()) != 2 * num_positive_roots() ||
        num_positive_roots() != classical_positive_count(type_))
      throw std::logic_error("root enumeration for " + name() + " produced " + std::to_string(found.size()) +
                             " roots");
  }

  RootSystemType type_;
  IntMatrix cartan_;
  std::array<int, kMaxRank> norm_{};
  int long_norm_ = 1;
  std::vector<LatticeVector> positive_;
  std::unordered_map<LatticeVector, int> index_; // >= 0 positive index, < 0 negative
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

} // namespace sphorb
