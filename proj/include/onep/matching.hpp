#pragma once

// Maximum matching on general graphs and Tutte–Berge upper bounds.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onep/graph.hpp"

namespace onep {

struct TutteBergeCertificate {
  std::vector<VertexId> separator;  ///< U, sorted
  std::size_t odd_components = 0;   ///< odd components of G − U
  std::size_t bound = 0;            ///< ⌊(n − (oc − |U|)) / 2⌋
};

struct MatchingResult {
  std::vector<std::pair<VertexId, VertexId>> matching;
  std::optional<TutteBergeCertificate> certificate;

  [[nodiscard]] std::size_t size() const noexcept { return matching.size(); }

  /// Every pair is an edge of g and no vertex is used twice.
  [[nodiscard]] bool is_matching_of(const UndirectedSimpleGraph& g) const {
    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& [u, v] : matching) {
      if (!g.has_edge(u, v) || used[u] || used[v]) return false;
      used[u] = used[v] = 1;
    }
    return true;
  }
};

namespace detail {

// Edmonds' blossom search: BFS over alternating trees, contracting odd cycles
// by relabelling their vertices with a common base.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const UndirectedSimpleGraph& g)
      : g_(g), n_(g.vertex_count()), match_(n_, none), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  std::vector<int> run() {
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      if (match_[v] != none) continue;
      int end = find_augmenting_path(v);
      while (end != none) {
        const int pv = parent_[end];
        const int next = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = next;
      }
    }
    return match_;
  }

 private:
  static constexpr int none = -1;

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == none) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), none);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (const VertexId w : g_.neighbors(static_cast<VertexId>(v))) {
        const int to = static_cast<int>(w);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != none && parent_[match_[to]] != none)) {
          const int cur = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(static_cast<int>(i));
              }
            }
          }
        } else if (parent_[to] == none) {
          parent_[to] = v;
          if (match_[to] == none) return to;
          used_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return none;
  }

  const UndirectedSimpleGraph& g_;
  std::size_t n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace detail

/// Exact maximum matching. Vertices are scanned in ascending order.
inline MatchingResult maximum_matching(const UndirectedSimpleGraph& g) {
  const auto mate = detail::BlossomMatcher(g).run();
  MatchingResult result;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] > static_cast<int>(v)) {
      result.matching.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(mate[v]));
    }
  }
  return result;
}

inline constexpr std::size_t kBruteForceVertexLimit = 16;

/// Exhaustive maximum matching size, memoised over vertex subsets.
inline std::size_t brute_force_matching_size(const UndirectedSimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceVertexLimit) {
    throw std::invalid_argument("brute_force_matching_size: more than " +
                                std::to_string(kBruteForceVertexLimit) + " vertices");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  std::vector<int> memo(std::size_t{1} << n, -1);
  // best(mask): largest matching using only vertices in mask.
  const auto best = [&](auto&& self, std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    int& slot = memo[mask];
    if (slot >= 0) return slot;
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1U << v);
    int value = self(self, rest);
    for (std::uint32_t cand = adj[v] & rest; cand != 0; cand &= cand - 1) {
      const int w = __builtin_ctz(cand);
      value = std::max(value, 1 + self(self, rest & ~(1U << w)));
    }
    return slot = value;
  };
  const std::uint32_t all = n == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  return static_cast<std::size_t>(best(best, all));
}

/// Number of odd-cardinality components of g − U.
inline std::size_t odd_components(const UndirectedSimpleGraph& g, const std::vector<VertexId>& separator) {
  std::vector<char> removed(g.vertex_count(), 0);
  for (const VertexId u : separator) {
    if (u >= g.vertex_count()) throw std::invalid_argument("separator vertex outside the graph");
    removed[u] = 1;
  }
  const auto label = g.components(removed);
  std::unordered_map<int, std::size_t> sizes;
  for (const int l : label) {
    if (l >= 0) ++sizes[l];
  }
  return static_cast<std::size_t>(
      std::count_if(sizes.begin(), sizes.end(), [](const auto& kv) { return kv.second % 2 == 1; }));
}

/// Certificate for U (duplicates ignored). Throws std::invalid_argument when
/// U is not a subset of the vertex set.
inline TutteBergeCertificate tutte_berge_certificate(const UndirectedSimpleGraph& g,
                                                     std::vector<VertexId> separator) {
  std::sort(separator.begin(), separator.end());
  separator.erase(std::unique(separator.begin(), separator.end()), separator.end());
  TutteBergeCertificate cert;
  cert.odd_components = odd_components(g, separator);
  const auto n = static_cast<long long>(g.vertex_count());
  const long long deficiency =
      static_cast<long long>(cert.odd_components) - static_cast<long long>(separator.size());
  cert.bound = static_cast<std::size_t>(std::max(0LL, (n - deficiency) / 2));
  cert.separator = std::move(separator);
  return cert;
}

inline std::size_t tutte_berge_upper_bound(const UndirectedSimpleGraph& g,
                                           const std::vector<VertexId>& separator) {
  return tutte_berge_certificate(g, separator).bound;
}

/// Best certificate among U = ∅ and every singleton U = {v}.
inline TutteBergeCertificate best_single_vertex_certificate(const UndirectedSimpleGraph& g) {
  TutteBergeCertificate best = tutte_berge_certificate(g, {});
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto cert = tutte_berge_certificate(g, {v});
    if (cert.bound < best.bound) best = std::move(cert);
  }
  return best;
}

/// Non-negative rational in lowest terms.
struct Rational {
  long long numerator = 0;
  long long denominator = 1;

  static Rational of(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
  }
  [[nodiscard]] bool is_integer() const noexcept { return denominator == 1; }
  [[nodiscard]] std::string to_string() const {
    return is_integer() ? std::to_string(numerator)
                        : std::to_string(numerator) + "/" + std::to_string(denominator);
  }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// (11n + 12) / 23: the matching bound for hub-glued copies of the
/// 24-vertex minimum-degree-7 graph.
inline Rational lemma_matching_bound(long long n) { return Rational::of(11 * n + 12, 23); }

}  // namespace onep
