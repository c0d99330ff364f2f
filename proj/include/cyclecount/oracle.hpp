#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cyclecount/errors.hpp"
#include "cyclecount/graph.hpp"
#include "cyclecount/numeric.hpp"
#include "cyclecount/polynomial.hpp"

namespace cyclecount {

inline constexpr int kDefaultOracleLimit = 11;

namespace detail {

// Directed Hamiltonian cycles of the induced subgraph on `mask`, counted by
// fixed-start backtracking: walk from the minimum element over induced edges,
// close back to it. Each undirected cycle is found once per orientation.
inline unsigned __int128 ham_cycles_backtracking(const std::vector<std::uint32_t>& adj,
                                                 std::uint32_t mask) {
  const int anchor = __builtin_ctz(mask);
  struct Walker {
    const std::vector<std::uint32_t>& adj;
    std::uint32_t mask;
    int anchor;
    unsigned __int128 walk(int cur, std::uint32_t visited) const {
      if (visited == mask) return (adj[static_cast<size_t>(cur)] >> anchor) & 1u;
      unsigned __int128 total = 0;
      std::uint32_t cand = adj[static_cast<size_t>(cur)] & mask & ~visited;
      while (cand) {
        const int next = __builtin_ctz(cand);
        cand &= cand - 1;
        total += walk(next, visited | (1u << next));
      }
      return total;
    }
  };
  return Walker{adj, mask, anchor}.walk(anchor, 1u << anchor);
}

// Block weight per the adopted orientation convention: singletons and edges
// weigh 1, non-edges 0, blocks of size >= 3 weigh their directed Hamiltonian
// cycle count (2x the undirected count).
inline unsigned __int128 block_weight_backtracking(const LabeledGraph& g, std::uint32_t mask) {
  const int m = __builtin_popcount(mask);
  if (m == 0) throw parameter_error("block weight: empty subset");
  if (m == 1) return 1;
  if (m == 2) {
    const int u = __builtin_ctz(mask);
    const int v = 31 - __builtin_clz(mask);
    return (g.adj[static_cast<size_t>(u)] >> v) & 1u;
  }
  return ham_cycles_backtracking(g.adj, mask);
}

}  // namespace detail

inline Integer count_directed_ham_cycles(const LabeledGraph& g, std::uint32_t subset_mask) {
  if (subset_mask == 0) throw parameter_error("count_directed_ham_cycles: empty subset");
  if (g.n > 0 && (subset_mask & ~g.full_mask()) != 0)
    throw parameter_error("count_directed_ham_cycles: subset not contained in V(G)");
  return integer_from_u128(detail::block_weight_backtracking(g, subset_mask));
}

inline Integer count_directed_ham_cycles(const LabeledGraph& g, const std::vector<int>& subset) {
  std::uint32_t mask = 0;
  for (int v : subset) {
    if (v < 1 || v > g.n)
      throw parameter_error("count_directed_ham_cycles: vertex " + std::to_string(v) +
                            " not in graph");
    mask |= 1u << (v - 1);
  }
  return count_directed_ham_cycles(g, mask);
}

namespace detail {

// Recursive set-partition enumeration in restricted-growth order. Prunes
// blocks holding two restricted vertices and blocks that can no longer reach
// a positive weight (a member that cannot attain induced degree 2 within
// block-plus-future vertices).
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(const LabeledGraph& g)
      : g_(g), rmask_(g.restricted_mask()), coeffs_(static_cast<size_t>(g.n) + 1) {}

  std::vector<Integer> run() {
    blocks_.clear();
    recurse(0);
    return std::move(coeffs_);
  }

 private:
  bool block_viable(std::uint32_t block, int next_vertex) const {
    const int m = __builtin_popcount(block);
    if (m == 1) return true;
    const std::uint32_t future =
        (next_vertex >= g_.n) ? 0u : (g_.full_mask() & ~((1u << next_vertex) - 1u));
    if (m == 2) {
      const int u = __builtin_ctz(block);
      const int v = 31 - __builtin_clz(block);
      if ((g_.adj[static_cast<size_t>(u)] >> v) & 1u) return true;  // admissible edge
      // Non-edge pair must grow to an induced cycle: both ends need two
      // future neighbors.
      return __builtin_popcount(g_.adj[static_cast<size_t>(u)] & future) >= 2 &&
             __builtin_popcount(g_.adj[static_cast<size_t>(v)] & future) >= 2;
    }
    // Size >= 3: every member eventually needs induced degree >= 2 inside the
    // final block, which is contained in block | future.
    std::uint32_t rest = block;
    while (rest) {
      const int w = __builtin_ctz(rest);
      rest &= rest - 1;
      const std::uint32_t reach = (block | future) & ~(1u << w);
      if (__builtin_popcount(g_.adj[static_cast<size_t>(w)] & reach) < 2) return false;
    }
    return true;
  }

  unsigned __int128 weight(std::uint32_t mask) {
    auto it = wmemo_.find(mask);
    if (it != wmemo_.end()) return it->second;
    unsigned __int128 w = block_weight_backtracking(g_, mask);
    wmemo_.emplace(mask, w);
    return w;
  }

  void recurse(int i) {
    if (i == g_.n) {
      unsigned __int128 prod = 1;
      for (std::uint32_t b : blocks_) {
        prod *= weight(b);
        if (prod == 0) return;
      }
      coeffs_[blocks_.size()] += integer_from_u128(prod);
      return;
    }
    const std::uint32_t bit = 1u << i;
    const bool restricted = i < g_.r;
    for (size_t j = 0; j < blocks_.size(); ++j) {
      if (restricted && (blocks_[j] & rmask_) != 0) continue;
      const std::uint32_t grown = blocks_[j] | bit;
      if (!block_viable(grown, i + 1)) continue;
      blocks_[j] = grown;
      recurse(i + 1);
      blocks_[j] = grown ^ bit;
    }
    blocks_.push_back(bit);
    recurse(i + 1);
    blocks_.pop_back();
  }

  const LabeledGraph& g_;
  std::uint32_t rmask_;
  std::vector<Integer> coeffs_;
  std::vector<std::uint32_t> blocks_;
  std::unordered_map<std::uint32_t, unsigned __int128> wmemo_;
};

}  // namespace detail

// Ground truth: enumerate all set partitions of V(G), keep those whose blocks
// all carry positive weight and whose restricted vertices {1..r} occupy
// distinct blocks, and accumulate the product of block weights by block count.
inline Polynomial brute_force_polynomial(const LabeledGraph& g,
                                         int max_n = kDefaultOracleLimit) {
  if (g.n > max_n) throw resource_guard_error("oracle: vertex guard exceeded", g.n, max_n);
  return Polynomial(detail::PartitionEnumerator(g).run());
}

}  // namespace cyclecount
