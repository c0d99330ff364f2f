#pragma once

#include <cstdint>
#include <thread>
#include <unordered_map>
#include <vector>

#include "cyclecount/errors.hpp"
#include "cyclecount/graph.hpp"
#include "cyclecount/numeric.hpp"
#include "cyclecount/oracle.hpp"
#include "cyclecount/polynomial.hpp"

namespace cyclecount {

inline constexpr int kDefaultEngineLimit = 22;
// Below this the table is built by one layered Held-Karp pass over all masks;
// above it (sparse territory) subsets are screened and counted individually.
inline constexpr int kFlatTableLimit = 20;

// weight(S) for every nonempty S: directed Hamiltonian cycle count of the
// induced subgraph for |S| >= 3, edge indicator for pairs, 1 for singletons.
//
// Closure convention (must match the oracle): paths start at the minimum
// element of S and are closed by the edge back to it, so every directed
// Hamiltonian cycle is counted exactly once and every undirected one twice.
class BlockWeightTable {
 public:
  explicit BlockWeightTable(const LabeledGraph& g, int max_n = kDefaultEngineLimit,
                            int threads = 1)
      : g_(g) {
    if (g.n > max_n)
      throw resource_guard_error("block_weight_table: vertex guard exceeded", g.n, max_n);
    if (g.n > kMaxVertices)
      throw resource_guard_error("block_weight_table: hard cap exceeded", g.n, kMaxVertices);
    w_.assign(std::size_t(1) << g.n, 0);
    if (g.n == 0) return;
    if (g.n <= kFlatTableLimit)
      build_flat(threads);
    else
      build_screened();
  }

  const LabeledGraph& graph() const { return g_; }
  int n() const { return g_.n; }

  unsigned __int128 weight_raw(std::uint32_t mask) const { return w_[mask]; }
  Integer weight(std::uint32_t mask) const {
    if (mask == 0) throw parameter_error("block weight: empty subset");
    return integer_from_u128(w_[mask]);
  }

 private:
  // Layered DP over all masks: paths[mask][v] = number of directed paths that
  // start at min(mask), cover mask, and end at v. Removing a non-minimum end
  // vertex keeps the anchor, so entries of one layer only read the previous
  // layer and layers parallelize cleanly.
  void build_flat(int threads) {
    const int n = g_.n;
    const std::size_t size = std::size_t(1) << n;
    std::vector<std::uint64_t> paths(size * static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      paths[(std::size_t(1) << v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = 1;

    auto process_mask = [&](std::uint32_t mask) {
      std::uint32_t rest = mask & (mask - 1);  // path ends; the anchor stays 0
      while (rest) {
        const int v = __builtin_ctz(rest);
        rest &= rest - 1;
        const std::uint32_t prev = mask ^ (1u << v);
        const std::size_t base = std::size_t(prev) * static_cast<std::size_t>(n);
        std::uint64_t sum = 0;
        std::uint32_t from = g_.adj[static_cast<size_t>(v)] & prev;
        while (from) {
          const int u = __builtin_ctz(from);
          from &= from - 1;
          sum += paths[base + static_cast<std::size_t>(u)];
        }
        paths[std::size_t(mask) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = sum;
      }
    };

    // Enumerate each popcount layer (Gosper) and split it across workers.
    std::vector<std::uint32_t> layer;
    for (int m = 2; m <= n; ++m) {
      layer.clear();
      std::uint32_t mask = (1u << m) - 1u;
      const std::uint32_t limit = 1u << n;
      while (mask < limit) {
        layer.push_back(mask);
        const std::uint32_t c = mask & -mask;
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
      const int workers = std::max(1, std::min<int>(threads, static_cast<int>(layer.size())));
      if (workers == 1) {
        for (std::uint32_t lm : layer) process_mask(lm);
      } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (layer.size() + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
          const std::size_t lo = t * chunk;
          const std::size_t hi = std::min(layer.size(), lo + chunk);
          if (lo >= hi) break;
          pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) process_mask(layer[i]);
          });
        }
        for (auto& th : pool) th.join();
      }
    }

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const int m = __builtin_popcount(mask);
      if (m == 1) {
        w_[mask] = 1;
      } else if (m == 2) {
        const int u = __builtin_ctz(mask);
        const int v = 31 - __builtin_clz(mask);
        w_[mask] = (g_.adj[static_cast<size_t>(u)] >> v) & 1u;
      } else {
        const int anchor = __builtin_ctz(mask);
        const std::size_t base = std::size_t(mask) * static_cast<std::size_t>(n);
        unsigned __int128 sum = 0;
        std::uint32_t ends = g_.adj[static_cast<size_t>(anchor)] & mask;
        while (ends) {
          const int v = __builtin_ctz(ends);
          ends &= ends - 1;
          sum += paths[base + static_cast<std::size_t>(v)];
        }
        w_[mask] = sum;
      }
    }
  }

  // n > kFlatTableLimit: screen each subset (induced min degree >= 2 and
  // connectivity are necessary for a Hamiltonian induced subgraph), then
  // count by backtracking. Fast for the sparse graphs that live at this
  // size; dense inputs remain exact but slow.
  void build_screened() {
    const int n = g_.n;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const int m = __builtin_popcount(mask);
      if (m == 1) {
        w_[mask] = 1;
        continue;
      }
      if (m == 2) {
        const int u = __builtin_ctz(mask);
        const int v = 31 - __builtin_clz(mask);
        w_[mask] = (g_.adj[static_cast<size_t>(u)] >> v) & 1u;
        continue;
      }
      bool candidate = true;
      std::uint32_t rest = mask;
      while (rest) {
        const int v = __builtin_ctz(rest);
        rest &= rest - 1;
        if (__builtin_popcount(g_.adj[static_cast<size_t>(v)] & mask & ~(1u << v)) < 2) {
          candidate = false;
          break;
        }
      }
      if (candidate) {
        std::uint32_t reached = mask & (~mask + 1);  // lowest bit
        std::uint32_t frontier = reached;
        while (frontier) {
          std::uint32_t next = 0;
          std::uint32_t f = frontier;
          while (f) {
            const int v = __builtin_ctz(f);
            f &= f - 1;
            next |= g_.adj[static_cast<size_t>(v)] & mask & ~reached;
          }
          reached |= next;
          frontier = next;
        }
        candidate = (reached == mask);
      }
      w_[mask] = candidate ? detail::ham_cycles_backtracking(g_.adj, mask) : 0;
    }
  }

  LabeledGraph g_;
  std::vector<unsigned __int128> w_;
};

namespace detail {

// Memoized recursion on the uncovered vertex set: peel off every admissible
// block containing the lowest uncovered vertex. The r-restriction is a
// per-block constraint (at most one of {1..r} per block), so the uncovered
// mask alone is a sound memo key.
class EngineRecursion {
 public:
  EngineRecursion(const BlockWeightTable& table, std::uint32_t rmask)
      : table_(table), n_(table.n()), rmask_(rmask) {
    blocks_by_min_.assign(static_cast<size_t>(n_), {});
    for (std::uint32_t mask = 1; mask < (1u << n_); ++mask) {
      if (table_.weight_raw(mask) == 0) continue;
      if (__builtin_popcount(mask & rmask_) > 1) continue;
      blocks_by_min_[static_cast<size_t>(__builtin_ctz(mask))].push_back(mask);
    }
  }

  Polynomial run(std::uint32_t full) { return solve(full); }

 private:
  // Returns a reference into the memo; unordered_map never invalidates
  // references to mapped values on insert.
  const Polynomial& solve(std::uint32_t uncovered) {
    auto it = memo_.find(uncovered);
    if (it != memo_.end()) return it->second;
    if (uncovered == 0)
      return memo_.emplace(0u, Polynomial::one()).first->second;

    const int v = __builtin_ctz(uncovered);
    const std::uint32_t rest = uncovered ^ (1u << v);
    std::vector<Integer> acc(static_cast<size_t>(__builtin_popcount(uncovered)) + 1);

    auto contribute = [&](std::uint32_t block) {
      const unsigned __int128 w = table_.weight_raw(block);
      if (w == 0) return;
      if (__builtin_popcount(block & rmask_) > 1) return;
      const Polynomial& sub = solve(uncovered ^ block);
      const Integer wi = integer_from_u128(w);
      const auto& sc = sub.coeffs();
      for (size_t k = 0; k < sc.size(); ++k) acc[k + 1] += wi * sc[k];
    };

    const auto& candidates = blocks_by_min_[static_cast<size_t>(v)];
    const int rest_bits = __builtin_popcount(rest);
    const bool use_list =
        rest_bits >= 20 || candidates.size() < (std::size_t(1) << rest_bits);
    if (use_list) {
      for (std::uint32_t block : candidates)
        if ((block & ~uncovered) == 0) contribute(block);
    } else {
      std::uint32_t sub = rest;
      while (true) {
        contribute(sub | (1u << v));
        if (sub == 0) break;
        sub = (sub - 1) & rest;
      }
    }

    return memo_.emplace(uncovered, Polynomial(std::move(acc))).first->second;
  }

  const BlockWeightTable& table_;
  int n_;
  std::uint32_t rmask_;
  std::vector<std::vector<std::uint32_t>> blocks_by_min_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

}  // namespace detail

inline Polynomial cycle_polynomial(const LabeledGraph& g, const BlockWeightTable& table) {
  return detail::EngineRecursion(table, g.restricted_mask()).run(g.full_mask());
}

// C_r(G, x) for the graph's own r. Matches brute_force_polynomial wherever
// both are defined.
inline Polynomial cycle_polynomial(const LabeledGraph& g, int max_n = kDefaultEngineLimit,
                                   int threads = 1) {
  BlockWeightTable table(g, max_n, threads);
  return cycle_polynomial(g, table);
}

// B_r(G) = C_r(G, 1).
inline Integer total_partitions(const LabeledGraph& g, int max_n = kDefaultEngineLimit,
                                int threads = 1) {
  return cycle_polynomial(g, max_n, threads).total();
}

}  // namespace cyclecount
