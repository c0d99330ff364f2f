#include <catch2/catch_amalgamated.hpp>

#include "cyclecount/closed_forms.hpp"
#include "cyclecount/corpus.hpp"
#include "cyclecount/engine.hpp"
#include "cyclecount/oracle.hpp"

using namespace cyclecount;

TEST_CASE("block weight table matches the oracle weight on every subset") {
  std::vector<LabeledGraph> graphs = {
      make_family({Family::cycle, 4}),
      make_family({Family::complete, 4}),
      make_family({Family::wheel, 4}),
  };
  for (const auto& e : seeded_random_corpus(10, 8, 23)) graphs.push_back(e.graph);
  for (const auto& g : graphs) {
    BlockWeightTable table(g);
    for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask)
      REQUIRE(table.weight(mask) == count_directed_ham_cycles(g, mask));
  }
}

TEST_CASE("table spot values") {
  const auto c4 = make_family({Family::cycle, 4});
  BlockWeightTable tc(c4);
  CHECK(tc.weight(0b1111) == 2);
  CHECK(tc.weight(0b0011) == 1);   // edge {1,2}
  CHECK(tc.weight(0b0101) == 0);   // non-edge {1,3}
  CHECK(tc.weight(0b0111) == 0);   // no triangle in C_4
  const auto k4 = make_family({Family::complete, 4});
  BlockWeightTable tk(k4);
  CHECK(tk.weight(0b0111) == 2);
  CHECK(tk.weight(0b1111) == 6);
  const auto w4 = make_family({Family::wheel, 4});
  BlockWeightTable tw(w4);
  CHECK(tw.weight(0b11111) == 8);
}

TEST_CASE("weights vanish on disconnected subsets") {
  for (const auto& e : seeded_random_corpus(8, 7, 29)) {
    BlockWeightTable table(e.graph);
    for (std::uint32_t mask = 1; mask < (1u << e.graph.n); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      // connectivity probe
      std::uint32_t reached = mask & (~mask + 1), frontier = reached;
      while (frontier) {
        std::uint32_t next = 0, f = frontier;
        while (f) {
          const int v = __builtin_ctz(f);
          f &= f - 1;
          next |= e.graph.adj[static_cast<size_t>(v)] & mask & ~reached;
        }
        reached |= next;
        frontier = next;
      }
      if (reached != mask) CHECK(table.weight(mask) == 0);
    }
  }
}

TEST_CASE("engine equals oracle across families and restrictions") {
  for (const auto& e : default_family_corpus(7)) {
    for (int r = 0; r <= std::min(e.graph.n, 3); ++r) {
      const auto g = e.graph.with_r(r);
      REQUIRE(cycle_polynomial(g) == brute_force_polynomial(g));
    }
  }
  for (const auto& e : seeded_random_corpus(20, 7, 31)) {
    for (int r = 0; r <= std::min(e.graph.n, 3); ++r) {
      const auto g = e.graph.with_r(r);
      REQUIRE(cycle_polynomial(g) == brute_force_polynomial(g));
    }
  }
}

TEST_CASE("engine totals") {
  CHECK(total_partitions(make_family({Family::complete, 4, 0, 1})) == 24);
  CHECK(total_partitions(make_family({Family::path, 5, 0, 1})) == 8);
  CHECK(total_partitions(make_family({Family::cycle, 4, 0, 1})) == 9);
  CHECK(cycle_polynomial(disjoint_union(make_family({Family::path, 2}),
                                        make_family({Family::path, 2}))) ==
        Polynomial{0, 1, 1} * Polynomial{0, 1, 1});
}

TEST_CASE("pendant, broom, and bridge identities hold against the engine") {
  const auto rnd = seeded_random_corpus(12, 7, 57);
  for (const auto& e : rnd) {
    const int w = 1 + e.graph.n / 2;
    CHECK(cycle_polynomial(add_pendant(e.graph, w)) ==
          (cycle_polynomial(e.graph) + cycle_polynomial(delete_vertex(e.graph, w))).shifted(1));
    for (int ell = 1; ell <= 3; ++ell)
      CHECK(cycle_polynomial(add_broom(e.graph, w, ell)) ==
            (cycle_polynomial(e.graph) +
             cycle_polynomial(delete_vertex(e.graph, w)).scaled(ell))
                .shifted(ell));
  }
  for (size_t i = 0; i + 1 < rnd.size(); i += 2) {
    const auto& g1 = rnd[i].graph;
    const auto& g2 = rnd[i + 1].graph;
    CHECK(cycle_polynomial(bridge_join(g1, 1, g2, 1)) ==
          cycle_polynomial(g1) * cycle_polynomial(g2) +
              (cycle_polynomial(delete_vertex(g1, 1)) *
               cycle_polynomial(delete_vertex(g2, 1)))
                  .shifted(1));
  }
}

TEST_CASE("engine is deterministic across thread counts") {
  const auto g = make_family({Family::wheel, 8, 0, 2});
  const auto p1 = cycle_polynomial(g, kDefaultEngineLimit, 1);
  const auto p2 = cycle_polynomial(g, kDefaultEngineLimit, 2);
  const auto p4 = cycle_polynomial(g, kDefaultEngineLimit, 4);
  CHECK(p1 == p2);
  CHECK(p1 == p4);
}

TEST_CASE("engine resource guard") {
  CHECK_THROWS_AS(cycle_polynomial(make_family({Family::path, 23})), resource_guard_error);
  CHECK_THROWS_AS(cycle_polynomial(make_family({Family::path, 12}), 11), resource_guard_error);
}

TEST_CASE("screened table path handles sparse graphs beyond the flat limit") {
  // n = 21 exercises the per-subset screening fallback.
  const auto c21 = make_family({Family::cycle, 21});
  CHECK(cycle_polynomial(c21) == cycle_full(21));
}

TEST_CASE("union multiplicativity and isolation shift hold at n = 18") {
  const auto rnd = seeded_random_corpus(4, 9, 0x18AAull);
  const auto& g1 = rnd[0].graph;
  const auto& g2 = rnd[1].graph;
  CHECK(cycle_polynomial(disjoint_union(g1, g2)) ==
        cycle_polynomial(g1) * cycle_polynomial(g2));
  const auto t17 = make_family({Family::tadpole, 9, 8});
  CHECK(cycle_polynomial(disjoint_union(t17, make_family({Family::empty, 1}))) ==
        cycle_polynomial(t17).shifted(1));
}

TEST_CASE("engine equals oracle up to r = 4") {
  for (const auto& e : seeded_random_corpus(8, 6, 0x44Eull)) {
    for (int r = 0; r <= std::min(e.graph.n, 4); ++r) {
      const auto g = e.graph.with_r(r);
      REQUIRE(cycle_polynomial(g) == brute_force_polynomial(g));
    }
  }
}

TEST_CASE("r restriction in the engine filters blocks, never partitions twice") {
  const auto g = make_family({Family::wheel, 6, 0, 3});
  CHECK(cycle_polynomial(g) == brute_force_polynomial(g));
  CHECK(cycle_polynomial(g.with_r(0)) == cycle_polynomial(g.with_r(1)));
}
