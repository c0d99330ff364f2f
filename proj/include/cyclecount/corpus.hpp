#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclecount/graph.hpp"

namespace cyclecount {

struct CorpusEntry {
  std::string name;
  LabeledGraph graph;
};

namespace detail {

// splitmix64: platform-independent deterministic stream for seeded corpora.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

// Every named family at every size with at most max_n vertices.
inline std::vector<CorpusEntry> default_family_corpus(int max_n = 9) {
  std::vector<CorpusEntry> out;
  auto add = [&out](const std::string& name, FamilySpec spec) {
    out.push_back({name, make_family(spec)});
  };
  auto tag = [](const char* fam, int a, int b = -1) {
    std::string s = std::string(fam) + ":" + std::to_string(a);
    if (b >= 0) s += "," + std::to_string(b);
    return s;
  };
  for (int n = 2; n <= std::min(3, max_n); ++n) add(tag("empty", n), {Family::empty, n});
  for (int n = 1; n <= max_n; ++n) add(tag("path", n), {Family::path, n});
  for (int n = 3; n <= max_n; ++n) add(tag("cycle", n), {Family::cycle, n});
  for (int n = 1; n <= max_n; ++n) add(tag("complete", n), {Family::complete, n});
  for (int n = 2; n <= max_n; ++n) add(tag("star", n), {Family::star, n});
  for (int n = 3; n + 1 <= max_n; ++n) add(tag("wheel", n), {Family::wheel, n});
  for (int n = 3; n + 1 <= max_n; ++n)
    add(tag("wheel", n) + ":hub_last", {Family::wheel, n, 0, 0, true});
  for (int n = 1; n + 1 <= max_n; ++n) add(tag("fan", n), {Family::fan, n});
  for (int n = 1; n + 1 <= max_n; ++n)
    add(tag("fan", n) + ":hub_last", {Family::fan, n, 0, 0, true});
  for (int a = 2; a <= max_n; ++a)
    for (int b = a; a + b <= max_n; ++b) add(tag("double_star", a, b), {Family::double_star, a, b});
  for (int a = 3; a <= max_n; ++a)
    for (int b = 1; a + b <= max_n; ++b) add(tag("tadpole", a, b), {Family::tadpole, a, b});
  for (int a = 2; a <= max_n; ++a)
    for (int b = 1; a + b <= max_n; ++b) add(tag("lollipop", a, b), {Family::lollipop, a, b});
  for (int a = 2; 2 * a <= max_n; ++a) add(tag("barbell", a), {Family::barbell, a});
  for (int n = 1; n <= max_n; ++n) add(tag("complement_path", n), {Family::complement_path, n});
  for (int n = 3; n <= max_n; ++n) add(tag("complement_cycle", n), {Family::complement_cycle, n});
  for (int a = 1; a <= max_n; ++a)
    for (int b = a; a + b <= max_n; ++b)
      add(tag("complete_bipartite", a, b), {Family::complete_bipartite, a, b});
  return out;
}

// Seeded Erdos-Renyi-style graphs (each pair kept with probability 1/2).
inline std::vector<CorpusEntry> seeded_random_corpus(int count = 50, int max_n = 8,
                                                     std::uint64_t seed = 0x5eed5eedull) {
  std::vector<CorpusEntry> out;
  std::uint64_t state = seed;
  for (int t = 0; t < count; ++t) {
    const int n = 2 + static_cast<int>(detail::splitmix64(state) % (max_n - 1));
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (detail::splitmix64(state) & 1) edges.push_back({u, v});
    out.push_back({"random#" + std::to_string(t) + ":n=" + std::to_string(n),
                   make_graph(n, std::move(edges))});
  }
  return out;
}

}  // namespace cyclecount
