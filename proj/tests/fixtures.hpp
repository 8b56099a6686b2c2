#pragma once

#include <random>
#include <vector>

#include "wpi/graph.hpp"
#include "wpi/path_ideal.hpp"

namespace fx {

// The 6-vertex tree used throughout: 1-2-3-4-5 with 6 hanging off 3,
// weights 2,1,2,2 along the spine and 3 on the branch.
inline wpi::WeightedGraph example_tree() {
  return wpi::WeightedGraph(6, {{1, 2, 2}, {2, 3, 1}, {3, 4, 2}, {4, 5, 2}, {3, 6, 3}});
}

// Weighted 4-clique that is unmixed but not Cohen-Macaulay at r=2: one edge
// of weight 1 inside an otherwise constant-2 clique.
inline wpi::WeightedGraph k4_unmixed_not_cm() {
  return wpi::WeightedGraph(4, {{1, 2, 2}, {1, 3, 1}, {1, 4, 2}, {2, 3, 2}, {2, 4, 2}, {3, 4, 2}});
}

// 1-path suspension of the example tree: whisker vertex 6+i attached to
// vertex i with weights 4,3,3,4,2,2.
inline wpi::WeightedGraph suspension_r1() {
  return wpi::WeightedGraph(12, {{1, 2, 2},  {2, 3, 1},  {3, 4, 2},  {4, 5, 2},  {3, 6, 3},
                                 {1, 7, 4},  {2, 8, 3},  {3, 9, 3},  {4, 10, 4}, {5, 11, 2},
                                 {6, 12, 2}});
}

// 2-path suspension of the example tree: whiskers i -> 6+i -> 12+i.
inline wpi::WeightedGraph suspension_r2() {
  return wpi::WeightedGraph(18, {{1, 2, 2},   {2, 3, 1},   {3, 4, 2},   {4, 5, 2},   {3, 6, 3},
                                 {1, 7, 4},   {2, 8, 3},   {3, 9, 3},   {4, 10, 4},  {5, 11, 2},
                                 {6, 12, 200}, {7, 13, 3},  {8, 14, 3},  {9, 15, 5},  {10, 16, 4},
                                 {11, 17, 2}, {12, 18, 3}});
}

// Triangle with weights a on 1-2, b on 2-3, c on 1-3.
inline wpi::WeightedGraph clique3(const wpi::Int& a, const wpi::Int& b, const wpi::Int& c) {
  return wpi::WeightedGraph(3, {{1, 2, a}, {2, 3, b}, {1, 3, c}});
}

inline wpi::WeightedGraph path_graph(const std::vector<wpi::Int>& weights) {
  std::vector<wpi::WeightedGraph::Edge> edges;
  for (size_t k = 0; k < weights.size(); ++k) {
    edges.emplace_back(static_cast<int>(k + 1), static_cast<int>(k + 2), weights[k]);
  }
  return wpi::WeightedGraph(static_cast<int>(weights.size()) + 1, edges);
}

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline wpi::WeightedGraph random_tree(std::mt19937& rng, int n, int max_weight) {
  std::vector<wpi::WeightedGraph::Edge> edges;
  for (int v = 2; v <= n; ++v) {
    edges.emplace_back(uniform(rng, 1, v - 1), v, wpi::Int(uniform(rng, 1, max_weight)));
  }
  return wpi::WeightedGraph(n, edges);
}

inline wpi::WeightedGraph random_graph(std::mt19937& rng, int n, int percent, int max_weight) {
  std::vector<wpi::WeightedGraph::Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (uniform(rng, 1, 100) <= percent) {
        edges.emplace_back(i, j, wpi::Int(uniform(rng, 1, max_weight)));
      }
    }
  }
  return wpi::WeightedGraph(n, edges);
}

inline wpi::WeightedGraph random_clique(std::mt19937& rng, int n, int max_weight) {
  return random_graph(rng, n, 100, max_weight);
}

inline wpi::Combiner combiner_by_index(int k) {
  switch (k % 4) {
    case 0: return wpi::Combiner::max();
    case 1: return wpi::Combiner::min();
    case 2: return wpi::Combiner::gcd();
    default: return wpi::Combiner::lcm();
  }
}

// Independent path oracle: every ordered tuple of r+1 distinct adjacent
// vertices, deduplicated by reversal. Kept free of the library's DFS.
inline std::vector<std::vector<int>> brute_force_paths(const wpi::WeightedGraph& g, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> tuple;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(tuple.size()) == r + 1) {
      std::vector<int> fwd = tuple;
      std::vector<int> rev(tuple.rbegin(), tuple.rend());
      out.push_back(fwd < rev ? fwd : rev);
      return;
    }
    for (int v : g.vertices()) {
      if (std::find(tuple.begin(), tuple.end(), v) != tuple.end()) continue;
      if (!tuple.empty() && !g.has_edge(tuple.back(), v)) continue;
      tuple.push_back(v);
      self(self);
      tuple.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fx
