#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "wpi/ints.hpp"

namespace wpi {

/// Finite simple undirected graph with positive integer edge weights.
///
/// Vertex ids are stable 1-based integers. A graph constructed from scratch
/// has vertices 1..n; induced subgraphs and pruning keep the original ids and
/// the original ambient id range, so ideals built from a subgraph live in the
/// same variable universe as ideals built from the host graph.
class WeightedGraph {
 public:
  using Edge = std::tuple<int, int, Int>;

  WeightedGraph() = default;
  WeightedGraph(int n, const std::vector<Edge>& edge_list);

  int ambient() const { return ambient_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<int>& vertices() const { return vertices_; }
  bool has_vertex(int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;

  bool has_edge(int i, int j) const;
  const Int& weight(int i, int j) const;
  const std::map<std::pair<int, int>, Int>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Subgraph induced by a vertex subset; ids and ambient range preserved.
  WeightedGraph induced(const std::vector<int>& keep) const;

 private:
  int ambient_ = 0;
  std::vector<int> vertices_;                   // sorted ascending
  std::map<std::pair<int, int>, Int> edges_;    // key (i, j) with i < j
  std::map<int, std::vector<int>> adjacency_;   // sorted neighbor lists
};

/// An r-path: r+1 distinct pairwise-adjacent vertices, stored with the
/// canonical orientation first id < last id.
struct Path {
  std::vector<int> verts;

  static Path canonical(std::vector<int> seq);
  Path reversed() const;
  int length() const { return static_cast<int>(verts.size()) - 1; }

  bool operator==(const Path& o) const { return verts == o.verts; }
  bool operator<(const Path& o) const { return verts < o.verts; }
};

/// Certifies that a graph is an r-path suspension: every vertex is either a
/// base or lies on the whisker attached to exactly one base.
struct SuspensionWitness {
  std::vector<int> bases;                    // ascending
  std::map<int, std::vector<int>> whiskers;  // base -> y_1..y_r, inner to tip
};

/// All r-paths of g, one per reversal class, sorted lexicographically.
std::vector<Path> enumerate_r_paths(const WeightedGraph& g, int r);

bool is_path_of(const WeightedGraph& g, const std::vector<int>& seq);

/// Degree-1 vertex lying on no r-path.
bool is_r_pathless_leaf(const WeightedGraph& g, int v, int r);

/// Repeatedly removes the lowest-id r-pathless leaf until none remains.
/// Returns the stable subgraph and the removal order.
std::pair<WeightedGraph, std::vector<int>> prune_pathless_leaves(const WeightedGraph& g, int r);

/// Searches for an r-path suspension structure by exhaustive backtracking
/// over candidate whiskers. Each candidate is a leaf's unique inward walk of
/// exactly r edges through degree-2 vertices; leaves are tried in increasing
/// id order and the first complete assignment is returned.
std::optional<SuspensionWitness> detect_r_path_suspension(const WeightedGraph& g, int r);

/// Checks a witness against its host graph: disjointness, the degree
/// profile of whisker vertices, adjacency along whiskers, full coverage.
bool witness_is_valid(const WeightedGraph& g, int r, const SuspensionWitness& w);

enum class GraphShape { Tree, Complete, Other };
GraphShape classify(const WeightedGraph& g);

}  // namespace wpi
