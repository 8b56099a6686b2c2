#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wpi/covers.hpp"
#include "wpi/graph.hpp"

namespace wpi {

enum class CmStage {
  NoPaths,           // pruning left no r-path: trivially Cohen-Macaulay
  Suspension,        // suspension found, every base-edge inequality holds
  NoSuspension,      // pruned graph is not an r-path suspension
  WeightViolation,   // suspension found, some base edge fails the inequality
  TriplesAllCm,      // complete graph, every induced 3-clique passes
  FailingTriple,     // complete graph, witness triple fails
};

struct EdgeCheck {
  int i = 0, j = 0;          // base edge
  Int edge_weight;           // omega(v_i v_j)
  Int whisker_i, whisker_j;  // omega(v_i y_{i,1}), omega(v_j y_{j,1})
  bool ok = false;           // edge_weight <= min of the whisker weights
};

struct CmVerdict {
  bool is_cm = false;
  std::string method;  // "tree" or "clique-r2"
  CmStage stage = CmStage::NoPaths;
  std::vector<int> pruned;                    // removal order (tree route)
  std::optional<SuspensionWitness> witness;   // tree route, when found
  std::vector<EdgeCheck> edge_checks;         // all base edges, sorted
  std::array<int, 3> triple{0, 0, 0};         // clique route witness
};

/// Weighted 3-clique test for r=2: sorted weights a <= b <= c, decided by a == b.
bool clique3_cm(Int a, Int b, Int c);

/// Trees, f = max, any r: prune, then look for an r-path suspension whose
/// base edges satisfy omega(v_i v_j) <= min of the first whisker weights.
CmVerdict cm_tree(const WeightedGraph& g, int r);

/// Complete graphs, f = max, r = 2: every induced 3-clique must pass
/// clique3_cm; the first failing triple in lexicographic order is the witness.
CmVerdict cm_clique_r2(const WeightedGraph& g);

/// First induced triple with strictly increasing sorted weights, if any;
/// such a triple certifies mixedness at r = 2.
std::optional<std::array<int, 3>> clique_mixedness_shortcut(const WeightedGraph& g);

/// Dispatch: trees for any r, complete graphs for r = 2, otherwise an error
/// because no characterization exists.
CmVerdict cm_auto(const WeightedGraph& g, int r);

}  // namespace wpi
