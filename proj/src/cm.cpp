#include "wpi/cm.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpi {

bool clique3_cm(Int a, Int b, Int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("weights must be positive");
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return a == b;
}

CmVerdict cm_tree(const WeightedGraph& g, int r) {
  if (classify(g) != GraphShape::Tree) throw std::invalid_argument("cm_tree expects a tree");
  CmVerdict v;
  v.method = "tree";

  auto [h, removed] = prune_pathless_leaves(g, r);
  v.pruned = removed;

  if (enumerate_r_paths(h, r).empty()) {
    v.is_cm = true;
    v.stage = CmStage::NoPaths;
    return v;
  }

  auto witness = detect_r_path_suspension(h, r);
  if (!witness) {
    v.is_cm = false;
    v.stage = CmStage::NoSuspension;
    return v;
  }
  v.witness = witness;

  bool all_ok = true;
  WeightedGraph base = h.induced(witness->bases);
  for (const auto& [key, w] : base.edges()) {
    EdgeCheck ec;
    ec.i = key.first;
    ec.j = key.second;
    ec.edge_weight = w;
    ec.whisker_i = h.weight(ec.i, witness->whiskers.at(ec.i).front());
    ec.whisker_j = h.weight(ec.j, witness->whiskers.at(ec.j).front());
    Int lo = ec.whisker_i < ec.whisker_j ? ec.whisker_i : ec.whisker_j;
    ec.ok = w <= lo;
    all_ok = all_ok && ec.ok;
    v.edge_checks.push_back(std::move(ec));
  }
  v.is_cm = all_ok;
  v.stage = all_ok ? CmStage::Suspension : CmStage::WeightViolation;
  return v;
}

CmVerdict cm_clique_r2(const WeightedGraph& g) {
  if (classify(g) != GraphShape::Complete || g.vertex_count() < 3) {
    throw std::invalid_argument("cm_clique_r2 expects a complete graph on at least 3 vertices");
  }
  CmVerdict v;
  v.method = "clique-r2";
  const auto& verts = g.vertices();
  int n = static_cast<int>(verts.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        int i = verts[a], j = verts[b], k = verts[c];
        if (!clique3_cm(g.weight(i, j), g.weight(i, k), g.weight(j, k))) {
          v.is_cm = false;
          v.stage = CmStage::FailingTriple;
          v.triple = {i, j, k};
          return v;
        }
      }
    }
  }
  v.is_cm = true;
  v.stage = CmStage::TriplesAllCm;
  return v;
}

std::optional<std::array<int, 3>> clique_mixedness_shortcut(const WeightedGraph& g) {
  if (classify(g) != GraphShape::Complete || g.vertex_count() < 3) {
    throw std::invalid_argument("expects a complete graph on at least 3 vertices");
  }
  const auto& verts = g.vertices();
  int n = static_cast<int>(verts.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        int i = verts[a], j = verts[b], k = verts[c];
        Int x = g.weight(i, j), y = g.weight(i, k), z = g.weight(j, k);
        if (x > y) std::swap(x, y);
        if (y > z) std::swap(y, z);
        if (x > y) std::swap(x, y);
        if (x < y && y < z) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

CmVerdict cm_auto(const WeightedGraph& g, int r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  GraphShape shape = classify(g);
  if (shape == GraphShape::Tree) return cm_tree(g, r);
  if (shape == GraphShape::Complete && r == 2) return cm_clique_r2(g);
  throw std::domain_error("no characterization available for this graph shape and r");
}

}  // namespace wpi
