#include "wpi/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpi {

std::vector<int> WeightedCover::support() const {
  std::vector<int> out;
  out.reserve(weights.size());
  for (const auto& [v, w] : weights) out.push_back(v);
  return out;
}

bool WeightedCover::operator<(const WeightedCover& o) const {
  if (weights.size() != o.weights.size()) return weights.size() < o.weights.size();
  auto a = weights.begin();
  auto b = o.weights.begin();
  for (; a != weights.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
  }
  a = weights.begin();
  b = o.weights.begin();
  for (; a != weights.end(); ++a, ++b) {
    if (a->second != b->second) return a->second < b->second;
  }
  return false;
}

namespace {

bool vertex_covers(const WeightedGraph& g, const Combiner& f, const Path& p, int j, const Int& sigma) {
  return sigma <= path_rule_value(g, f, p, j);
}

bool path_covered(const WeightedGraph& g, const Combiner& f, const Path& p, const WeightedCover& c) {
  for (int j = 0; j < static_cast<int>(p.verts.size()); ++j) {
    auto it = c.weights.find(p.verts[j]);
    if (it != c.weights.end() && vertex_covers(g, f, p, j, it->second)) return true;
  }
  return false;
}

}  // namespace

bool is_cover(const WeightedGraph& g, const Combiner& f, int r, const WeightedCover& c) {
  for (const auto& [v, w] : c.weights) {
    if (w < 1) throw std::invalid_argument("cover weights must be positive");
    if (v < 1 || v > g.ambient()) throw std::out_of_range("cover vertex out of range");
  }
  for (const Path& p : enumerate_r_paths(g, r)) {
    if (!path_covered(g, f, p, c)) return false;
  }
  return true;
}

MIrredComponent cover_to_component(const WeightedCover& c, int universe) {
  return MIrredComponent{universe, c.weights};
}

WeightedCover component_to_cover(const MIrredComponent& p) {
  return WeightedCover{p.pure_powers};
}

std::vector<WeightedCover> minimal_covers(const WeightedGraph& g, const Combiner& f, int r) {
  std::vector<WeightedCover> out;
  for (const MIrredComponent& c : m_irreducible_decompose(build_path_ideal(g, f, r))) {
    out.push_back(component_to_cover(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightedCover reduce_to_minimal(const WeightedGraph& g, const Combiner& f, int r,
                                const WeightedCover& c) {
  if (!is_cover(g, f, r, c)) throw std::invalid_argument("input is not a cover");
  const std::vector<Path> paths = enumerate_r_paths(g, r);
  WeightedCover cur = c;

  // Phase 1: drop removable vertices, ascending id. Dropping never turns a
  // non-removable vertex removable, so one pass reaches a stable set.
  for (int v : c.support()) {
    WeightedCover trial = cur;
    trial.weights.erase(v);
    bool still = true;
    for (const Path& p : paths) {
      if (!path_covered(g, f, p, trial)) {
        still = false;
        break;
      }
    }
    if (still) cur = std::move(trial);
  }

  // Phase 2: raise each weight to the largest value that keeps the cover,
  // ascending id. That value is the smallest rule value over the paths this
  // vertex alone covers; such a path exists, otherwise phase 1 dropped it.
  for (int v : cur.support()) {
    Int best = 0;
    bool have = false;
    for (const Path& p : paths) {
      auto pos = std::find(p.verts.begin(), p.verts.end(), v);
      if (pos == p.verts.end()) continue;
      int j = static_cast<int>(pos - p.verts.begin());
      if (!vertex_covers(g, f, p, j, cur.weights.at(v))) continue;
      bool others = false;
      for (int k = 0; k < static_cast<int>(p.verts.size()); ++k) {
        if (p.verts[k] == v) continue;
        auto it = cur.weights.find(p.verts[k]);
        if (it != cur.weights.end() && vertex_covers(g, f, p, k, it->second)) {
          others = true;
          break;
        }
      }
      if (others) continue;
      Int val = path_rule_value(g, f, p, j);
      if (!have || val < best) {
        best = val;
        have = true;
      }
    }
    if (!have) throw std::logic_error("non-removable vertex covers no path alone");
    cur.weights[v] = best;
  }
  return cur;
}

bool is_unmixed(const WeightedGraph& g, const Combiner& f, int r) {
  auto covers = minimal_covers(g, f, r);
  for (const auto& c : covers) {
    if (c.support_size() != covers.front().support_size()) return false;
  }
  return true;
}

}  // namespace wpi
