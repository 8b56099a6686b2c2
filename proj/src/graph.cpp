#include "wpi/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wpi {

namespace {
std::pair<int, int> ordered(int i, int j) { return i < j ? std::make_pair(i, j) : std::make_pair(j, i); }
}  // namespace

WeightedGraph::WeightedGraph(int n, const std::vector<Edge>& edge_list) : ambient_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  vertices_.resize(n);
  for (int v = 1; v <= n; ++v) vertices_[v - 1] = v;
  for (const auto& [i, j, w] : edge_list) {
    if (i == j) throw std::invalid_argument("loop edge rejected");
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("edge endpoint out of range");
    if (w < 1) throw std::invalid_argument("edge weight must be positive");
    auto key = ordered(i, j);
    if (edges_.count(key)) throw std::invalid_argument("duplicate edge");
    edges_[key] = w;
  }
  for (int v : vertices_) adjacency_[v];
  for (const auto& [key, w] : edges_) {
    adjacency_[key.first].push_back(key.second);
    adjacency_[key.second].push_back(key.first);
  }
  for (auto& [v, nbrs] : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool WeightedGraph::has_vertex(int v) const { return adjacency_.count(v) != 0; }

int WeightedGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

const std::vector<int>& WeightedGraph::neighbors(int v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw std::out_of_range("vertex not in graph");
  return it->second;
}

bool WeightedGraph::has_edge(int i, int j) const { return edges_.count(ordered(i, j)) != 0; }

const Int& WeightedGraph::weight(int i, int j) const {
  auto it = edges_.find(ordered(i, j));
  if (it == edges_.end()) throw std::out_of_range("edge not in graph");
  return it->second;
}

WeightedGraph WeightedGraph::induced(const std::vector<int>& keep) const {
  WeightedGraph out;
  out.ambient_ = ambient_;
  std::set<int> kept;
  for (int v : keep) {
    if (!has_vertex(v)) throw std::out_of_range("vertex not in graph");
    kept.insert(v);
  }
  out.vertices_.assign(kept.begin(), kept.end());
  for (int v : out.vertices_) out.adjacency_[v];
  for (const auto& [key, w] : edges_) {
    if (kept.count(key.first) && kept.count(key.second)) {
      out.edges_[key] = w;
      out.adjacency_[key.first].push_back(key.second);
      out.adjacency_[key.second].push_back(key.first);
    }
  }
  for (auto& [v, nbrs] : out.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return out;
}

Path Path::canonical(std::vector<int> seq) {
  if (seq.size() < 2) throw std::invalid_argument("a path has at least two vertices");
  std::set<int> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size()) throw std::invalid_argument("path vertices must be distinct");
  if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
  return Path{std::move(seq)};
}

Path Path::reversed() const {
  Path p{verts};
  std::reverse(p.verts.begin(), p.verts.end());
  return p;
}

bool is_path_of(const WeightedGraph& g, const std::vector<int>& seq) {
  if (seq.size() < 2) return false;
  std::set<int> seen;
  for (int v : seq) {
    if (!g.has_vertex(v) || !seen.insert(v).second) return false;
  }
  for (size_t k = 0; k + 1 < seq.size(); ++k) {
    if (!g.has_edge(seq[k], seq[k + 1])) return false;
  }
  return true;
}

std::vector<Path> enumerate_r_paths(const WeightedGraph& g, int r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  std::vector<Path> out;
  std::vector<int> stack;
  std::set<int> on_stack;

  auto extend = [&](auto&& self, int v) -> void {
    stack.push_back(v);
    on_stack.insert(v);
    if (static_cast<int>(stack.size()) == r + 1) {
      if (stack.front() < stack.back()) out.push_back(Path{stack});
    } else {
      for (int w : g.neighbors(v)) {
        if (!on_stack.count(w)) self(self, w);
      }
    }
    on_stack.erase(v);
    stack.pop_back();
  };

  for (int v : g.vertices()) extend(extend, v);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_r_pathless_leaf(const WeightedGraph& g, int v, int r) {
  if (!g.has_vertex(v)) throw std::out_of_range("vertex not in graph");
  if (g.degree(v) != 1) return false;
  for (const Path& p : enumerate_r_paths(g, r)) {
    if (std::find(p.verts.begin(), p.verts.end(), v) != p.verts.end()) return false;
  }
  return true;
}

std::pair<WeightedGraph, std::vector<int>> prune_pathless_leaves(const WeightedGraph& g, int r) {
  WeightedGraph h = g;
  std::vector<int> removed;
  for (;;) {
    int victim = 0;
    for (int v : h.vertices()) {
      if (h.degree(v) == 1 && is_r_pathless_leaf(h, v, r)) {
        victim = v;
        break;
      }
    }
    if (victim == 0) break;
    removed.push_back(victim);
    std::vector<int> keep;
    for (int v : h.vertices()) {
      if (v != victim) keep.push_back(v);
    }
    h = h.induced(keep);
  }
  return {h, removed};
}

namespace {

struct WhiskerCandidate {
  int leaf = 0;
  std::vector<int> walk;  // leaf = y_r, then inward: y_{r-1}, ..., y_1
  int base = 0;
};

// Walks inward from a degree-1 vertex through exactly r edges. The r-1
// intermediate vertices must have degree 2, which makes the walk unique.
std::optional<WhiskerCandidate> whisker_walk(const WeightedGraph& g, int leaf, int r) {
  WhiskerCandidate c;
  c.leaf = leaf;
  c.walk.push_back(leaf);
  int prev = 0;
  int cur = leaf;
  for (int step = 1; step <= r; ++step) {
    const auto& nbrs = g.neighbors(cur);
    int next = 0;
    for (int w : nbrs) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (next == 0) return std::nullopt;
    if (std::find(c.walk.begin(), c.walk.end(), next) != c.walk.end()) return std::nullopt;
    if (step < r) {
      if (g.degree(next) != 2) return std::nullopt;
      c.walk.push_back(next);
    } else {
      c.base = next;
    }
    prev = cur;
    cur = next;
  }
  return c;
}

}  // namespace

std::optional<SuspensionWitness> detect_r_path_suspension(const WeightedGraph& g, int r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  int nv = g.vertex_count();
  if (nv % (r + 1) != 0) return std::nullopt;
  const int beta = nv / (r + 1);

  std::vector<int> leaves;
  for (int v : g.vertices()) {
    if (g.degree(v) == 1) leaves.push_back(v);
  }

  std::vector<std::optional<WhiskerCandidate>> cands;
  cands.reserve(leaves.size());
  for (int leaf : leaves) cands.push_back(whisker_walk(g, leaf, r));

  std::set<int> in_whisker;
  std::set<int> used_base;
  std::vector<const WhiskerCandidate*> chosen;
  std::optional<SuspensionWitness> found;

  auto complete = [&]() -> bool {
    if (static_cast<int>(chosen.size()) != beta) return false;
    // Bases are exactly the vertices outside all whiskers, each base carrying
    // exactly one whisker.
    std::set<int> bases;
    for (int v : g.vertices()) {
      if (!in_whisker.count(v)) bases.insert(v);
    }
    if (bases != used_base) return false;
    SuspensionWitness w;
    w.bases.assign(bases.begin(), bases.end());
    for (const WhiskerCandidate* c : chosen) {
      std::vector<int> ordered_whisker(c->walk.rbegin(), c->walk.rend());
      w.whiskers[c->base] = std::move(ordered_whisker);
    }
    found = std::move(w);
    return true;
  };

  auto search = [&](auto&& self, size_t idx) -> bool {
    if (idx == leaves.size()) return complete();
    // Option 1: this leaf heads a whisker.
    const auto& cand = cands[idx];
    if (cand && !in_whisker.count(cand->leaf)) {
      bool clash = used_base.count(cand->base) || in_whisker.count(cand->base);
      for (int v : cand->walk) {
        if (clash) break;
        clash = in_whisker.count(v) || used_base.count(v);
      }
      if (!clash) {
        for (int v : cand->walk) in_whisker.insert(v);
        used_base.insert(cand->base);
        chosen.push_back(&*cand);
        if (self(self, idx + 1)) return true;
        chosen.pop_back();
        used_base.erase(cand->base);
        for (int v : cand->walk) in_whisker.erase(v);
      }
    }
    // Option 2: leave the leaf to be a base of its own whisker.
    return self(self, idx + 1);
  };

  search(search, 0);
  return found;
}

bool witness_is_valid(const WeightedGraph& g, int r, const SuspensionWitness& w) {
  std::set<int> seen;
  for (int b : w.bases) {
    if (!g.has_vertex(b) || !seen.insert(b).second) return false;
  }
  if (w.whiskers.size() != w.bases.size()) return false;
  for (const auto& [base, ys] : w.whiskers) {
    if (!std::binary_search(w.bases.begin(), w.bases.end(), base)) return false;
    if (static_cast<int>(ys.size()) != r) return false;
    int prev = base;
    for (int k = 0; k < r; ++k) {
      int y = ys[k];
      if (!g.has_vertex(y) || !seen.insert(y).second) return false;
      if (!g.has_edge(prev, y)) return false;
      int want = (k == r - 1) ? 1 : 2;
      if (g.degree(y) != want) return false;
      prev = y;
    }
  }
  return static_cast<int>(seen.size()) == g.vertex_count();
}

GraphShape classify(const WeightedGraph& g) {
  // connectivity
  std::set<int> visited;
  std::vector<int> frontier{g.vertices().front()};
  visited.insert(frontier.front());
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    for (int w : g.neighbors(v)) {
      if (visited.insert(w).second) frontier.push_back(w);
    }
  }
  bool connected = static_cast<int>(visited.size()) == g.vertex_count();
  long long n = g.vertex_count();
  if (connected && g.edge_count() == n - 1) return GraphShape::Tree;
  if (n >= 2 && g.edge_count() == n * (n - 1) / 2) return GraphShape::Complete;
  return GraphShape::Other;
}

}  // namespace wpi
