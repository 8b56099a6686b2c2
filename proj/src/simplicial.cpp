#include "wpi/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace wpi {

namespace {

using Mask = std::uint32_t;

int popcount(Mask m) { return std::popcount(m); }

std::vector<Mask> faces_from_ideal(const MonomialIdeal& ideal) {
  int m = ideal.universe();
  if (m > 26) throw std::length_error("complex universe too large");
  std::vector<Mask> gens;
  for (const Monomial& g : ideal.generators()) {
    Mask gm = 0;
    for (const auto& [v, e] : g.exponents()) gm |= Mask(1) << (v - 1);
    gens.push_back(gm);
  }
  std::vector<Mask> faces;
  for (Mask s = 0; s < (Mask(1) << m); ++s) {
    bool blocked = false;
    for (Mask gm : gens) {
      if ((gm & s) == gm) {
        blocked = true;
        break;
      }
    }
    if (!blocked) faces.push_back(s);
  }
  return faces;
}

bool face_order(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

// Elementary collapses: remove a face together with its unique coface until
// none is free. Homotopy type, hence homology, is unchanged.
std::vector<Mask> collapse(const std::vector<Mask>& faces, int m) {
  std::unordered_set<Mask> present(faces.begin(), faces.end());
  std::unordered_map<Mask, int> cofaces;
  for (Mask s : faces) {
    Mask rest = s;
    while (rest) {
      Mask bit = rest & (~rest + 1);
      ++cofaces[s ^ bit];
      rest ^= bit;
    }
  }
  std::deque<Mask> queue;
  for (Mask s : faces) {
    if (cofaces[s] == 1) queue.push_back(s);
  }
  while (!queue.empty()) {
    Mask tau = queue.front();
    queue.pop_front();
    if (!present.count(tau) || cofaces[tau] != 1) continue;
    Mask sigma = 0;
    for (int v = 0; v < m; ++v) {
      Mask up = tau | (Mask(1) << v);
      if (up != tau && present.count(up)) {
        sigma = up;
        break;
      }
    }
    present.erase(tau);
    present.erase(sigma);
    for (Mask removed : {tau, sigma}) {
      Mask rest = removed;
      while (rest) {
        Mask bit = rest & (~rest + 1);
        Mask sub = removed ^ bit;
        if (--cofaces[sub] == 1 && present.count(sub)) queue.push_back(sub);
        rest ^= bit;
      }
    }
  }
  std::vector<Mask> out(present.begin(), present.end());
  std::sort(out.begin(), out.end(), face_order);
  return out;
}

using Column = std::vector<std::pair<int, Int>>;  // sorted by row, no zeros

// result = a * a_scale - b * b_scale, content-normalized
Column combine(const Column& a, const Column& b, const Int& a_scale, const Int& b_scale) {
  Column out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, a[i].second * a_scale);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -b[j].second * b_scale);
      ++j;
    } else {
      Int val = a[i].second * a_scale - b[j].second * b_scale;
      if (val != 0) out.emplace_back(a[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  Int content = 0;
  for (const auto& [row, val] : out) content = int_gcd(content, val < 0 ? Int(-val) : val);
  if (content > 1) {
    for (auto& [row, val] : out) val /= content;
  }
  return out;
}

long long column_rank(std::vector<Column> cols) {
  std::unordered_map<int, Column> pivot_by_low;
  long long rank = 0;
  for (Column& col : cols) {
    while (!col.empty()) {
      int low = col.back().first;
      auto it = pivot_by_low.find(low);
      if (it == pivot_by_low.end()) {
        pivot_by_low.emplace(low, std::move(col));
        ++rank;
        break;
      }
      col = combine(col, it->second, it->second.back().second, col.back().second);
    }
  }
  return rank;
}

// Reduced rational Betti numbers for dimensions -1..orig_dim of the complex
// given by all its faces.
std::vector<long long> homology_of_faces(const std::vector<Mask>& faces, int m, int orig_dim) {
  std::vector<long long> betti(orig_dim + 2, 0);
  std::vector<Mask> core = collapse(faces, m);
  if (core.empty()) return betti;

  int top = 0;
  for (Mask s : core) top = std::max(top, popcount(s));
  std::vector<std::vector<Mask>> by_level(top + 1);
  for (Mask s : core) by_level[popcount(s)].push_back(s);
  for (auto& level : by_level) std::sort(level.begin(), level.end());

  // rank of the boundary map from level k to level k-1, k = 1..top
  std::vector<long long> ranks(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    std::unordered_map<Mask, int> row_of;
    for (size_t idx = 0; idx < by_level[k - 1].size(); ++idx) row_of[by_level[k - 1][idx]] = static_cast<int>(idx);
    std::vector<Column> cols;
    cols.reserve(by_level[k].size());
    for (Mask s : by_level[k]) {
      Column col;
      int sign = 1;
      Mask rest = s;
      while (rest) {
        Mask bit = rest & (~rest + 1);
        auto it = row_of.find(s ^ bit);
        if (it != row_of.end()) col.emplace_back(it->second, Int(sign));
        sign = -sign;
        rest ^= bit;
      }
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
    ranks[k] = column_rank(std::move(cols));
  }

  for (int k = 0; k <= top; ++k) {
    long long b = static_cast<long long>(by_level[k].size()) - ranks[k] - ranks[k + 1];
    if (k - 1 + 1 < static_cast<int>(betti.size())) betti[k] = b;  // index k holds dim k-1
  }
  return betti;
}

}  // namespace

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& squarefree) {
  if (squarefree.is_unit()) throw std::invalid_argument("unit ideal has no Stanley-Reisner complex");
  for (const Monomial& g : squarefree.generators()) {
    if (!g.is_squarefree()) throw std::invalid_argument("ideal is not squarefree");
  }
  std::vector<Mask> faces = faces_from_ideal(squarefree);
  std::unordered_set<Mask> present(faces.begin(), faces.end());

  SimplicialComplex out;
  out.num_vertices = squarefree.universe();
  for (Mask s : faces) {
    bool maximal = true;
    for (int v = 0; v < out.num_vertices && maximal; ++v) {
      Mask up = s | (Mask(1) << v);
      if (up != s && present.count(up)) maximal = false;
    }
    if (maximal) out.facets.push_back(s);
  }
  std::sort(out.facets.begin(), out.facets.end(), face_order);
  return out;
}

std::vector<std::uint32_t> all_faces(const SimplicialComplex& c) {
  std::unordered_set<Mask> seen;
  for (Mask f : c.facets) {
    // subsets of f
    Mask sub = f;
    for (;;) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  if (seen.empty()) seen.insert(0);
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), face_order);
  return out;
}

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& c) {
  std::vector<Mask> faces = all_faces(c);
  int dim = -1;
  for (Mask s : faces) dim = std::max(dim, popcount(s) - 1);
  return homology_of_faces(faces, c.num_vertices, dim);
}

bool is_cm_rational(const MonomialIdeal& i, int polarized_guard) {
  PolarizedIdeal pol = polarize(i);
  int m = pol.ideal.universe();
  if (m > polarized_guard) throw std::length_error("polarized universe exceeds the size guard");

  std::vector<Mask> faces = faces_from_ideal(pol.ideal);

  for (Mask f : faces) {
    std::vector<Mask> link;
    for (Mask g : faces) {
      if ((g & f) == f) link.push_back(g & ~f);
    }
    int d = -1;
    for (Mask s : link) d = std::max(d, popcount(s) - 1);
    // Dimension 0 or less: the only conditions would sit below dimension 0,
    // and reduced H_{-1} vanishes as soon as the link has a vertex.
    if (d <= 0) continue;
    std::vector<long long> betti = homology_of_faces(link, m, d);
    for (int idx = 0; idx <= d; ++idx) {  // dims -1..d-1
      if (betti[idx] != 0) return false;
    }
  }
  return true;
}

}  // namespace wpi
