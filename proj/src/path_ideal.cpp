#include "wpi/path_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpi {

Combiner Combiner::max() {
  return Combiner(Tag::Max, "max", [](const Int& a, const Int& b) { return a > b ? a : b; });
}

Combiner Combiner::min() {
  return Combiner(Tag::Min, "min", [](const Int& a, const Int& b) { return a < b ? a : b; });
}

Combiner Combiner::gcd() {
  return Combiner(Tag::Gcd, "gcd", [](const Int& a, const Int& b) { return int_gcd(a, b); });
}

Combiner Combiner::lcm() {
  return Combiner(Tag::Lcm, "lcm", [](const Int& a, const Int& b) { return int_lcm(a, b); });
}

Combiner Combiner::custom(std::string name, std::function<Int(const Int&, const Int&)> fn) {
  return Combiner(Tag::Custom, std::move(name), std::move(fn));
}

std::optional<Combiner> Combiner::parse(const std::string& name) {
  if (name == "max") return max();
  if (name == "min") return min();
  if (name == "gcd") return gcd();
  if (name == "lcm") return lcm();
  return std::nullopt;
}

Int Combiner::operator()(const Int& a, const Int& b) const {
  Int lo = a < b ? a : b;
  Int hi = a < b ? b : a;
  return fn_(lo, hi);  // evaluated on the unordered pair
}

Int path_rule_value(const WeightedGraph& g, const Combiner& f, const Path& p, int j) {
  const auto& v = p.verts;
  int last = static_cast<int>(v.size()) - 1;
  if (j < 0 || j > last) throw std::out_of_range("path position out of range");
  if (j == 0) return g.weight(v[0], v[1]);
  if (j == last) return g.weight(v[last - 1], v[last]);
  return f(g.weight(v[j - 1], v[j]), g.weight(v[j], v[j + 1]));
}

Monomial path_monomial(const WeightedGraph& g, const Combiner& f, const Path& p) {
  if (!is_path_of(g, p.verts)) throw std::invalid_argument("not a path of this graph");
  std::map<int, Int> exps;
  for (int j = 0; j < static_cast<int>(p.verts.size()); ++j) {
    exps[p.verts[j]] = path_rule_value(g, f, p, j);
  }
  return Monomial(g.ambient(), std::move(exps));
}

MonomialIdeal build_path_ideal(const WeightedGraph& g, const Combiner& f, int r) {
  std::vector<Monomial> gens;
  for (const Path& p : enumerate_r_paths(g, r)) gens.push_back(path_monomial(g, f, p));
  return MonomialIdeal::from_generators(g.ambient(), std::move(gens));
}

bool locality_check(const WeightedGraph& g, const Combiner& f, int r) {
  MonomialIdeal whole = build_path_ideal(g, f, r);

  MonomialIdeal acc(g.ambient());
  const auto& verts = g.vertices();
  int n = static_cast<int>(verts.size());
  int k = r + 1;
  if (k <= n) {
    std::vector<int> pick;
    auto combine = [&](auto&& self, int from) -> void {
      if (static_cast<int>(pick.size()) == k) {
        acc = sum(acc, build_path_ideal(g.induced(pick), f, r));
        return;
      }
      for (int idx = from; idx < n; ++idx) {
        pick.push_back(verts[idx]);
        self(self, idx + 1);
        pick.pop_back();
      }
    };
    combine(combine, 0);
  }
  return acc == whole;
}

}  // namespace wpi
