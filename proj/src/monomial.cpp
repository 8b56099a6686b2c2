#include "wpi/monomial.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace wpi {

namespace {
void require_same_universe(int a, int b) {
  if (a != b) throw std::invalid_argument("variable universe mismatch");
}
}  // namespace

Monomial::Monomial(int universe, std::map<int, Int> exps) : universe_(universe), exps_(std::move(exps)) {
  for (const auto& [v, e] : exps_) {
    if (v < 1 || v > universe_) throw std::invalid_argument("variable index out of universe");
    if (e < 1) throw std::invalid_argument("stored exponents must be positive");
  }
}

Int Monomial::exponent(int var) const {
  auto it = exps_.find(var);
  return it == exps_.end() ? Int(0) : it->second;
}

bool Monomial::is_squarefree() const {
  for (const auto& [v, e] : exps_) {
    if (e > 1) return false;
  }
  return true;
}

Int Monomial::total_degree() const {
  Int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::lowest_var() const {
  if (exps_.empty()) throw std::logic_error("the monomial 1 has no variables");
  return exps_.begin()->first;
}

bool Monomial::operator<(const Monomial& o) const {
  auto a = exps_.begin();
  auto b = o.exps_.begin();
  while (a != exps_.end() && b != o.exps_.end()) {
    if (a->first < b->first) return false;  // this positive where other is 0
    if (b->first < a->first) return true;
    if (a->second != b->second) return a->second < b->second;
    ++a;
    ++b;
  }
  if (a != exps_.end()) return false;
  return b != o.exps_.end();
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_universe(a.universe(), b.universe());
  for (const auto& [v, e] : a.exponents()) {
    if (b.exponent(v) < e) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_universe(a.universe(), b.universe());
  std::map<int, Int> out = a.exponents();
  for (const auto& [v, e] : b.exponents()) {
    auto it = out.find(v);
    if (it == out.end() || it->second < e) out[v] = e;
  }
  return Monomial(a.universe(), std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_universe(a.universe(), b.universe());
  std::map<int, Int> out;
  for (const auto& [v, e] : a.exponents()) {
    Int other = b.exponent(v);
    Int m = e < other ? e : other;
    if (m > 0) out[v] = m;
  }
  return Monomial(a.universe(), std::move(out));
}

Monomial colon_quotient(const Monomial& a, const Monomial& h) {
  require_same_universe(a.universe(), h.universe());
  std::map<int, Int> out;
  for (const auto& [v, e] : a.exponents()) {
    Int rest = e - h.exponent(v);
    if (rest > 0) out[v] = rest;
  }
  return Monomial(a.universe(), std::move(out));
}

MonomialIdeal MonomialIdeal::from_generators(int universe, std::vector<Monomial> gens) {
  MonomialIdeal out(universe);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const Monomial& g : gens) {
    require_same_universe(universe, g.universe());
    bool redundant = false;
    for (const Monomial& h : gens) {
      if (!(h == g) && divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.gens_.push_back(g);
  }
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_universe(universe_, m.universe());
  for (const Monomial& g : gens_) {
    if (divides(g, m)) return true;
  }
  return false;
}

MonomialIdeal minimalize(int universe, std::vector<Monomial> gens) {
  return MonomialIdeal::from_generators(universe, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a.universe(), b.universe());
  std::vector<Monomial> gens;
  for (const Monomial& x : a.generators()) {
    for (const Monomial& y : b.generators()) gens.push_back(lcm(x, y));
  }
  return MonomialIdeal::from_generators(a.universe(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a.universe(), b.universe());
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::from_generators(a.universe(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& h) {
  require_same_universe(i.universe(), h.universe());
  std::vector<Monomial> gens;
  for (const Monomial& g : i.generators()) gens.push_back(colon_quotient(g, h));
  return MonomialIdeal::from_generators(i.universe(), std::move(gens));
}

bool MIrredComponent::contains(const Monomial& m) const {
  require_same_universe(universe, m.universe());
  for (const auto& [v, a] : pure_powers) {
    if (m.exponent(v) >= a) return true;
  }
  return false;
}

bool MIrredComponent::contains_component(const MIrredComponent& other) const {
  for (const auto& [v, a] : other.pure_powers) {
    auto it = pure_powers.find(v);
    if (it == pure_powers.end() || it->second > a) return false;
  }
  return true;
}

MonomialIdeal MIrredComponent::to_ideal() const {
  std::vector<Monomial> gens;
  for (const auto& [v, a] : pure_powers) gens.push_back(Monomial(universe, {{v, a}}));
  return MonomialIdeal::from_generators(universe, std::move(gens));
}

bool MIrredComponent::operator<(const MIrredComponent& o) const {
  if (pure_powers.size() != o.pure_powers.size()) return pure_powers.size() < o.pure_powers.size();
  auto a = pure_powers.begin();
  auto b = o.pure_powers.begin();
  for (; a != pure_powers.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
  }
  a = pure_powers.begin();
  b = o.pure_powers.begin();
  for (; a != pure_powers.end(); ++a, ++b) {
    if (a->second != b->second) return a->second < b->second;
  }
  return false;
}

namespace {

using GenKey = std::vector<Monomial>;

void decompose_rec(const MonomialIdeal& ideal, std::map<GenKey, std::set<MIrredComponent>>& memo,
                   std::set<MIrredComponent>& out) {
  auto it = memo.find(ideal.generators());
  if (it != memo.end()) {
    out.insert(it->second.begin(), it->second.end());
    return;
  }

  const Monomial* mixed = nullptr;
  for (const Monomial& g : ideal.generators()) {
    if (g.support_size() >= 2) {
      mixed = &g;
      break;
    }
  }

  std::set<MIrredComponent> local;
  if (!mixed) {
    // Pure powers only; after minimalization each variable occurs once.
    MIrredComponent comp;
    comp.universe = ideal.universe();
    for (const Monomial& g : ideal.generators()) {
      comp.pure_powers[g.lowest_var()] = g.exponent(g.lowest_var());
    }
    local.insert(std::move(comp));
  } else {
    int v = mixed->lowest_var();
    Monomial u(ideal.universe(), {{v, mixed->exponent(v)}});
    std::map<int, Int> rest_exps = mixed->exponents();
    rest_exps.erase(v);
    Monomial rest(ideal.universe(), std::move(rest_exps));

    std::vector<Monomial> keep;
    for (const Monomial& g : ideal.generators()) {
      if (!(g == *mixed)) keep.push_back(g);
    }
    for (const Monomial& piece : {u, rest}) {
      std::vector<Monomial> gens = keep;
      gens.push_back(piece);
      decompose_rec(MonomialIdeal::from_generators(ideal.universe(), std::move(gens)), memo, local);
    }
  }

  memo.emplace(ideal.generators(), local);
  out.insert(local.begin(), local.end());
}

}  // namespace

std::vector<MIrredComponent> m_irreducible_decompose(const MonomialIdeal& i) {
  if (i.is_unit()) throw std::invalid_argument("unit ideal has no m-irreducible decomposition");
  if (i.is_zero()) return {MIrredComponent{i.universe(), {}}};

  std::map<GenKey, std::set<MIrredComponent>> memo;
  std::set<MIrredComponent> raw;
  decompose_rec(i, memo, raw);

  // Drop components that contain another one; the survivors are pairwise
  // incomparable, which makes the intersection irredundant.
  std::vector<MIrredComponent> all(raw.begin(), raw.end());
  std::vector<MIrredComponent> out;
  for (const MIrredComponent& c : all) {
    bool redundant = false;
    for (const MIrredComponent& d : all) {
      if (!(c == d) && c.contains_component(d)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_m_unmixed(const MonomialIdeal& i) {
  auto comps = m_irreducible_decompose(i);
  for (const auto& c : comps) {
    if (c.pure_powers.size() != comps.front().pure_powers.size()) return false;
  }
  return true;
}

int krull_dimension_of_quotient(const MonomialIdeal& i) {
  auto comps = m_irreducible_decompose(i);
  size_t smallest = comps.front().pure_powers.size();
  for (const auto& c : comps) smallest = std::min(smallest, c.pure_powers.size());
  return i.universe() - static_cast<int>(smallest);
}

PolarizedIdeal polarize(const MonomialIdeal& i) {
  if (i.is_unit()) throw std::invalid_argument("unit ideal rejected");
  std::map<int, Int> copies;
  for (int v = 1; v <= i.universe(); ++v) copies[v] = 1;
  for (const Monomial& g : i.generators()) {
    for (const auto& [v, e] : g.exponents()) {
      if (copies[v] < e) copies[v] = e;
    }
  }

  PolarizedIdeal out{MonomialIdeal(0), {}};
  std::map<int, long long> first_index;  // orig var -> new index of copy 1
  long long next = 1;
  for (const auto& [v, c] : copies) {
    if (c > std::numeric_limits<long long>::max() / 4) throw std::length_error("polarization too large");
    first_index[v] = next;
    for (long long k = 1; k <= static_cast<long long>(c); ++k) out.variables.emplace_back(v, k);
    next += static_cast<long long>(c);
  }
  int new_universe = static_cast<int>(out.variables.size());

  std::vector<Monomial> gens;
  for (const Monomial& g : i.generators()) {
    std::map<int, Int> exps;
    for (const auto& [v, e] : g.exponents()) {
      for (long long k = 0; k < static_cast<long long>(e); ++k) {
        exps[static_cast<int>(first_index[v] + k)] = 1;
      }
    }
    gens.push_back(Monomial(new_universe, std::move(exps)));
  }
  out.ideal = MonomialIdeal::from_generators(new_universe, std::move(gens));
  return out;
}

}  // namespace wpi
