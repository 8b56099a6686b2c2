#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wpi/ints.hpp"

namespace wpi {

/// Monomial over an indexed variable set X_1..X_universe, stored as a sparse
/// exponent map (absent variable = exponent 0).
class Monomial {
 public:
  explicit Monomial(int universe) : universe_(universe) {}
  Monomial(int universe, std::map<int, Int> exps);

  int universe() const { return universe_; }
  const std::map<int, Int>& exponents() const { return exps_; }
  Int exponent(int var) const;

  bool is_one() const { return exps_.empty(); }
  bool is_pure_power() const { return exps_.size() == 1; }
  bool is_squarefree() const;
  Int total_degree() const;
  int support_size() const { return static_cast<int>(exps_.size()); }
  int lowest_var() const;

  /// Lexicographic order on dense exponent vectors (X_1 first).
  bool operator<(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return universe_ == o.universe_ && exps_ == o.exps_; }

 private:
  int universe_;
  std::map<int, Int> exps_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, h): exponents floored at zero, as in colon ideal generators.
Monomial colon_quotient(const Monomial& a, const Monomial& h);

/// Monomial ideal held as its unique minimal generating set, sorted. The
/// zero ideal is the empty generator set.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int universe) : universe_(universe) {}
  static MonomialIdeal from_generators(int universe, std::vector<Monomial> gens);

  int universe() const { return universe_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& o) const {
    return universe_ == o.universe_ && gens_ == o.gens_;
  }

 private:
  int universe_;
  std::vector<Monomial> gens_;  // minimal, ascending lex
};

MonomialIdeal minimalize(int universe, std::vector<Monomial> gens);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& i, const Monomial& h);

/// Ideal generated by pure powers of variables, P = (X_v^{a_v} : v in supp).
/// The empty map is the zero ideal.
struct MIrredComponent {
  int universe = 0;
  std::map<int, Int> pure_powers;

  bool contains(const Monomial& m) const;
  /// As ideals: this contains other iff supp(other) is inside supp(this)
  /// with componentwise smaller-or-equal exponents on this.
  bool contains_component(const MIrredComponent& other) const;
  MonomialIdeal to_ideal() const;

  bool operator==(const MIrredComponent& o) const {
    return universe == o.universe && pure_powers == o.pure_powers;
  }
  /// (support size, support, exponents): the order used for all output.
  bool operator<(const MIrredComponent& o) const;
};

/// Unique irredundant m-irreducible decomposition, sorted. Splits the
/// lexicographically first mixed generator m as u * v where u is m's pure
/// power in its lowest variable, recurses on both branches, then discards
/// every component that contains another one. Rejects the unit ideal; the
/// zero ideal yields the single empty component.
std::vector<MIrredComponent> m_irreducible_decompose(const MonomialIdeal& i);

/// All components of the irredundant decomposition have equal support size.
bool is_m_unmixed(const MonomialIdeal& i);

/// universe - min component support size; the zero ideal gives universe.
int krull_dimension_of_quotient(const MonomialIdeal& i);

struct PolarizedIdeal {
  MonomialIdeal ideal;                                // squarefree
  std::vector<std::pair<int, long long>> variables;   // new var -> (orig, copy)
};

/// Standard polarization: X_v^e becomes X_{v,1}...X_{v,e}. Every original
/// variable keeps max(1, max exponent) copies.
PolarizedIdeal polarize(const MonomialIdeal& i);

}  // namespace wpi
