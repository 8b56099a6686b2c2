#pragma once

#include <functional>
#include <optional>
#include <string>

#include "wpi/graph.hpp"
#include "wpi/monomial.hpp"

namespace wpi {

/// Symmetric pair function on positive integers used for interior path
/// exponents. The four named tags serialize; a custom hook is accepted for
/// library use but has no CLI spelling.
class Combiner {
 public:
  enum class Tag { Max, Min, Gcd, Lcm, Custom };

  static Combiner max();
  static Combiner min();
  static Combiner gcd();
  static Combiner lcm();
  static Combiner custom(std::string name, std::function<Int(const Int&, const Int&)> fn);
  static std::optional<Combiner> parse(const std::string& name);

  Int operator()(const Int& a, const Int& b) const;
  Tag tag() const { return tag_; }
  const std::string& name() const { return name_; }

 private:
  Combiner(Tag tag, std::string name, std::function<Int(const Int&, const Int&)> fn)
      : tag_(tag), name_(std::move(name)), fn_(std::move(fn)) {}

  Tag tag_;
  std::string name_;
  std::function<Int(const Int&, const Int&)> fn_;
};

/// Exponent rule at position j of a path: endpoints take the weight of their
/// single path edge, interior vertices take f of the two incident weights.
Int path_rule_value(const WeightedGraph& g, const Combiner& f, const Path& p, int j);

/// One generator of the path ideal, X over the path's vertices with the
/// endpoint/interior exponents. Reversal invariant.
Monomial path_monomial(const WeightedGraph& g, const Combiner& f, const Path& p);

/// Minimal generating set of the f-weighted r-path ideal; the zero ideal
/// when g has no r-path. The variable universe is g.ambient().
MonomialIdeal build_path_ideal(const WeightedGraph& g, const Combiner& f, int r);

/// Self-test: the ideal equals the sum of path ideals of all induced
/// (r+1)-vertex subgraphs, embedded in the full universe.
bool locality_check(const WeightedGraph& g, const Combiner& f, int r);

}  // namespace wpi
