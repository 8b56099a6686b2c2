#pragma once

#include <map>
#include <vector>

#include "wpi/graph.hpp"
#include "wpi/monomial.hpp"
#include "wpi/path_ideal.hpp"

namespace wpi {

/// A weighted vertex subset (W, sigma): vertex id -> positive weight.
struct WeightedCover {
  std::map<int, Int> weights;

  int support_size() const { return static_cast<int>(weights.size()); }
  std::vector<int> support() const;

  bool operator==(const WeightedCover& o) const { return weights == o.weights; }
  /// (support size, support, weights): the order used for all output.
  bool operator<(const WeightedCover& o) const;
};

/// Every r-path of g must contain a vertex of the cover whose weight is at
/// most the endpoint/interior rule value at its position.
bool is_cover(const WeightedGraph& g, const Combiner& f, int r, const WeightedCover& c);

MIrredComponent cover_to_component(const WeightedCover& c, int universe);
WeightedCover component_to_cover(const MIrredComponent& p);

/// The minimal f-weighted r-path vertex covers of g, obtained as the
/// components of the irredundant decomposition of the path ideal.
std::vector<WeightedCover> minimal_covers(const WeightedGraph& g, const Combiner& f, int r);

/// Walks a cover down to a minimal one below it: drop removable vertices in
/// ascending id order, then raise each remaining weight to the largest value
/// that still covers everything (ascending id order).
WeightedCover reduce_to_minimal(const WeightedGraph& g, const Combiner& f, int r,
                                const WeightedCover& c);

/// All minimal covers share one support size.
bool is_unmixed(const WeightedGraph& g, const Combiner& f, int r);

}  // namespace wpi
