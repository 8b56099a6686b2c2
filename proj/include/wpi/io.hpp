#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wpi/cm.hpp"
#include "wpi/covers.hpp"
#include "wpi/graph.hpp"
#include "wpi/monomial.hpp"

namespace wpi {

/// Malformed input (files, JSON, monomial strings). The CLI maps this to
/// exit code 2; every other failure is a domain error with exit code 1.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using json = nlohmann::ordered_json;

// graphs: canonical JSON {"n": 6, "edges": [[1,2,2], ...]} with i < j sorted,
// or the plain-text alternative "n 6" followed by "i j w" lines.
WeightedGraph graph_from_json(const json& j);
WeightedGraph graph_from_text(const std::string& text);
WeightedGraph load_graph(const std::string& path);
json graph_to_json(const WeightedGraph& g);

// monomials: sorted "X3^2*X4^2" text and {"exps": {"3": 2, "4": 2}} JSON.
std::string monomial_to_string(const Monomial& m);
Monomial monomial_from_string(int universe, const std::string& text);
json monomial_to_json(const Monomial& m);

std::string component_to_string(const MIrredComponent& c);
json component_to_json(const MIrredComponent& c);

std::string cover_to_string(const WeightedCover& c);
json cover_to_json(const WeightedCover& c);

json witness_to_json(const SuspensionWitness& w);
json verdict_to_json(const CmVerdict& v);
std::string verdict_to_string(const CmVerdict& v);

json int_to_json(const Int& x);
Int int_from_json(const json& j);

}  // namespace wpi
