#include "wpi/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace wpi {

namespace {

Int int_from_decimal(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer");
  size_t start = s[0] == '-' ? 1 : 0;
  if (start == s.size()) throw ParseError("bad integer: " + s);
  for (size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("bad integer: " + s);
  }
  return Int(s);
}

std::string key_of(int v) { return std::to_string(v); }

}  // namespace

json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return json(x.convert_to<long long>());
  return json(x.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) return int_from_decimal(j.get<std::string>());
  throw ParseError("expected an integer");
}

WeightedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("graph JSON needs fields n and edges");
  }
  if (!j["n"].is_number_integer() && !j["n"].is_number_unsigned()) throw ParseError("n must be an integer");
  long long n = j["n"].get<long long>();
  if (n < 1 || n > 1'000'000) throw ParseError("vertex count out of range");
  std::vector<WeightedGraph::Edge> edges;
  if (!j["edges"].is_array()) throw ParseError("edges must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3) throw ParseError("each edge is [i, j, w]");
    if (!e[0].is_number_integer() || !e[1].is_number_integer()) throw ParseError("edge endpoints must be integers");
    Int w = int_from_json(e[2]);
    edges.emplace_back(e[0].get<int>(), e[1].get<int>(), w);
  }
  try {
    return WeightedGraph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("invalid graph: ") + ex.what());
  }
}

WeightedGraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  long long n = 0;
  if (!(in >> tag >> n) || tag != "n") throw ParseError("text graph starts with: n <count>");
  if (n < 1 || n > 1'000'000) throw ParseError("vertex count out of range");
  std::vector<WeightedGraph::Edge> edges;
  int i = 0;
  while (in >> i) {
    int j = 0;
    std::string w;
    if (!(in >> j >> w)) throw ParseError("incomplete edge line in text graph");
    edges.emplace_back(i, j, int_from_decimal(w));
  }
  if (!in.eof()) throw ParseError("trailing junk in text graph");
  try {
    return WeightedGraph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("invalid graph: ") + ex.what());
  }
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty graph file: " + path);
  if (text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
    return graph_from_json(j);
  }
  return graph_from_text(text);
}

json graph_to_json(const WeightedGraph& g) {
  json edges = json::array();
  for (const auto& [key, w] : g.edges()) {
    edges.push_back(json::array({key.first, key.second, int_to_json(w)}));
  }
  return json{{"n", g.ambient()}, {"edges", edges}};
}

std::string monomial_to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : m.exponents()) {
    if (!first) out << "*";
    first = false;
    out << "X" << v;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

Monomial monomial_from_string(int universe, const std::string& text) {
  if (text == "1") return Monomial(universe);
  std::map<int, Int> exps;
  size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'X' && text[pos] != 'x') throw ParseError("monomial factor must start with X: " + text);
    ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("missing variable index in " + text);
    int var = std::stoi(text.substr(start, pos - start));
    Int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("missing exponent in " + text);
      e = int_from_decimal(text.substr(start, pos - start));
    }
    if (pos < text.size()) {
      if (text[pos] != '*') throw ParseError("expected * between factors in " + text);
      ++pos;
      if (pos == text.size()) throw ParseError("dangling * in " + text);
    }
    if (exps.count(var)) throw ParseError("repeated variable in " + text);
    if (var < 1 || var > universe) throw ParseError("variable out of universe in " + text);
    if (e < 1) throw ParseError("exponent must be positive in " + text);
    exps[var] = e;
  }
  return Monomial(universe, std::move(exps));
}

json monomial_to_json(const Monomial& m) {
  json exps = json::object();
  for (const auto& [v, e] : m.exponents()) exps[key_of(v)] = int_to_json(e);
  return json{{"exps", exps}};
}

std::string component_to_string(const MIrredComponent& c) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const auto& [v, e] : c.pure_powers) {
    if (!first) out << ", ";
    first = false;
    out << "X" << v;
    if (e != 1) out << "^" << e;
  }
  out << ")";
  return out.str();
}

json component_to_json(const MIrredComponent& c) {
  json out = json::object();
  for (const auto& [v, e] : c.pure_powers) out[key_of(v)] = int_to_json(e);
  return out;
}

std::string cover_to_string(const WeightedCover& c) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [v, w] : c.weights) {
    if (!first) out << ", ";
    first = false;
    out << "v" << v;
    if (w != 1) out << "^" << w;
  }
  out << "}";
  return out.str();
}

json cover_to_json(const WeightedCover& c) {
  json out = json::object();
  for (const auto& [v, w] : c.weights) out[key_of(v)] = int_to_json(w);
  return out;
}

json witness_to_json(const SuspensionWitness& w) {
  json whiskers = json::object();
  for (const auto& [base, ys] : w.whiskers) whiskers[key_of(base)] = ys;
  return json{{"bases", w.bases}, {"whiskers", whiskers}};
}

namespace {
std::string stage_name(CmStage s) {
  switch (s) {
    case CmStage::NoPaths: return "no-paths";
    case CmStage::Suspension: return "suspension";
    case CmStage::NoSuspension: return "no-suspension";
    case CmStage::WeightViolation: return "weight-inequality-violated";
    case CmStage::TriplesAllCm: return "all-3-cliques-cm";
    case CmStage::FailingTriple: return "failing-3-clique";
  }
  return "?";
}
}  // namespace

json verdict_to_json(const CmVerdict& v) {
  json out{{"cm", v.is_cm}, {"method", v.method}, {"stage", stage_name(v.stage)}};
  if (v.method == "tree") {
    out["pruned"] = v.pruned;
    if (v.witness) out["witness"] = witness_to_json(*v.witness);
    if (!v.edge_checks.empty()) {
      json checks = json::array();
      for (const EdgeCheck& ec : v.edge_checks) {
        checks.push_back(json{{"edge", json::array({ec.i, ec.j})},
                              {"edge_weight", int_to_json(ec.edge_weight)},
                              {"whisker_weights", json::array({int_to_json(ec.whisker_i), int_to_json(ec.whisker_j)})},
                              {"ok", ec.ok}});
      }
      out["edge_checks"] = checks;
    }
  }
  if (v.stage == CmStage::FailingTriple) {
    out["witness_triple"] = json::array({v.triple[0], v.triple[1], v.triple[2]});
  }
  return out;
}

std::string verdict_to_string(const CmVerdict& v) {
  std::ostringstream out;
  out << (v.is_cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") << "; ";
  switch (v.stage) {
    case CmStage::NoPaths:
      out << "no r-paths after pruning";
      break;
    case CmStage::Suspension: {
      out << "r-path suspension with bases (";
      for (size_t k = 0; k < v.witness->bases.size(); ++k) {
        if (k) out << ",";
        out << v.witness->bases[k];
      }
      out << ")";
      break;
    }
    case CmStage::NoSuspension:
      out << "pruned graph is not an r-path suspension";
      break;
    case CmStage::WeightViolation: {
      const EdgeCheck* bad = nullptr;
      for (const EdgeCheck& ec : v.edge_checks) {
        if (!ec.ok) {
          bad = &ec;
          break;
        }
      }
      out << "weight inequality violated at base edge (" << bad->i << "," << bad->j << ")";
      break;
    }
    case CmStage::TriplesAllCm:
      out << "every induced 3-clique is Cohen-Macaulay";
      break;
    case CmStage::FailingTriple:
      out << "witness triple (" << v.triple[0] << "," << v.triple[1] << "," << v.triple[2] << ")";
      break;
  }
  return out.str();
}

}  // namespace wpi
