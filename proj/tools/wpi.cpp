#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wpi/cm.hpp"
#include "wpi/covers.hpp"
#include "wpi/io.hpp"
#include "wpi/simplicial.hpp"

namespace {

struct Options {
  std::string graph_path;
  int r = 1;
  std::string f = "max";
  std::string format = "text";
  bool oracle = false;
  std::string colon_by;
};

wpi::Combiner combiner_of(const Options& opt) {
  auto f = wpi::Combiner::parse(opt.f);
  if (!f) throw wpi::ParseError("unknown combiner: " + opt.f);
  return *f;
}

int oracle_guard() {
  const char* env = std::getenv("WPI_SIZE_GUARD");
  if (!env) return wpi::kDefaultPolarizedGuard;
  try {
    return std::stoi(env);
  } catch (...) {
    throw wpi::ParseError("WPI_SIZE_GUARD must be an integer");
  }
}

void emit(const Options& opt, const wpi::json& as_json, const std::string& as_text) {
  if (opt.format == "json") {
    std::cout << as_json.dump(2) << "\n";
  } else {
    std::cout << as_text;
  }
}

int run_paths(const Options& opt) {
  wpi::WeightedGraph g = wpi::load_graph(opt.graph_path);
  auto paths = wpi::enumerate_r_paths(g, opt.r);
  wpi::json arr = wpi::json::array();
  std::string text;
  for (const auto& p : paths) {
    arr.push_back(p.verts);
    for (size_t k = 0; k < p.verts.size(); ++k) {
      text += (k ? " " : "") + std::to_string(p.verts[k]);
    }
    text += "\n";
  }
  emit(opt, wpi::json{{"r", opt.r}, {"paths", arr}}, text);
  return 0;
}

int run_gens(const Options& opt) {
  wpi::WeightedGraph g = wpi::load_graph(opt.graph_path);
  auto ideal = wpi::build_path_ideal(g, combiner_of(opt), opt.r);
  wpi::json arr = wpi::json::array();
  std::string text;
  for (const auto& m : ideal.generators()) {
    arr.push_back(wpi::monomial_to_json(m));
    text += wpi::monomial_to_string(m) + "\n";
  }
  emit(opt, wpi::json{{"universe", ideal.universe()}, {"r", opt.r}, {"f", opt.f}, {"generators", arr}}, text);
  return 0;
}

int run_decompose(const Options& opt) {
  wpi::WeightedGraph g = wpi::load_graph(opt.graph_path);
  auto comps = wpi::m_irreducible_decompose(wpi::build_path_ideal(g, combiner_of(opt), opt.r));
  std::sort(comps.begin(), comps.end());
  wpi::json arr = wpi::json::array();
  std::string text = "irredundant m-irreducible decomposition (" + std::to_string(comps.size()) + " components)\n";
  for (const auto& c : comps) {
    arr.push_back(wpi::component_to_json(c));
    text += wpi::component_to_string(c) + "\n";
  }
  emit(opt, wpi::json{{"universe", g.ambient()}, {"irredundant", true}, {"components", arr}}, text);
  return 0;
}

int run_covers(const Options& opt) {
  wpi::WeightedGraph g = wpi::load_graph(opt.graph_path);
  auto covers = wpi::minimal_covers(g, combiner_of(opt), opt.r);
  wpi::json arr = wpi::json::array();
  std::string text;
  for (const auto& c : covers) {
    arr.push_back(wpi::cover_to_json(c));
    text += wpi::cover_to_string(c) + "\n";
  }
  emit(opt, wpi::json{{"covers", arr}}, text);
  return 0;
}

int run_unmixed(const Options& opt) {
  wpi::WeightedGraph g = wpi::load_graph(opt.graph_path);
  bool u = wpi::is_unmixed(g, combiner_of(opt), opt.r);
  emit(opt, wpi::json{{"unmixed", u}}, std::string(u ? "true" : "false") + "\n");
  return 0;
}

int run_dim(const Options& opt) {
  wpi::WeightedGraph g = wpi::load_graph(opt.graph_path);
  int d = wpi::krull_dimension_of_quotient(wpi::build_path_ideal(g, combiner_of(opt), opt.r));
  emit(opt, wpi::json{{"dim", d}}, std::to_string(d) + "\n");
  return 0;
}

int run_cm(const Options& opt) {
  wpi::WeightedGraph g = wpi::load_graph(opt.graph_path);
  if (opt.oracle) {
    auto ideal = wpi::build_path_ideal(g, wpi::Combiner::max(), opt.r);
    bool cm = wpi::is_cm_rational(ideal, oracle_guard());
    emit(opt, wpi::json{{"cm", cm}, {"method", "reisner-oracle"}},
         std::string(cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") + " (oracle)\n");
    return 0;
  }
  if (opt.f != "max") throw std::domain_error("Cohen-Macaulay characterizations require f = max");
  auto verdict = wpi::cm_auto(g, opt.r);
  emit(opt, wpi::verdict_to_json(verdict), wpi::verdict_to_string(verdict) + "\n");
  return 0;
}

int run_polarize(const Options& opt) {
  wpi::WeightedGraph g = wpi::load_graph(opt.graph_path);
  auto pol = wpi::polarize(wpi::build_path_ideal(g, combiner_of(opt), opt.r));
  wpi::json vars = wpi::json::array();
  for (const auto& [orig, copy] : pol.variables) {
    vars.push_back(wpi::json{{"var", orig}, {"copy", copy}});
  }
  wpi::json arr = wpi::json::array();
  std::string text;
  for (const auto& m : pol.ideal.generators()) {
    arr.push_back(wpi::monomial_to_json(m));
    std::string line;
    for (const auto& [v, e] : m.exponents()) {
      if (!line.empty()) line += "*";
      line += "X" + std::to_string(pol.variables[v - 1].first) + "_" + std::to_string(pol.variables[v - 1].second);
    }
    text += line + "\n";
  }
  emit(opt, wpi::json{{"universe", pol.ideal.universe()}, {"variables", vars}, {"generators", arr}}, text);
  return 0;
}

int run_colon(const Options& opt) {
  wpi::WeightedGraph g = wpi::load_graph(opt.graph_path);
  auto ideal = wpi::build_path_ideal(g, combiner_of(opt), opt.r);
  wpi::Monomial by = wpi::monomial_from_string(ideal.universe(), opt.colon_by);
  auto quot = wpi::colon(ideal, by);
  wpi::json arr = wpi::json::array();
  std::string text;
  for (const auto& m : quot.generators()) {
    arr.push_back(wpi::monomial_to_json(m));
    text += wpi::monomial_to_string(m) + "\n";
  }
  emit(opt, wpi::json{{"universe", quot.universe()}, {"generators", arr}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"f-weighted r-path ideals of weighted graphs"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_f) {
    sub->add_option("--graph", opt.graph_path, "graph file (JSON or text)")->required();
    sub->add_option("--r", opt.r, "path length r")->required()->check(CLI::PositiveNumber);
    if (needs_f) {
      sub->add_option("--f", opt.f, "combiner")->check(CLI::IsMember({"max", "min", "gcd", "lcm"}));
    }
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  add_common(app.add_subcommand("paths", "canonical r-paths"), false);
  add_common(app.add_subcommand("gens", "path-ideal generators"), true);
  add_common(app.add_subcommand("decompose", "irredundant m-irreducible components"), true);
  add_common(app.add_subcommand("covers", "minimal weighted covers"), true);
  add_common(app.add_subcommand("unmixed", "all minimal covers share one size"), true);
  add_common(app.add_subcommand("dim", "Krull dimension of the quotient"), true);
  auto* cm = app.add_subcommand("cm", "Cohen-Macaulay verdict with witness");
  add_common(cm, true);
  cm->add_flag("--oracle", opt.oracle, "decide homologically over the rationals");
  add_common(app.add_subcommand("polarize", "polarized path ideal"), true);
  auto* colon = app.add_subcommand("colon", "colon ideal of the path ideal");
  add_common(colon, true);
  colon->add_option("--by", opt.colon_by, "monomial like X1^2*X3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("paths")) return run_paths(opt);
    if (app.got_subcommand("gens")) return run_gens(opt);
    if (app.got_subcommand("decompose")) return run_decompose(opt);
    if (app.got_subcommand("covers")) return run_covers(opt);
    if (app.got_subcommand("unmixed")) return run_unmixed(opt);
    if (app.got_subcommand("dim")) return run_dim(opt);
    if (app.got_subcommand("cm")) return run_cm(opt);
    if (app.got_subcommand("polarize")) return run_polarize(opt);
    if (app.got_subcommand("colon")) return run_colon(opt);
  } catch (const wpi::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
