#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tcg/cayley_io.hpp"
#include "tcg/constructions.hpp"
#include "tcg/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

tcg::FiniteGroup load_group(const std::string& spec, const std::string& file) {
  if (!file.empty()) return tcg::read_cayley_file(file);
  if (spec.empty()) tcg::fail(tcg::ErrorCode::ParseError, "either --spec or --file is required");
  return tcg::build_from_spec(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commuting-graph analysis toolkit"};
  app.require_subcommand(1);

  std::string spec, file, out_path;
  int quotient_bound = 64;
  int max_order = 512;
  unsigned long long seed = 12345;
  app.add_option("--bound-quotient", quotient_bound, "isoclinism search quotient bound");
  app.add_option("--seed", seed, "seed for randomized representative checks");

  auto* build = app.add_subcommand("build", "write a group as a cayley v1 file");
  build->add_option("--spec", spec, "group constructor expression");
  build->add_option("--out", out_path, "output path")->required();

  auto* analyze = app.add_subcommand("analyze", "full JSON analysis report");
  analyze->add_option("--spec", spec, "group constructor expression");
  analyze->add_option("--file", file, "cayley v1 input file");

  std::string which = "T", format = "dot";
  auto* graph = app.add_subcommand("graph", "export T(G) or Gamma(G)");
  graph->add_option("--spec", spec, "group constructor expression");
  graph->add_option("--file", file, "cayley v1 input file");
  graph->add_option("--which", which, "T or gamma")->check(CLI::IsMember({"T", "gamma"}));
  graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  std::string spec_b;
  auto* isoclinic = app.add_subcommand("isoclinic", "isoclinism search for a pair");
  isoclinic->add_option("specA", spec, "first group spec")->required();
  isoclinic->add_option("specB", spec_b, "second group spec")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run theorem sweeps over the catalog");
  verify->add_option("suite", suite, "theorem-a or all")
      ->check(CLI::IsMember({"theorem-a", "all"}));
  verify->add_option("--max-order", max_order, "catalog order bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) {
      tcg::write_cayley_file(load_group(spec, file), out_path);
      return kExitOk;
    }
    if (analyze->parsed()) {
      tcg::FiniteGroup g = load_group(spec, file);
      std::cout << tcg::analyze_group(g, quotient_bound).dump(2) << "\n";
      return kExitOk;
    }
    if (graph->parsed()) {
      tcg::FiniteGroup g = load_group(spec, file);
      tcg::CommutingGraph cg =
          which == "T" ? tcg::transversal_graph(g) : tcg::gamma_graph(g);
      std::cout << (format == "dot" ? tcg::export_dot(cg.graph) : tcg::export_json(cg.graph) + "\n");
      return kExitOk;
    }
    if (isoclinic->parsed()) {
      tcg::FiniteGroup a = tcg::build_from_spec(spec);
      tcg::FiniteGroup b = tcg::build_from_spec(spec_b);
      auto witness = tcg::search_isoclinism(a, b, quotient_bound);
      tcg::CommutingGraph ta = tcg::transversal_graph(a);
      tcg::CommutingGraph tb = tcg::transversal_graph(b);
      tcg::Json j;
      j["isoclinic"] = witness.has_value();
      if (witness) j["witness"] = tcg::witness_json(*witness);
      j["t_graphs_isomorphic"] = tcg::graphs_isomorphic(ta.graph, tb.graph).has_value();
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      if (max_order > tcg::order_cap())
        tcg::fail(tcg::ErrorCode::OrderTooLarge, "--max-order exceeds the order cap");
      tcg::VerifySummary summary = tcg::run_verify(suite, max_order, quotient_bound);
      tcg::Json j;
      j["suite"] = suite;
      j["max_order"] = max_order;
      j["groups_checked"] = summary.groups_checked;
      j["violations"] = summary.violations;
      j["detail"] = summary.detail;
      std::cout << j.dump(2) << "\n";
      return summary.violations == 0 ? kExitOk : kExitViolation;
    }
  } catch (const tcg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case tcg::ErrorCode::ParseError:
        return kExitUsage;
      case tcg::ErrorCode::LemmaViolation:
        return kExitViolation;
      default:
        return kExitValidation;
    }
  }
  return kExitUsage;
}
