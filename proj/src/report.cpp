#include "tcg/report.hpp"

#include "tcg/catalog.hpp"

namespace tcg {

Json srg_params_json(const SrgParams& p) {
  Json j;
  j["v"] = p.v;
  j["k"] = p.k;
  j["lambda"] = p.lambda;
  j["mu"] = p.mu;
  return j;
}

Json spectrum_json(const SrgSpectrum& s) {
  Json j;
  j["gamma"] = s.gamma;
  j["sqrt_gamma_integral"] = s.sqrt_gamma_integral;
  j["half_case"] = s.half_case;
  if (s.r) j["r"] = s.r->str();
  if (s.s) j["s"] = s.s->str();
  if (s.multiplicities_defined) {
    j["m1"] = s.m1.str();
    j["m2"] = s.m2.str();
  }
  j["feasible"] = s.feasible;
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["group"] = v.group;
  j["check"] = v.check;
  j["graph_side"] = v.graph_side;
  j["algebra_side"] = v.algebra_side;
  if (v.params) j["params"] = srg_params_json(*v.params);
  if (!v.violation.empty()) j["violation"] = v.violation;
  return j;
}

Json witness_json(const IsoclinismWitness& w) {
  Json j;
  j["phi"] = w.phi;
  j["derived_g"] = w.derived_g;
  j["derived_h_images"] = w.derived_h_images;
  return j;
}

namespace {

Json graph_summary(const CommutingGraph& cg) {
  Json j;
  const Graph& g = cg.graph;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  auto reg = is_regular(g);
  j["regular_degree"] = reg ? Json(*reg) : Json(nullptr);
  Components comps = components(g);
  Json comp = Json::array();
  for (const auto& c : comps.summary) {
    Json e;
    e["size"] = c.size;
    e["complete"] = c.is_complete;
    e["edgeless"] = c.is_edgeless;
    comp.push_back(e);
  }
  j["components"] = comp;
  auto duf = disjoint_union_form(g);
  if (duf) j["union_of_cliques"] = Json{{"m", duf->first}, {"n", duf->second}};
  auto params = srg_params(g);
  if (params) {
    j["srg"] = srg_params_json(*params);
    j["spectrum"] = spectrum_json(srg_spectrum(*params));
  } else {
    j["srg"] = nullptr;
  }
  return j;
}

}  // namespace

Json analyze_group(const FiniteGroup& g, int quotient_bound) {
  Json j;
  j["group"] = Json{{"name", g.name()}, {"order", g.order()}};
  Subset z = center(g);
  j["group"]["center_size"] = z.size();
  j["group"]["conjugate_type"] = conjugate_type(g);
  j["group"]["derived_size"] = derived_subgroup(g).size();
  bool abelian = z.size() == g.order();
  j["group"]["abelian"] = abelian;
  if (abelian) {
    j["t_graph"] = nullptr;
    j["gamma_graph"] = nullptr;
    j["verdicts"] = Json::array();
    return j;
  }
  j["t_graph"] = graph_summary(transversal_graph(g));
  j["gamma_graph"] = graph_summary(gamma_graph(g));

  Json verdicts = Json::array();
  verdicts.push_back(verdict_json(check_theorem_a(g)));
  verdicts.push_back(verdict_json(check_mkn_characterization(g)));
  verdicts.push_back(verdict_json(check_disconnected_srg(g)));
  verdicts.push_back(verdict_json(check_gamma_srg(g)));
  if (auto p = is_type_1p(g)) {
    if (g.order() / z.size() <= quotient_bound)
      verdicts.push_back(verdict_json(check_p_cubed(g, *p, quotient_bound)));
  }
  j["verdicts"] = verdicts;
  return j;
}

VerifySummary run_verify(const std::string& suite, int max_order, int quotient_bound) {
  VerifySummary summary;
  summary.detail = Json::array();
  for (const CatalogEntry& entry : build_catalog(max_order)) {
    const FiniteGroup& g = entry.group;
    ++summary.groups_checked;
    std::vector<Verdict> verdicts;
    verdicts.push_back(check_theorem_a(g));
    if (suite == "all") {
      verdicts.push_back(check_mkn_characterization(g));
      verdicts.push_back(check_disconnected_srg(g));
      verdicts.push_back(check_gamma_srg(g));
      Subset z = center(g);
      if (auto p = is_type_1p(g)) {
        if (g.order() / z.size() <= quotient_bound)
          verdicts.push_back(check_p_cubed(g, *p, quotient_bound));
      }
      // every SRG encountered must satisfy the parameter identity and have
      // a sound exact spectrum
      CommutingGraph t = transversal_graph(g);
      if (auto params = srg_params(t.graph)) {
        if (!check_parameter_identity(*params)) {
          Verdict v;
          v.group = g.name();
          v.check = "parameter-identity";
          v.violation = "mu(v-k-1) != k(k-lambda-1) for " + params->str();
          verdicts.push_back(v);
        }
        classify_connectivity(t.graph, *params);  // throws LemmaViolation on bugs
      }
    }
    Json entry_json;
    entry_json["spec"] = entry.spec;
    entry_json["order"] = g.order();
    Json vjson = Json::array();
    for (const Verdict& v : verdicts) {
      if (!v.ok()) ++summary.violations;
      vjson.push_back(verdict_json(v));
    }
    entry_json["verdicts"] = vjson;
    summary.detail.push_back(entry_json);
  }
  return summary;
}

}  // namespace tcg
