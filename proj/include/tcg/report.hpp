#pragma once

#include <string>

#include <json.hpp>

#include "tcg/classification.hpp"
#include "tcg/finite_group.hpp"

namespace tcg {

using Json = nlohmann::ordered_json;

Json srg_params_json(const SrgParams& p);
Json spectrum_json(const SrgSpectrum& s);
Json verdict_json(const Verdict& v);
Json witness_json(const IsoclinismWitness& w);

/// The full per-group analysis: structure, T(G) and Gamma(G) summaries, and
/// every classification verdict applicable within the given bounds.
Json analyze_group(const FiniteGroup& g, int quotient_bound = 64);

struct VerifySummary {
  int groups_checked = 0;
  int violations = 0;
  Json detail;
};

/// Runs the chosen verdict suite ("theorem-a" or "all") over the catalog.
VerifySummary run_verify(const std::string& suite, int max_order, int quotient_bound = 64);

}  // namespace tcg
