#pragma once

#include <optional>
#include <string>

#include "tcg/graph.hpp"
#include "tcg/rational.hpp"

namespace tcg {

struct SrgParams {
  long long v = 0, k = 0, lambda = 0, mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
  std::string str() const;
};

/// (v,k,lambda,mu) when the graph is strongly regular in the strict sense
/// 0 < k < v-1 (complete and edgeless graphs are excluded), else nullopt.
std::optional<SrgParams> srg_params(const Graph& g);

/// mu(v-k-1) = k(k-lambda-1)
bool check_parameter_identity(const SrgParams& p);

struct SrgSpectrum {
  long long gamma = 0;              // (mu-lambda)^2 + 4(k-mu)
  bool sqrt_gamma_integral = false;
  bool half_case = false;           // 2k + (v-1)(lambda-mu) = 0: m1 = m2 = (v-1)/2
  bool multiplicities_defined = false;
  std::optional<Rational> r, s;     // eigenvalues ((lambda-mu) ± sqrt(gamma)) / 2
  Rational m1, m2;                  // multiplicities of r and s
  bool m1_integral = false, m2_integral = false;
  bool feasible = false;            // both multiplicities non-negative integers
};

/// Exact integer/rational spectral data. The identity must hold first.
SrgSpectrum srg_spectrum(const SrgParams& p);

struct ConnectivityClass {
  bool connected = false;
  /// when disconnected: the mK_{k+1} decomposition
  int m = 0;
  int component_size = 0;
};

/// BFS connectivity cross-checked against the equivalent conditions for a
/// strongly regular graph: disconnected iff mu = 0 iff lambda = k-1 iff the
/// graph is mK_{k+1}. Any disagreement raises LemmaViolation.
ConnectivityClass classify_connectivity(const Graph& g, const SrgParams& p);

}  // namespace tcg
