#include "tcg/srg.hpp"

namespace tcg {

std::string SrgParams::str() const {
  return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
         std::to_string(mu) + ")";
}

std::optional<SrgParams> srg_params(const Graph& g) {
  int n = g.vertex_count();
  auto k = is_regular(g);
  if (!k || *k <= 0 || *k >= n - 1) return std::nullopt;
  long long lambda = -1, mu = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long common = 0;
      for (int u = 0; u < n; ++u) common += g.adjacent(i, u) && g.adjacent(j, u);
      long long& slot = g.adjacent(i, j) ? lambda : mu;
      if (slot == -1)
        slot = common;
      else if (slot != common)
        return std::nullopt;
    }
  // k >= 1 on >= 3 vertices guarantees an adjacent pair; k <= v-2 a non-adjacent one
  return SrgParams{n, *k, lambda, mu};
}

bool check_parameter_identity(const SrgParams& p) {
  return p.mu * (p.v - p.k - 1) == p.k * (p.k - p.lambda - 1);
}

SrgSpectrum srg_spectrum(const SrgParams& p) {
  SrgSpectrum sp;
  sp.gamma = (p.mu - p.lambda) * (p.mu - p.lambda) + 4 * (p.k - p.mu);
  long long root = exact_isqrt(sp.gamma);
  sp.sqrt_gamma_integral = root >= 0;
  if (sp.sqrt_gamma_integral) {
    sp.r = Rational(p.lambda - p.mu + root, 2);
    sp.s = Rational(p.lambda - p.mu - root, 2);
  }

  long long numerator = 2 * p.k + (p.v - 1) * (p.lambda - p.mu);
  // gamma = 0 collapses the two eigenvalues; treated as the half case too
  sp.half_case = numerator == 0 || sp.gamma == 0;
  if (sp.half_case) {
    sp.m1 = sp.m2 = Rational(p.v - 1, 2);
    sp.multiplicities_defined = true;
  } else if (sp.sqrt_gamma_integral && root > 0) {
    sp.m1 = (Rational(p.v - 1) - Rational(numerator) / Rational(root)) / Rational(2);
    sp.m2 = (Rational(p.v - 1) + Rational(numerator) / Rational(root)) / Rational(2);
    sp.multiplicities_defined = true;
  }
  // numerator != 0 with irrational sqrt(gamma) leaves no rational solution
  if (sp.multiplicities_defined) {
    sp.m1_integral = sp.m1.is_integer();
    sp.m2_integral = sp.m2.is_integer();
    sp.feasible = sp.m1_integral && sp.m2_integral && !(sp.m1 < Rational(0)) &&
                  !(sp.m2 < Rational(0));
  }
  return sp;
}

ConnectivityClass classify_connectivity(const Graph& g, const SrgParams& p) {
  Components comp = components(g);
  bool connected = comp.summary.size() <= 1;
  bool mu_zero = p.mu == 0;
  bool lambda_top = p.lambda == p.k - 1;
  auto duf = disjoint_union_form(g);
  bool is_mkk1 = duf && duf->first > 1 && duf->second == p.k + 1;

  if (connected) {
    if (mu_zero || lambda_top || is_mkk1)
      fail(ErrorCode::LemmaViolation, "connected SRG " + p.str() + " trips a disconnected condition");
    return ConnectivityClass{true, 0, 0};
  }
  if (!mu_zero || !lambda_top || !is_mkk1)
    fail(ErrorCode::LemmaViolation,
         "disconnected SRG " + p.str() + " fails mu=0 / lambda=k-1 / mK_{k+1}");
  return ConnectivityClass{false, duf->first, duf->second};
}

}  // namespace tcg
