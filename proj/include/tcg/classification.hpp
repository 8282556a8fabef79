#pragma once

#include <optional>
#include <string>

#include "tcg/commuting.hpp"
#include "tcg/finite_group.hpp"
#include "tcg/isoclinism.hpp"
#include "tcg/srg.hpp"

namespace tcg {

/// (2^{2n}-1, 2^{2n-1}-2, 2^{2n-2}-3, 2^{2n-2}-1); requires n >= 2.
SrgParams theorem_a_parameters(int n);

/// p when cs(G) = {1, p} with p prime, else nullopt.
std::optional<int> is_type_1p(const FiniteGroup& g);

struct Verdict {
  std::string group;
  std::string check;
  bool graph_side = false;
  bool algebra_side = false;
  std::optional<SrgParams> params;
  std::string violation;  // empty when the equivalence holds

  bool ok() const { return violation.empty(); }
};

/// Graph side: T(G) is a connected SRG. Algebra side: cs(G) = {1,2} and
/// [G:Z(G)] >= 16. The two must agree, and the parameters must match the
/// closed form for [G:Z(G)] = 2^{2n}.
Verdict check_theorem_a(const FiniteGroup& g);

/// T(G) isomorphic to mK_n iff every non-central centralizer is abelian of
/// constant index n+1 over the center, with mn = [G:Z]-1.
Verdict check_mkn_characterization(const FiniteGroup& g);

/// T(G) disconnected SRG iff all non-central centralizers are abelian of
/// constant index r >= 3 over the center. Also asserts m >= 3 components.
Verdict check_disconnected_srg(const FiniteGroup& g);

/// Gamma(G) SRG iff Gamma(G) = mK_s with ms = |G \ Z| and
/// s = ([C_G(x):Z]-1)|Z| for all non-central x; each component must be a
/// union of exactly [C_G(x):Z]-1 non-trivial cosets.
Verdict check_gamma_srg(const FiniteGroup& g);

/// T(G) isomorphic to (p+1)K_{p-1} iff G is isoclinic to the extraspecial
/// p-group of order p^3.
Verdict check_p_cubed(const FiniteGroup& g, int p, int quotient_bound = 64);

struct ItoDecomposition {
  Subset abelian_part;
  Subset sylow_part;
  int prime = 0;
};

/// For conjugate type {1,m}: the decomposition G = A x P with A abelian and
/// P a Sylow p-subgroup of the same conjugate type (m is a p-power).
ItoDecomposition ito_decomposition(const FiniteGroup& g);

}  // namespace tcg
