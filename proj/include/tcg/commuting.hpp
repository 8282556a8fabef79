#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcg/finite_group.hpp"
#include "tcg/graph.hpp"

namespace tcg {

enum class CommutingKind { General, Gamma, Transversal };

struct CommutingGraph {
  Graph graph;
  const FiniteGroup* group = nullptr;
  /// vertex index -> group element index
  std::vector<int> vertex_elements;
  CommutingKind kind = CommutingKind::General;
};

/// C(G, X): vertices are the elements of X in ascending index order, edges
/// join distinct commuting elements.
CommutingGraph commuting_graph(const FiniteGroup& g, const Subset& x);

/// Gamma(G) = C(G, G \ Z(G)). Rejects abelian groups.
CommutingGraph gamma_graph(const FiniteGroup& g);

/// T(G): commuting graph on the canonical transversal of Z(G) minus the
/// identity representative. Rejects abelian groups.
CommutingGraph transversal_graph(const FiniteGroup& g);

/// T(G) built from an arbitrary transversal (used to property-test that the
/// isomorphism type does not depend on the choice).
CommutingGraph transversal_graph_on(const FiniteGroup& g, const Subset& transversal);

/// A random transversal of Z(G) containing 0, drawn from the given seed.
Subset random_transversal(const FiniteGroup& g, const Subset& z, std::uint64_t seed);

/// Rebuilds Gamma from T by blowing each vertex up into a coset clique of
/// size z and joining blocks whose T-vertices are adjacent.
Graph expand_transversal_graph(const CommutingGraph& t, int z);

struct FormulaReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks deg(x) = [C_G(x):Z(G)] - 2 on every vertex of T(G).
FormulaReport degree_formula_check(const FiniteGroup& g);

/// Checks |N(x) ∩ N(y)| = [C_G(x) ∩ C_G(y) : Z(G)] - 3 (adjacent pairs)
/// or - 1 (non-adjacent pairs) on every vertex pair of T(G).
FormulaReport common_neighbors_formula_check(const FiniteGroup& g);

}  // namespace tcg
