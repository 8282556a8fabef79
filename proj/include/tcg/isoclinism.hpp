#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcg/finite_group.hpp"
#include "tcg/isomorphism.hpp"

namespace tcg {

struct CommutatorMap {
  /// element -> coset index in G/Z(G)
  std::vector<int> projection;
  /// coset index -> canonical representative
  std::vector<int> representatives;
  /// alpha[x][y] = [rep(x), rep(y)], an element of G' (flattened q*q table)
  std::vector<int> alpha;
  int cosets = 0;

  int at(int x, int y) const { return alpha[x * cosets + y]; }
};

/// The commutator map alpha_G on coset pairs of G/Z(G). Well-definedness is
/// re-verified with a second randomly drawn representative per coset.
CommutatorMap commutator_map(const FiniteGroup& g, std::uint64_t seed = 12345);

struct IsoclinismWitness {
  /// coset index of G/Z(G) -> coset index of H/Z(H)
  std::vector<int> phi;
  /// members of G' (sorted) and their images in H', aligned by position
  std::vector<int> derived_g;
  std::vector<int> derived_h_images;
  std::vector<int> projection_g;
  std::vector<int> projection_h;
};

/// Checks conditions (i) phi is an isomorphism of central quotients,
/// (ii) psi an isomorphism of derived subgroups, (iii) psi . alpha_G =
/// alpha_H . (phi x phi), exhaustively over all coset pairs.
bool verify_isoclinism(const FiniteGroup& g, const FiniteGroup& h, const IsoclinismWitness& w);

/// Exhaustive backtracking over isomorphisms of the central quotients with
/// incremental condition-(iii) pruning; psi is induced, never searched.
/// Sound and complete for quotient orders within the bound.
std::optional<IsoclinismWitness> search_isoclinism(const FiniteGroup& g, const FiniteGroup& h,
                                                   int quotient_bound = 64);

/// For an isoclinic pair: checks that T(G) and T(H) are isomorphic, and that
/// the witness-induced vertex map itself is a graph isomorphism.
bool isoclinism_invariance_check(const FiniteGroup& g, const FiniteGroup& h,
                                 const IsoclinismWitness& w);

}  // namespace tcg
