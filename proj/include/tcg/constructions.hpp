#pragma once

#include <optional>
#include <string>

#include "tcg/finite_group.hpp"
#include "tcg/isomorphism.hpp"

namespace tcg {

FiniteGroup cyclic(int n);
/// Dihedral group of the given (even) order 2m, m >= 3.
FiniteGroup dihedral(int order);
FiniteGroup quaternion8();
/// Heisenberg group mod p: order p^3, presentation <a,b,c | a^p, b^p, c^p,
/// [a,b]=c, c central>. For p = 3 this is M(3).
FiniteGroup heisenberg_mod_p(int p);
/// The order-32 group J = <a,b,c | a^4=b^4=c^4=1, a^2=b^2, ab=ba,
/// cac^-1=a^-1, bcb^-1=c^-1>, realized by normal forms a^i b^j c^k.
FiniteGroup group_J();

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// (G x H)/N with N = {(z, theta(z)^-1) : z in Z(G)} for an isomorphism
/// theta : Z(G) -> Z(H). theta maps parent element indices.
FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h,
                            const std::vector<int>& theta);
/// Central product with theta found automatically (any isomorphism of the
/// centers; deterministic because the search is).
FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h);

enum class ExtraspecialType { Plus, Minus };

/// Extraspecial p-group of order p^(2n+1). For p = 2 the plus type is the
/// iterated central product of n copies of D8 and the minus type swaps one
/// factor for Q8. For odd p only the exponent-p (plus) type is built.
FiniteGroup extraspecial(int p, int n, ExtraspecialType type);

bool is_extraspecial(const FiniteGroup& g);

/// Parses the constructor grammar:
///   cyclic:<n> | dihedral:<order> | quaternion:8 | m3 | heisenberg:<p> |
///   jgroup | extraspecial:p=<p>,n=<n>,type=<+|-> |
///   direct(<spec>,<spec>) | central(<spec>,<spec>) | file:<path>
FiniteGroup build_from_spec(const std::string& spec);

}  // namespace tcg
