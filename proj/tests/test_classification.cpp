#include <doctest.h>

#include "tcg/classification.hpp"
#include "tcg/constructions.hpp"
#include "tcg/isomorphism.hpp"

using namespace tcg;

TEST_CASE("closed-form parameters") {
  CHECK(theorem_a_parameters(2) == SrgParams{15, 6, 1, 3});
  CHECK(theorem_a_parameters(3) == SrgParams{63, 30, 13, 15});
  CHECK(theorem_a_parameters(4) == SrgParams{255, 126, 61, 63});
  CHECK_THROWS_AS(theorem_a_parameters(1), Error);
  for (int n = 2; n <= 6; ++n) CHECK(check_parameter_identity(theorem_a_parameters(n)));
}

TEST_CASE("conjugate type {1,p} detection") {
  CHECK(is_type_1p(extraspecial(2, 2, ExtraspecialType::Plus)) == 2);
  CHECK(is_type_1p(heisenberg_mod_p(3)) == 3);
  CHECK_FALSE(is_type_1p(dihedral(16)).has_value());
  CHECK_FALSE(is_type_1p(cyclic(8)).has_value());
}

TEST_CASE("connected SRG equivalence") {
  for (auto type : {ExtraspecialType::Plus, ExtraspecialType::Minus}) {
    Verdict v = check_theorem_a(extraspecial(2, 2, type));
    CHECK(v.ok());
    CHECK(v.graph_side);
    CHECK(v.algebra_side);
    REQUIRE(v.params.has_value());
    CHECK(*v.params == SrgParams{15, 6, 1, 3});
  }

  Verdict d = check_theorem_a(dihedral(16));
  CHECK(d.ok());
  CHECK_FALSE(d.graph_side);
  CHECK_FALSE(d.algebra_side);

  // the A x P form: abelian factor does not disturb either side
  Verdict ap = check_theorem_a(
      direct_product(cyclic(3), extraspecial(2, 2, ExtraspecialType::Plus)));
  CHECK(ap.ok());
  CHECK(ap.graph_side);
  CHECK(ap.algebra_side);
  REQUIRE(ap.params.has_value());
  CHECK(*ap.params == SrgParams{15, 6, 1, 3});
}

TEST_CASE("union-of-cliques characterization") {
  Verdict m = check_mkn_characterization(heisenberg_mod_p(3));
  CHECK(m.ok());
  CHECK(m.graph_side);
  CHECK(m.algebra_side);

  Verdict d8 = check_mkn_characterization(dihedral(8));
  CHECK(d8.ok());
  CHECK(d8.graph_side);

  Verdict e = check_mkn_characterization(extraspecial(2, 2, ExtraspecialType::Plus));
  CHECK(e.ok());
  CHECK_FALSE(e.graph_side);
  CHECK_FALSE(e.algebra_side);

  Verdict j = check_mkn_characterization(group_J());
  CHECK(j.ok());
  CHECK_FALSE(j.graph_side);
}

TEST_CASE("disconnected SRG corollary") {
  Verdict m = check_disconnected_srg(heisenberg_mod_p(3));
  CHECK(m.ok());
  CHECK(m.graph_side);
  CHECK(m.algebra_side);

  // T(D8) = 3K1 is edgeless, outside the SRG window; r = 2 < 3
  Verdict d8 = check_disconnected_srg(dihedral(8));
  CHECK(d8.ok());
  CHECK_FALSE(d8.graph_side);
  CHECK_FALSE(d8.algebra_side);

  Verdict j = check_disconnected_srg(group_J());
  CHECK(j.ok());
  CHECK_FALSE(j.graph_side);
  CHECK_FALSE(j.algebra_side);
}

TEST_CASE("gamma graph SRG criterion") {
  Verdict m = check_gamma_srg(heisenberg_mod_p(3));
  CHECK(m.ok());
  CHECK(m.graph_side);
  REQUIRE(m.params.has_value());
  CHECK(*m.params == SrgParams{24, 5, 4, 0});

  Verdict d8 = check_gamma_srg(dihedral(8));
  CHECK(d8.ok());
  CHECK(d8.graph_side);
  REQUIRE(d8.params.has_value());
  CHECK(*d8.params == SrgParams{6, 1, 0, 0});

  Verdict d16 = check_gamma_srg(dihedral(16));
  CHECK(d16.ok());
  CHECK_FALSE(d16.graph_side);
  CHECK_FALSE(d16.algebra_side);
}

TEST_CASE("order p^3 criterion") {
  Verdict m = check_p_cubed(heisenberg_mod_p(3), 3);
  CHECK(m.ok());
  CHECK(m.graph_side);
  CHECK(m.algebra_side);

  Verdict q = check_p_cubed(quaternion8(), 2);
  CHECK(q.ok());
  CHECK(q.graph_side);

  Verdict d = check_p_cubed(dihedral(8), 2);
  CHECK(d.ok());
  CHECK(d.graph_side);

  Verdict e = check_p_cubed(extraspecial(2, 2, ExtraspecialType::Plus), 2);
  CHECK(e.ok());
  CHECK_FALSE(e.graph_side);
  CHECK_FALSE(e.algebra_side);

  Verdict h5 = check_p_cubed(heisenberg_mod_p(5), 5);
  CHECK(h5.ok());
  CHECK(h5.graph_side);
  CHECK(h5.algebra_side);
}

TEST_CASE("abelian-times-sylow decomposition") {
  // p-groups decompose trivially: P is the whole group
  FiniteGroup g = direct_product(cyclic(3), heisenberg_mod_p(3));
  ItoDecomposition d = ito_decomposition(g);
  CHECK(d.prime == 3);
  CHECK(d.sylow_part.size() == 81);
  CHECK(d.abelian_part.size() == 1);

  FiniteGroup m3 = heisenberg_mod_p(3);
  ItoDecomposition dm = ito_decomposition(m3);
  CHECK(dm.sylow_part.size() == 27);
  CHECK(dm.abelian_part.size() == 1);

  FiniteGroup mixed = direct_product(cyclic(5), heisenberg_mod_p(3));
  ItoDecomposition dx = ito_decomposition(mixed);
  CHECK(dx.prime == 3);
  CHECK(dx.sylow_part.size() == 27);
  CHECK(dx.abelian_part.size() == 5);
  CHECK(is_abelian_subgroup(dx.abelian_part));
  CHECK(intersect(dx.abelian_part, dx.sylow_part).size() == 1);

  FiniteGroup g5 = direct_product(cyclic(5), extraspecial(2, 2, ExtraspecialType::Plus));
  ItoDecomposition d5 = ito_decomposition(g5);
  CHECK(d5.prime == 2);
  CHECK(d5.abelian_part.size() == 5);
  CHECK(d5.sylow_part.size() == 32);

  CHECK_THROWS_AS(ito_decomposition(dihedral(16)), Error);
}
