#include <doctest.h>

#include "tcg/constructions.hpp"
#include "tcg/finite_group.hpp"
#include "tcg/isomorphism.hpp"

using namespace tcg;

TEST_CASE("cyclic groups") {
  CHECK(cyclic(1).order() == 1);
  FiniteGroup c2 = cyclic(2);
  CHECK(c2.order() == 2);
  CHECK(c2.mul(1, 1) == 0);
  CHECK(center(cyclic(6)).size() == 6);
  CHECK(cyclic(12).element_order(1) == 12);
  CHECK_THROWS_AS(cyclic(0), Error);
  CHECK_THROWS_AS(cyclic(1000), Error);
}

TEST_CASE("dihedral groups") {
  CHECK(dihedral(6).order() == 6);
  CHECK(center(dihedral(16)).size() == 2);
  CHECK(conjugate_type(dihedral(8)) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(dihedral(7), Error);
  CHECK_THROWS_AS(dihedral(4), Error);
  // x has order m, y has order 2, yxy = x^-1
  FiniteGroup d12 = dihedral(12);
  int x = 1, y = 6;
  CHECK(d12.element_order(x) == 6);
  CHECK(d12.element_order(y) == 2);
  CHECK(d12.conj(y, x) == d12.inv(x));
}

TEST_CASE("quaternion group") {
  FiniteGroup q8 = quaternion8();
  CHECK(q8.order() == 8);
  CHECK(center(q8).size() == 2);
  CHECK(conjugate_type(q8) == std::vector<int>{1, 2});
  CHECK(derived_subgroup(q8).size() == 2);
  int involutions = 0;
  for (int i = 1; i < 8; ++i) involutions += q8.element_order(i) == 2;
  CHECK(involutions == 1);
}

TEST_CASE("heisenberg groups") {
  FiniteGroup m3 = heisenberg_mod_p(3);
  CHECK(m3.order() == 27);
  CHECK(center(m3).size() == 3);
  CHECK(derived_subgroup(m3).members == center(m3).members);
  CHECK(conjugate_type(heisenberg_mod_p(5)) == std::vector<int>{1, 5});
  for (int i = 1; i < 27; ++i) CHECK(m3.element_order(i) == 3);  // exponent 3
  CHECK_THROWS_AS(heisenberg_mod_p(4), Error);
}

TEST_CASE("the order-32 group J") {
  FiniteGroup j = group_J();
  CHECK(j.order() == 32);
  Subset z = center(j);
  CHECK(z.size() == 4);
  // Z(J) = {1, a^2, c^2, a^2 c^2}: all involutions or identity
  for (int x : z.members) CHECK(j.element_order(x) <= 2);
  Quotient q = quotient_group(j, z);
  CHECK(q.group.order() == 8);
  CHECK(is_abelian(q.group));
}

TEST_CASE("direct products") {
  FiniteGroup g = dihedral(8);
  FiniteGroup t = cyclic(1);
  CHECK(group_isomorphic(direct_product(g, t), g).has_value());
  FiniteGroup c6 = direct_product(cyclic(2), cyclic(3));
  CHECK(c6.order() == 6);
  CHECK(is_abelian(c6));
  FiniteGroup prod = direct_product(cyclic(3), dihedral(8));
  CHECK(center(prod).size() == 3 * center(dihedral(8)).size());
  CHECK_THROWS_AS(direct_product(cyclic(100), cyclic(100)), Error);
}

TEST_CASE("central products") {
  FiniteGroup d8 = dihedral(8);
  FiniteGroup dd = central_product(d8, d8);
  CHECK(dd.order() == 32);
  CHECK(is_extraspecial(dd));
  FiniteGroup dq = central_product(d8, quaternion8());
  CHECK(dq.order() == 32);
  CHECK(is_extraspecial(dq));
  CHECK_FALSE(group_isomorphic(dd, dq).has_value());
  // trivial center on one side degenerates to the direct product
  // (smallest centerless group is S3 = dihedral(6))
  FiniteGroup s3 = dihedral(6);
  Subset zs3 = center(s3);
  CHECK(zs3.size() == 1);
}

TEST_CASE("extraspecial groups") {
  FiniteGroup e1p = extraspecial(2, 1, ExtraspecialType::Plus);
  FiniteGroup e1m = extraspecial(2, 1, ExtraspecialType::Minus);
  CHECK(group_isomorphic(e1p, dihedral(8)).has_value());
  CHECK(group_isomorphic(e1m, quaternion8()).has_value());

  FiniteGroup e2p = extraspecial(2, 2, ExtraspecialType::Plus);
  CHECK(e2p.order() == 32);
  CHECK(conjugate_type(e2p) == std::vector<int>{1, 2});
  CHECK(is_extraspecial(e2p));
  FiniteGroup e2m = extraspecial(2, 2, ExtraspecialType::Minus);
  CHECK(is_extraspecial(e2m));
  CHECK_FALSE(group_isomorphic(e2p, e2m).has_value());

  CHECK(group_isomorphic(extraspecial(3, 1, ExtraspecialType::Plus), heisenberg_mod_p(3))
            .has_value());
  FiniteGroup e3 = extraspecial(2, 3, ExtraspecialType::Plus);
  CHECK(e3.order() == 128);
  CHECK(is_extraspecial(e3));
  CHECK_THROWS_AS(extraspecial(4, 1, ExtraspecialType::Plus), Error);
  CHECK_THROWS_AS(extraspecial(2, 0, ExtraspecialType::Plus), Error);
}

TEST_CASE("extraspecial predicate") {
  CHECK(is_extraspecial(heisenberg_mod_p(3)));
  CHECK(is_extraspecial(quaternion8()));
  CHECK_FALSE(is_extraspecial(cyclic(8)));
  CHECK_FALSE(is_extraspecial(dihedral(16)));
  CHECK_FALSE(is_extraspecial(group_J()));
}

TEST_CASE("spec grammar") {
  CHECK(build_from_spec("cyclic:6").order() == 6);
  CHECK(build_from_spec("dihedral:16").order() == 16);
  CHECK(build_from_spec("quaternion:8").order() == 8);
  CHECK(build_from_spec("m3").order() == 27);
  CHECK(build_from_spec("heisenberg:5").order() == 125);
  CHECK(build_from_spec("jgroup").order() == 32);
  CHECK(build_from_spec("extraspecial:p=2,n=2,type=+").order() == 32);
  CHECK(build_from_spec("extraspecial:p=2,n=2,type=-").order() == 32);
  CHECK(build_from_spec("direct(cyclic:2,cyclic:3)").order() == 6);
  CHECK(build_from_spec("central(dihedral:8,quaternion:8)").order() == 32);
  CHECK(build_from_spec("direct(cyclic:3,central(dihedral:8,dihedral:8))").order() == 96);

  for (const char* bad : {"cyclic:0", "cyclic:x", "quaternion:16", "direct(cyclic:2",
                          "unknown:3", "", "direct(cyclic:2,cyclic:3)x"}) {
    CHECK_THROWS_AS(build_from_spec(bad), Error);
  }
}
