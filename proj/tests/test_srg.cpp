#include <doctest.h>

#include "tcg/commuting.hpp"
#include "tcg/constructions.hpp"
#include "tcg/srg.hpp"

using namespace tcg;

namespace {

Graph pentagon() {
  Graph g(5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  return g;
}

// Petersen graph: vertices 0..4 outer cycle, 5..9 inner pentagram.
Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

}  // namespace

TEST_CASE("srg parameter detection") {
  auto p = srg_params(transversal_graph(extraspecial(2, 2, ExtraspecialType::Plus)).graph);
  REQUIRE(p.has_value());
  CHECK(*p == SrgParams{15, 6, 1, 3});

  auto q = srg_params(Graph::union_of_cliques(4, 6));
  REQUIRE(q.has_value());
  CHECK(*q == SrgParams{24, 5, 4, 0});

  CHECK_FALSE(srg_params(Graph::complete(5)).has_value());
  CHECK_FALSE(srg_params(Graph::edgeless(5)).has_value());

  auto pet = srg_params(petersen());
  REQUIRE(pet.has_value());
  CHECK(*pet == SrgParams{10, 3, 0, 1});

  // regular but not strongly regular: C6
  Graph c6(6);
  for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  CHECK_FALSE(srg_params(c6).has_value());
}

TEST_CASE("parameter identity") {
  CHECK(check_parameter_identity({15, 6, 1, 3}));
  CHECK(check_parameter_identity({24, 5, 4, 0}));
  CHECK_FALSE(check_parameter_identity({10, 3, 0, 2}));
  CHECK(check_parameter_identity({10, 3, 0, 1}));
}

TEST_CASE("spectrum of (15,6,1,3)") {
  SrgSpectrum s = srg_spectrum({15, 6, 1, 3});
  CHECK(s.gamma == 16);
  CHECK(s.sqrt_gamma_integral);
  CHECK_FALSE(s.half_case);
  REQUIRE(s.multiplicities_defined);
  CHECK(*s.r == Rational(1));
  CHECK(*s.s == Rational(-3));
  CHECK(s.m1 == Rational(9));
  CHECK(s.m2 == Rational(5));
  CHECK(s.feasible);
  // trace oracle: k + m1*r + m2*s = 0
  CHECK(Rational(6) + s.m1 * *s.r + s.m2 * *s.s == Rational(0));
}

TEST_CASE("spectrum of the disconnected case (24,5,4,0)") {
  SrgSpectrum s = srg_spectrum({24, 5, 4, 0});
  CHECK(s.gamma == 36);
  REQUIRE(s.multiplicities_defined);
  CHECK(*s.r == Rational(5));
  CHECK(*s.s == Rational(-1));
  CHECK(s.m1 == Rational(3));
  CHECK(s.m2 == Rational(20));
  CHECK(s.feasible);
}

TEST_CASE("infeasible family (2^(2s+1)-1, 2^(s+1)-2, 2^s-3, 1)") {
  for (int e = 2; e <= 10; ++e) {
    long long v = (1LL << (2 * e + 1)) - 1;
    long long k = (1LL << (e + 1)) - 2;
    long long lambda = (1LL << e) - 3;
    SrgParams p{v, k, lambda, 1};
    CHECK(check_parameter_identity(p));
    SrgSpectrum s = srg_spectrum(p);
    CHECK_FALSE(s.feasible);
  }
}

TEST_CASE("pentagon hits the half case") {
  SrgSpectrum s = srg_spectrum({5, 2, 0, 1});
  CHECK(s.gamma == 5);
  CHECK_FALSE(s.sqrt_gamma_integral);
  CHECK(s.half_case);
  REQUIRE(s.multiplicities_defined);
  CHECK(s.m1 == Rational(2));
  CHECK(s.m2 == Rational(2));
  CHECK(s.feasible);
}

TEST_CASE("connectivity classification") {
  Graph g4k6 = Graph::union_of_cliques(4, 6);
  ConnectivityClass c = classify_connectivity(g4k6, *srg_params(g4k6));
  CHECK_FALSE(c.connected);
  CHECK(c.m == 4);
  CHECK(c.component_size == 6);

  Graph t32 = transversal_graph(extraspecial(2, 2, ExtraspecialType::Plus)).graph;
  ConnectivityClass ct = classify_connectivity(t32, *srg_params(t32));
  CHECK(ct.connected);

  Graph g3k2 = Graph::union_of_cliques(3, 2);
  ConnectivityClass c3 = classify_connectivity(g3k2, *srg_params(g3k2));
  CHECK_FALSE(c3.connected);
  CHECK(c3.m == 3);
  CHECK(c3.component_size == 2);

  // mismatched params must raise the lemma violation
  CHECK_THROWS_AS(classify_connectivity(g3k2, SrgParams{6, 1, 0, 1}), Error);
}

TEST_CASE("exact square root") {
  CHECK(exact_isqrt(0) == 0);
  CHECK(exact_isqrt(16) == 4);
  CHECK(exact_isqrt(15) == -1);
  CHECK(exact_isqrt(1LL << 40) == 1LL << 20);
  CHECK(exact_isqrt((1LL << 40) + 1) == -1);
  CHECK(exact_isqrt(-4) == -1);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(9, 3) == Rational(3));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(7, 2).is_integer() == false);
  CHECK((Rational(3, 4) * Rational(8, 3)) == Rational(2));
  CHECK(Rational(-2, 4).str() == "-1/2");
}
