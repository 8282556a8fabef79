#include "tcg/classification.hpp"

#include <algorithm>

#include "tcg/constructions.hpp"

namespace tcg {

SrgParams theorem_a_parameters(int n) {
  if (n < 2) fail(ErrorCode::NTooSmall, "closed form needs n >= 2 (lambda would be negative)");
  long long p4 = 1LL << (2 * n);
  return SrgParams{p4 - 1, p4 / 2 - 2, p4 / 4 - 3, p4 / 4 - 1};
}

std::optional<int> is_type_1p(const FiniteGroup& g) {
  std::vector<int> cs = conjugate_type(g);
  if (cs.size() == 2 && cs[0] == 1 && is_prime(cs[1])) return cs[1];
  return std::nullopt;
}

namespace {

bool is_power_of(long long x, int base, int* exponent = nullptr) {
  int e = 0;
  while (x % base == 0) {
    x /= base;
    ++e;
  }
  if (exponent) *exponent = e;
  return x == 1;
}

Verdict make_verdict(const FiniteGroup& g, std::string check) {
  Verdict v;
  v.group = g.name();
  v.check = std::move(check);
  return v;
}

struct CentralizerProfile {
  bool all_abelian = true;
  /// [C_G(x):Z(G)] when constant over non-central x, else -1
  int constant_index = -1;
  bool constant = true;
};

CentralizerProfile centralizer_profile(const FiniteGroup& g, const Subset& z) {
  CentralizerProfile p;
  for (int x = 0; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    Subset c = centralizer(g, x);
    if (!is_abelian_subgroup(c)) p.all_abelian = false;
    int index = c.size() / z.size();
    if (p.constant_index == -1)
      p.constant_index = index;
    else if (p.constant_index != index)
      p.constant = false;
  }
  return p;
}

}  // namespace

Verdict check_theorem_a(const FiniteGroup& g) {
  Verdict v = make_verdict(g, "theorem-a");
  Subset z = center(g);
  if (z.size() == g.order()) fail(ErrorCode::AbelianGroup, g.name() + " is abelian");
  CommutingGraph t = transversal_graph(g);
  auto params = srg_params(t.graph);
  v.graph_side = params.has_value() && is_connected(t.graph);
  if (params) v.params = params;

  std::vector<int> cs = conjugate_type(g);
  int index = g.order() / z.size();
  v.algebra_side = cs == std::vector<int>{1, 2} && index >= 16;

  if (v.graph_side != v.algebra_side) {
    v.violation = "graph and algebra sides disagree";
    return v;
  }
  if (v.graph_side) {
    int two_n = 0;
    if (!is_power_of(index, 2, &two_n) || two_n % 2 != 0) {
      v.violation = "[G:Z] is not an even power of two";
      return v;
    }
    if (*params != theorem_a_parameters(two_n / 2))
      v.violation = "parameters " + params->str() + " differ from the closed form";
  }
  return v;
}

Verdict check_mkn_characterization(const FiniteGroup& g) {
  Verdict v = make_verdict(g, "mkn-characterization");
  Subset z = center(g);
  if (z.size() == g.order()) fail(ErrorCode::AbelianGroup, g.name() + " is abelian");
  CommutingGraph t = transversal_graph(g);
  auto duf = disjoint_union_form(t.graph);
  v.graph_side = duf.has_value();

  CentralizerProfile prof = centralizer_profile(g, z);
  int index = g.order() / z.size();
  v.algebra_side = prof.all_abelian && prof.constant &&
                   (index - 1) % (prof.constant_index - 1) == 0;
  if (v.graph_side != v.algebra_side) {
    v.violation = "graph and algebra sides disagree";
    return v;
  }
  if (v.graph_side) {
    int n = duf->second;
    int m = duf->first;
    if (m * n != index - 1 || prof.constant_index != n + 1)
      v.violation = "mK_n shape does not match centralizer indexes";
  }
  return v;
}

Verdict check_disconnected_srg(const FiniteGroup& g) {
  Verdict v = make_verdict(g, "disconnected-srg");
  Subset z = center(g);
  if (z.size() == g.order()) fail(ErrorCode::AbelianGroup, g.name() + " is abelian");
  CommutingGraph t = transversal_graph(g);
  auto params = srg_params(t.graph);
  v.graph_side = params.has_value() && !is_connected(t.graph);
  if (params) v.params = params;

  CentralizerProfile prof = centralizer_profile(g, z);
  v.algebra_side = prof.all_abelian && prof.constant && prof.constant_index >= 3;
  if (v.graph_side != v.algebra_side) {
    v.violation = "graph and algebra sides disagree";
    return v;
  }
  if (v.graph_side) {
    auto duf = disjoint_union_form(t.graph);
    if (!duf || duf->first < 3) v.violation = "fewer than 3 components";
  }
  return v;
}

Verdict check_gamma_srg(const FiniteGroup& g) {
  Verdict v = make_verdict(g, "gamma-srg");
  Subset z = center(g);
  if (z.size() == g.order()) fail(ErrorCode::AbelianGroup, g.name() + " is abelian");
  CommutingGraph gamma = gamma_graph(g);
  auto params = srg_params(gamma.graph);
  v.graph_side = params.has_value();
  if (params) v.params = params;

  CentralizerProfile prof = centralizer_profile(g, z);
  auto duf = disjoint_union_form(gamma.graph);
  long long noncentral = g.order() - z.size();
  bool structural = false;
  if (prof.constant && duf) {
    long long s = static_cast<long long>(prof.constant_index - 1) * z.size();
    structural = duf->second == s &&
                 static_cast<long long>(duf->first) * duf->second == noncentral;
  }
  v.algebra_side = structural;
  if (v.graph_side != v.algebra_side) {
    v.violation = "SRG detection and mK_s structure disagree";
    return v;
  }
  if (v.graph_side) {
    // each component must be a union of exactly [C:Z]-1 non-trivial cosets
    Components comps = components(gamma.graph);
    int ncomp = static_cast<int>(comps.summary.size());
    std::vector<std::vector<char>> cosets_hit(ncomp, std::vector<char>(g.order(), 0));
    std::vector<int> coset_of(g.order(), -1);
    auto cosets = left_cosets(g, z);
    for (int c = 0; c < static_cast<int>(cosets.size()); ++c)
      for (int e : cosets[c]) coset_of[e] = c;
    std::vector<std::vector<int>> comp_cosets(ncomp);
    for (int vtx = 0; vtx < gamma.graph.vertex_count(); ++vtx) {
      int comp = comps.labels[vtx];
      int coset = coset_of[gamma.vertex_elements[vtx]];
      if (!cosets_hit[comp][coset]) {
        cosets_hit[comp][coset] = 1;
        comp_cosets[comp].push_back(coset);
      }
    }
    int expected = prof.constant_index - 1;
    for (int comp = 0; comp < ncomp; ++comp) {
      if (static_cast<int>(comp_cosets[comp].size()) != expected) {
        v.violation = "component is not a union of exactly n non-trivial cosets";
        return v;
      }
      for (int coset : comp_cosets[comp])
        if (static_cast<int>(cosets[coset].size()) != z.size() ||
            coset_of[0] == coset) {
          v.violation = "component contains the trivial coset";
          return v;
        }
    }
  }
  return v;
}

Verdict check_p_cubed(const FiniteGroup& g, int p, int quotient_bound) {
  Verdict v = make_verdict(g, "p-cubed");
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  Subset z = center(g);
  if (z.size() == g.order()) fail(ErrorCode::AbelianGroup, g.name() + " is abelian");
  CommutingGraph t = transversal_graph(g);
  auto duf = disjoint_union_form(t.graph);
  v.graph_side = duf && duf->first == p + 1 && duf->second == p - 1;

  FiniteGroup target = extraspecial(p, 1, ExtraspecialType::Plus);
  v.algebra_side = search_isoclinism(g, target, quotient_bound).has_value();
  if (v.graph_side != v.algebra_side) v.violation = "graph and isoclinism sides disagree";
  return v;
}

ItoDecomposition ito_decomposition(const FiniteGroup& g) {
  std::vector<int> cs = conjugate_type(g);
  if (cs.size() != 2 || cs[0] != 1)
    fail(ErrorCode::NotConjugateTypeTwo, g.name() + " is not of conjugate type {1,m}");
  int m = cs[1];
  int p = 0;
  for (int d = 2; d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  if (!is_power_of(m, p))
    fail(ErrorCode::NotConjugateTypeTwo, "class size " + std::to_string(m) +
                                             " is not a prime power (contradicts Ito)");

  Subset sylow = sylow_subgroup(g, p);
  // C_G(P): elements commuting with all of P.
  Subset cent{&g, {}};
  for (int x = 0; x < g.order(); ++x) {
    bool commutes_all = true;
    for (int e : sylow.members)
      if (!g.commutes(x, e)) {
        commutes_all = false;
        break;
      }
    if (commutes_all) cent.members.push_back(x);
  }

  int target_order = g.order() / sylow.size();
  auto admissible = [&](const Subset& a) {
    if (a.size() != target_order) return false;
    if (!is_abelian_subgroup(a)) return false;
    return intersect(a, sylow).size() == 1;
  };

  // The p'-elements of C_G(P) are the canonical candidate for A.
  Subset candidate{&g, {}};
  for (int x : cent.members)
    if (g.element_order(x) % p != 0) candidate.members.push_back(x);
  if (is_subgroup(candidate) && admissible(candidate)) {
    ItoDecomposition out{candidate, sylow, p};
    return out;
  }

  // Fallback: bounded search over subgroups generated by up to 3 elements
  // of C_G(P).
  const auto& elems = cent.members;
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i; j < elems.size(); ++j)
      for (size_t k = j; k < elems.size(); ++k) {
        std::vector<int> seed{elems[i], elems[j], elems[k]};
        Subset a = subgroup_closure(g, seed);
        if (admissible(a)) return ItoDecomposition{a, sylow, p};
      }
  fail(ErrorCode::DecompositionNotFound,
       "no abelian complement found (bound too tight or implementation bug)");
}

}  // namespace tcg
