#include "tcg/isoclinism.hpp"

#include <algorithm>
#include <random>

#include "tcg/commuting.hpp"

namespace tcg {

CommutatorMap commutator_map(const FiniteGroup& g, std::uint64_t seed) {
  Subset z = center(g);
  Quotient q = quotient_group(g, z);
  int qn = q.group.order();
  CommutatorMap cm;
  cm.projection = q.projection;
  cm.representatives = q.representatives;
  cm.cosets = qn;
  cm.alpha.resize(static_cast<size_t>(qn) * qn);
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < qn; ++y)
      cm.alpha[x * qn + y] = commutator(g, cm.representatives[x], cm.representatives[y]);

  // Cross-check with randomly drawn representatives.
  auto cosets = left_cosets(g, z);
  std::mt19937_64 rng(seed);
  std::vector<int> alt(qn);
  for (const auto& coset : cosets) {
    std::uniform_int_distribution<size_t> pick(0, coset.size() - 1);
    alt[cm.projection[coset.front()]] = coset[pick(rng)];
  }
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < qn; ++y)
      if (commutator(g, alt[x], alt[y]) != cm.at(x, y))
        fail(ErrorCode::WellDefinednessViolation,
             "commutator map depends on representatives (group-core bug)");
  return cm;
}

namespace {

struct PsiTable {
  // partial map G' -> H' on parent element indices
  std::vector<int> forward;
  std::vector<int> backward;

  PsiTable(int gn, int hn) : forward(gn, -1), backward(hn, -1) {}

  bool assign(int dg, int dh) {
    if (forward[dg] != -1) return forward[dg] == dh;
    if (backward[dh] != -1) return false;
    forward[dg] = dh;
    backward[dh] = dg;
    return true;
  }
};

}  // namespace

std::optional<IsoclinismWitness> search_isoclinism(const FiniteGroup& g, const FiniteGroup& h,
                                                   int quotient_bound) {
  Subset zg = center(g);
  Subset zh = center(h);
  int qg_order = g.order() / zg.size();
  int qh_order = h.order() / zh.size();
  if (qg_order > quotient_bound || qh_order > quotient_bound)
    fail(ErrorCode::QuotientTooLarge, "central quotient exceeds bound " +
                                          std::to_string(quotient_bound));
  // Necessary-condition prescreen: |G/Z|, |G'|, cs(G).
  if (qg_order != qh_order) return std::nullopt;
  Subset dg = derived_subgroup(g);
  Subset dh = derived_subgroup(h);
  if (dg.size() != dh.size()) return std::nullopt;
  if (conjugate_type(g) != conjugate_type(h)) return std::nullopt;

  CommutatorMap ag = commutator_map(g);
  CommutatorMap ah = commutator_map(h);
  Quotient qg = quotient_group(g, zg);
  Quotient qh = quotient_group(h, zh);
  SubgroupGroup gd = subgroup_as_group(g, dg, "G'");
  SubgroupGroup hd = subgroup_as_group(h, dh, "H'");

  // Condition (iii) restricted to coset pairs inside the subgroup on which
  // the partial phi is defined; used both as pruning and as the leaf check.
  auto compatible = [&](const std::vector<int>& phi, const std::vector<int>& defined,
                        PsiTable* out) {
    PsiTable psi(g.order(), h.order());
    for (int x : defined)
      for (int y : defined)
        if (!psi.assign(ag.at(x, y), ah.at(phi[x], phi[y]))) return false;
    if (out) *out = psi;
    return true;
  };

  std::optional<IsoclinismWitness> found;
  for_each_isomorphism(
      qg.group, qh.group,
      [&](const std::vector<int>& phi, const std::vector<int>& defined) {
        return compatible(phi, defined, nullptr);
      },
      [&](const std::vector<int>& phi) {
        std::vector<int> all(qg.group.order());
        for (int i = 0; i < qg.group.order(); ++i) all[i] = i;
        PsiTable psi(g.order(), h.order());
        if (!compatible(phi, all, &psi)) return false;
        // The induced psi is pinned on all commutators; extend it over the
        // subgroup they generate, which is all of G'.
        PartialMono mono(gd.group.order(), hd.group.order());
        if (!mono.push(gd.group, hd.group, 0, 0)) return false;
        for (int e : dg.members) {
          if (psi.forward[e] == -1) continue;
          int target = hd.from_parent[psi.forward[e]];
          if (target < 0) return false;
          if (!mono.push(gd.group, hd.group, gd.from_parent[e], target)) return false;
        }
        if (!mono.total()) return false;  // commutators failed to generate G'
        IsoclinismWitness w;
        w.phi = phi;
        w.derived_g = dg.members;
        w.derived_h_images.resize(dg.size());
        for (int i = 0; i < gd.group.order(); ++i)
          w.derived_h_images[i] = hd.to_parent[mono.map[i]];
        w.projection_g = qg.projection;
        w.projection_h = qh.projection;
        found = std::move(w);
        return true;
      });
  return found;
}

bool verify_isoclinism(const FiniteGroup& g, const FiniteGroup& h, const IsoclinismWitness& w) {
  Subset zg = center(g);
  Subset zh = center(h);
  Quotient qg = quotient_group(g, zg);
  Quotient qh = quotient_group(h, zh);
  if (w.projection_g != qg.projection || w.projection_h != qh.projection)
    fail(ErrorCode::MalformedWitness, "witness projections disagree with canonical quotients");
  if (static_cast<int>(w.phi.size()) != qg.group.order() ||
      qg.group.order() != qh.group.order())
    fail(ErrorCode::MalformedWitness, "phi has the wrong shape");
  Homomorphism phi{&qg.group, &qh.group, w.phi};
  if (!is_isomorphism(phi)) return false;

  Subset dg = derived_subgroup(g);
  Subset dh = derived_subgroup(h);
  if (w.derived_g != dg.members ||
      static_cast<int>(w.derived_h_images.size()) != dh.size())
    fail(ErrorCode::MalformedWitness, "psi has the wrong shape");
  SubgroupGroup gd = subgroup_as_group(g, dg, "G'");
  SubgroupGroup hd = subgroup_as_group(h, dh, "H'");
  std::vector<int> psi_map(gd.group.order());
  for (int i = 0; i < gd.group.order(); ++i) {
    int image = hd.from_parent[w.derived_h_images[i]];
    if (image < 0) fail(ErrorCode::MalformedWitness, "psi image outside H'");
    psi_map[i] = image;
  }
  Homomorphism psi{&gd.group, &hd.group, psi_map};
  if (!is_isomorphism(psi)) return false;

  // Condition (iii) over all coset pairs.
  for (int x = 0; x < qg.group.order(); ++x)
    for (int y = 0; y < qg.group.order(); ++y) {
      int left = commutator(g, qg.representatives[x], qg.representatives[y]);
      int right = commutator(h, qh.representatives[w.phi[x]], qh.representatives[w.phi[y]]);
      if (w.derived_h_images[gd.from_parent[left]] != right) return false;
    }
  return true;
}

bool isoclinism_invariance_check(const FiniteGroup& g, const FiniteGroup& h,
                                 const IsoclinismWitness& w) {
  CommutingGraph tg = transversal_graph(g);
  CommutingGraph th = transversal_graph(h);
  if (!graphs_isomorphic(tg.graph, th.graph)) return false;

  // The witness itself induces a vertex map t_i -> representative of
  // phi(t_i Z); verify it is a graph isomorphism directly.
  Quotient qh = quotient_group(h, center(h));
  std::vector<int> h_vertex_of_element(h.order(), -1);
  for (int v = 0; v < th.graph.vertex_count(); ++v)
    h_vertex_of_element[th.vertex_elements[v]] = v;

  int n = tg.graph.vertex_count();
  if (n != th.graph.vertex_count()) return false;
  std::vector<int> vmap(n, -1);
  std::vector<char> hit(n, 0);
  for (int v = 0; v < n; ++v) {
    int coset = w.projection_g[tg.vertex_elements[v]];
    int image_rep = qh.representatives[w.phi[coset]];
    int target = h_vertex_of_element[image_rep];
    if (target < 0 || hit[target]) return false;
    vmap[v] = target;
    hit[target] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (tg.graph.adjacent(a, b) != th.graph.adjacent(vmap[a], vmap[b])) return false;
  return true;
}

}  // namespace tcg
