#include "tcg/commuting.hpp"

#include <algorithm>
#include <random>

namespace tcg {

CommutingGraph commuting_graph(const FiniteGroup& g, const Subset& x) {
  CommutingGraph cg;
  cg.group = &g;
  cg.vertex_elements = x.members;
  int n = static_cast<int>(cg.vertex_elements.size());
  cg.graph = Graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.commutes(cg.vertex_elements[i], cg.vertex_elements[j])) cg.graph.add_edge(i, j);
  cg.graph.labels.resize(n);
  for (int i = 0; i < n; ++i) cg.graph.labels[i] = "g" + std::to_string(cg.vertex_elements[i]);
  return cg;
}

CommutingGraph gamma_graph(const FiniteGroup& g) {
  Subset z = center(g);
  if (z.size() == g.order()) fail(ErrorCode::AbelianGroup, g.name() + " is abelian");
  Subset x{&g, {}};
  for (int e = 0; e < g.order(); ++e)
    if (!z.contains(e)) x.members.push_back(e);
  CommutingGraph cg = commuting_graph(g, x);
  cg.kind = CommutingKind::Gamma;
  return cg;
}

CommutingGraph transversal_graph_on(const FiniteGroup& g, const Subset& transversal) {
  Subset z = center(g);
  if (z.size() == g.order()) fail(ErrorCode::AbelianGroup, g.name() + " is abelian");
  Subset x{&g, {}};
  for (int e : transversal.members)
    if (!z.contains(e)) x.members.push_back(e);
  CommutingGraph cg = commuting_graph(g, x);
  cg.kind = CommutingKind::Transversal;
  return cg;
}

CommutingGraph transversal_graph(const FiniteGroup& g) {
  return transversal_graph_on(g, canonical_transversal(g, center(g)));
}

Subset random_transversal(const FiniteGroup& g, const Subset& z, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Subset t{&g, {}};
  for (const auto& coset : left_cosets(g, z)) {
    if (std::binary_search(coset.begin(), coset.end(), 0)) {
      t.members.push_back(0);
    } else {
      std::uniform_int_distribution<size_t> pick(0, coset.size() - 1);
      t.members.push_back(coset[pick(rng)]);
    }
  }
  std::sort(t.members.begin(), t.members.end());
  return t;
}

Graph expand_transversal_graph(const CommutingGraph& t, int z) {
  int tn = t.graph.vertex_count();
  Graph out(tn * z);
  for (int x = 0; x < tn; ++x) {
    for (int a = 0; a < z; ++a)
      for (int b = a + 1; b < z; ++b) out.add_edge(x * z + a, x * z + b);
    for (int y = x + 1; y < tn; ++y) {
      if (!t.graph.adjacent(x, y)) continue;
      for (int a = 0; a < z; ++a)
        for (int b = 0; b < z; ++b) out.add_edge(x * z + a, y * z + b);
    }
  }
  return out;
}

namespace {

int index_over(const Subset& sub, const Subset& z) {
  return sub.size() / z.size();
}

}  // namespace

FormulaReport degree_formula_check(const FiniteGroup& g) {
  CommutingGraph t = transversal_graph(g);
  Subset z = center(g);
  FormulaReport report;
  for (int v = 0; v < t.graph.vertex_count(); ++v) {
    int x = t.vertex_elements[v];
    int expected = index_over(centralizer(g, x), z) - 2;
    int got = t.graph.degree(v);
    if (got != expected) {
      report.ok = false;
      report.failures.push_back("vertex g" + std::to_string(x) + ": degree " +
                                std::to_string(got) + " != " + std::to_string(expected));
    }
  }
  return report;
}

FormulaReport common_neighbors_formula_check(const FiniteGroup& g) {
  CommutingGraph t = transversal_graph(g);
  Subset z = center(g);
  int n = t.graph.vertex_count();
  std::vector<Subset> cents;
  cents.reserve(n);
  for (int v = 0; v < n; ++v) cents.push_back(centralizer(g, t.vertex_elements[v]));
  FormulaReport report;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int common = 0;
      for (int u = 0; u < n; ++u) common += t.graph.adjacent(i, u) && t.graph.adjacent(j, u);
      int index = index_over(intersect(cents[i], cents[j]), z);
      int expected = t.graph.adjacent(i, j) ? index - 3 : index - 1;
      if (common != expected) {
        report.ok = false;
        report.failures.push_back("pair (g" + std::to_string(t.vertex_elements[i]) + ",g" +
                                  std::to_string(t.vertex_elements[j]) + "): " +
                                  std::to_string(common) + " != " + std::to_string(expected));
      }
    }
  return report;
}

}  // namespace tcg
