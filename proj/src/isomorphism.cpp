#include "tcg/isomorphism.hpp"

#include <algorithm>

namespace tcg {

bool is_homomorphism(const Homomorphism& h) {
  const FiniteGroup& g = *h.source;
  const FiniteGroup& t = *h.target;
  if (static_cast<int>(h.map.size()) != g.order()) return false;
  for (int v : h.map)
    if (v < 0 || v >= t.order()) return false;
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      if (h.map[g.mul(i, j)] != t.mul(h.map[i], h.map[j])) return false;
  return true;
}

bool is_isomorphism(const Homomorphism& h) {
  if (h.source->order() != h.target->order()) return false;
  if (!is_homomorphism(h)) return false;
  std::vector<char> hit(h.target->order(), 0);
  for (int v : h.map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

// Closes the partial map under products, checking consistency and
// injectivity on every newly reachable pair.
bool PartialMono::push(const FiniteGroup& source, const FiniteGroup& target, int g, int h) {
  size_t first_new = defined.size();
  auto define = [&](int a, int b) {
    if (map[a] != -1) return map[a] == b;
    if (used[b] != -1) return false;
    map[a] = b;
    used[b] = a;
    defined.push_back(a);
    return true;
  };
  if (!define(g, h)) return false;
  for (size_t qi = first_new; qi < defined.size(); ++qi) {
    int a = defined[qi];
    int A = map[a];
    for (size_t bi = 0; bi < defined.size(); ++bi) {
      int b = defined[bi];
      int B = map[b];
      if (!define(source.mul(a, b), target.mul(A, B))) return false;
      if (!define(source.mul(b, a), target.mul(B, A))) return false;
    }
  }
  return true;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  Subset sub = subgroup_closure(g, std::span<const int>{});
  while (sub.size() < g.order()) {
    int best = -1;
    int best_size = -1;
    for (int x = 0; x < g.order(); ++x) {
      if (sub.contains(x)) continue;
      std::vector<int> trial = sub.members;
      trial.push_back(x);
      int sz = subgroup_closure(g, trial).size();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
      if (sz == g.order()) break;
    }
    gens.push_back(best);
    std::vector<int> seed = sub.members;
    seed.push_back(best);
    sub = subgroup_closure(g, seed);
  }
  return gens;
}

namespace {

struct ElementInvariants {
  std::vector<int> order;
  std::vector<int> class_size;
};

ElementInvariants element_invariants(const FiniteGroup& g) {
  ElementInvariants inv;
  inv.order.resize(g.order());
  for (int x = 0; x < g.order(); ++x) inv.order[x] = g.element_order(x);
  inv.class_size.resize(g.order());
  for (const Subset& c : conjugacy_classes(g))
    for (int x : c.members) inv.class_size[x] = c.size();
  return inv;
}

struct Searcher {
  const FiniteGroup& G;
  const FiniteGroup& H;
  const PartialHook& on_extend;
  const CompleteHook& on_complete;
  std::vector<int> gens;
  ElementInvariants invG, invH;
  bool stopped = false;

  bool invariants_match() const {
    auto profile = [](const ElementInvariants& i) {
      std::vector<std::pair<int, int>> p;
      for (size_t k = 0; k < i.order.size(); ++k) p.emplace_back(i.order[k], i.class_size[k]);
      std::sort(p.begin(), p.end());
      return p;
    };
    return profile(invG) == profile(invH);
  }

  void search(PartialMono& st, size_t level) {
    if (stopped) return;
    if (level == gens.size()) {
      if (on_complete(st.map)) stopped = true;
      return;
    }
    int g = gens[level];
    for (int h = 0; h < H.order(); ++h) {
      if (st.used[h] != -1) continue;
      if (invG.order[g] != invH.order[h] || invG.class_size[g] != invH.class_size[h]) continue;
      PartialMono next = st;
      if (!next.push(G, H, g, h)) continue;
      if (on_extend && !on_extend(next.map, next.defined)) continue;
      search(next, level + 1);
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const PartialHook& on_extend,
                          const CompleteHook& on_complete) {
  if (g.order() != h.order()) return;
  Searcher s{g, h, on_extend, on_complete, greedy_generators(g), element_invariants(g),
             element_invariants(h)};
  if (!s.invariants_match()) return;
  PartialMono st(g.order(), h.order());
  if (!st.push(g, h, 0, 0)) return;
  s.search(st, 0);
}

std::optional<Homomorphism> group_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                             int max_order) {
  if (g.order() > max_order || h.order() > max_order)
    fail(ErrorCode::OrderTooLarge, "isomorphism search bound " + std::to_string(max_order) +
                                       " exceeded");
  std::optional<Homomorphism> found;
  for_each_isomorphism(g, h, nullptr, [&](const std::vector<int>& map) {
    found = Homomorphism{&g, &h, map};
    return true;
  });
  return found;
}

}  // namespace tcg
