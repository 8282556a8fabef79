#include "tcg/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace tcg {

void Graph::add_edge(int i, int j) {
  if (i == j) return;
  adj_[static_cast<size_t>(i) * n_ + j] = 1;
  adj_[static_cast<size_t>(j) * n_ + i] = 1;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adjacent(v, u);
  return d;
}

long long Graph::edge_count() const {
  long long e = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) e += adjacent(i, j);
  return e;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::union_of_cliques(int m, int n) {
  Graph g(m * n);
  for (int b = 0; b < m; ++b)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.add_edge(b * n + i, b * n + j);
  return g;
}

Components components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> groups;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(groups.size());
    groups.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      groups[id].push_back(v);
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u) && comp[u] == -1) {
          comp[u] = id;
          q.push(u);
        }
    }
  }
  std::vector<std::pair<ComponentInfo, int>> infos;
  for (int id = 0; id < static_cast<int>(groups.size()); ++id) {
    const auto& vs = groups[id];
    int sz = static_cast<int>(vs.size());
    long long edges = 0;
    for (size_t a = 0; a < vs.size(); ++a)
      for (size_t b = a + 1; b < vs.size(); ++b) edges += g.adjacent(vs[a], vs[b]);
    ComponentInfo info{sz, edges == static_cast<long long>(sz) * (sz - 1) / 2, edges == 0};
    infos.emplace_back(info, id);
  }
  std::stable_sort(infos.begin(), infos.end(),
                   [](const auto& a, const auto& b) { return a.first.size > b.first.size; });
  Components out;
  std::vector<int> remap(groups.size());
  for (int rank = 0; rank < static_cast<int>(infos.size()); ++rank) {
    out.summary.push_back(infos[rank].first);
    remap[infos[rank].second] = rank;
  }
  out.labels.resize(n);
  for (int v = 0; v < n; ++v) out.labels[v] = remap[comp[v]];
  return out;
}

bool is_connected(const Graph& g) { return components(g).summary.size() <= 1; }

std::optional<int> is_regular(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int k = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

std::optional<std::pair<int, int>> disjoint_union_form(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  Components c = components(g);
  int size = c.summary.front().size;
  for (const ComponentInfo& info : c.summary)
    if (!info.is_complete || info.size != size) return std::nullopt;
  return std::make_pair(static_cast<int>(c.summary.size()), size);
}

namespace {

constexpr int kIsoVertexBound = 260;

// Iterated neighborhood color refinement (1-WL).
std::vector<int> refine_colors(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  size_t prev_distinct = 0;
  for (int round = 0; round <= n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> canon;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u)) sig.push_back(color[u]);
      std::sort(sig.begin(), sig.end());
      auto key = std::make_pair(color[v], std::move(sig));
      auto [it, inserted] = canon.emplace(std::move(key), static_cast<int>(canon.size()));
      next[v] = it->second;
    }
    color = std::move(next);
    if (canon.size() == prev_distinct) break;  // partition is stable
    prev_distinct = canon.size();
  }
  return color;
}

std::vector<int> color_histogram(const std::vector<int>& colors) {
  std::vector<int> h = colors;
  std::sort(h.begin(), h.end());
  return h;
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& cg;
  const std::vector<int>& ch;
  std::vector<int> map, used, order;

  bool consistent(int v, int w) const {
    for (int u = 0; u < g.vertex_count(); ++u)
      if (map[u] != -1 && g.adjacent(v, u) != h.adjacent(w, map[u])) return false;
    return true;
  }

  bool run(size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w = 0; w < h.vertex_count(); ++w) {
      if (used[w] || ch[w] != cg[v] || !consistent(v, w)) continue;
      map[v] = w;
      used[w] = 1;
      if (run(depth + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) return std::nullopt;
  int n = g.vertex_count();
  if (n > kIsoVertexBound)
    fail(ErrorCode::TooManyVertices,
         "isomorphism bound " + std::to_string(kIsoVertexBound) + " vertices exceeded");
  if (n == 0) return std::vector<int>{};
  if (g.edge_count() != h.edge_count()) return std::nullopt;

  // Component-summary prescreen, and a closed form for unions of cliques.
  Components compg = components(g);
  Components comph = components(h);
  auto key = [](const Components& c) {
    std::vector<std::tuple<int, bool, bool>> k;
    for (const auto& i : c.summary) k.emplace_back(i.size, i.is_complete, i.is_edgeless);
    std::sort(k.begin(), k.end());
    return k;
  };
  if (key(compg) != key(comph)) return std::nullopt;
  bool all_complete = true;
  for (const auto& info : compg.summary) all_complete &= info.is_complete;
  if (all_complete) {
    // match components by equal size; sizes already sorted descending
    std::vector<std::vector<int>> gcomps(compg.summary.size()), hcomps(comph.summary.size());
    for (int v = 0; v < n; ++v) gcomps[compg.labels[v]].push_back(v);
    for (int v = 0; v < n; ++v) hcomps[comph.labels[v]].push_back(v);
    std::vector<int> map(n, -1);
    for (size_t c = 0; c < gcomps.size(); ++c)
      for (size_t i = 0; i < gcomps[c].size(); ++i) map[gcomps[c][i]] = hcomps[c][i];
    return map;
  }

  std::vector<int> cg = refine_colors(g);
  std::vector<int> ch = refine_colors(h);
  if (color_histogram(cg) != color_histogram(ch)) return std::nullopt;

  // Match vertices in an order that keeps the partial map connected where
  // possible: BFS over components, rarest colors first.
  std::vector<int> count_of_color(n + 1, 0);
  for (int c : cg) ++count_of_color[c];
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  auto pick_next = [&]() {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool touches = order.empty();
      for (int u : order)
        if (g.adjacent(v, u)) {
          touches = true;
          break;
        }
      if (!touches) continue;
      if (best == -1 || count_of_color[cg[v]] < count_of_color[cg[best]]) best = v;
    }
    if (best == -1)  // start a new component
      for (int v = 0; v < n && best == -1; ++v)
        if (!placed[v]) best = v;
    return best;
  };
  for (int i = 0; i < n; ++i) {
    int v = pick_next();
    placed[v] = 1;
    order.push_back(v);
  }

  IsoSearch search{g, h, cg, ch, std::vector<int>(n, -1), std::vector<int>(n, 0), order};
  if (search.run(0)) return search.map;
  return std::nullopt;
}

std::string export_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (v < static_cast<int>(g.labels.size()) && !g.labels[v].empty())
      out << " [label=\"" << g.labels[v] << "\"]";
    out << ";\n";
  }
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if (g.adjacent(a, b)) j["edges"].push_back({a, b});
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

}  // namespace tcg
