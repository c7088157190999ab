#include "vg/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "vg/field.hpp"

namespace vg {

size_t Graph::num_edges() const {
  size_t m = 0;
  for (const auto& a : adj_) m += a.size();
  return m / 2;
}

void Graph::add_edge(size_t u, size_t v) {
  if (u == v) throw UsageError("self-loop");
  if (u >= adj_.size() || v >= adj_.size()) throw UsageError("vertex out of range");
  if (has_edge(u, v)) return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  std::sort(adj_[u].begin(), adj_[u].end());
  std::sort(adj_[v].begin(), adj_[v].end());
}

bool Graph::has_edge(size_t u, size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<size_t> Graph::degree_profile() const {
  std::vector<size_t> d;
  d.reserve(adj_.size());
  for (const auto& a : adj_) d.push_back(a.size());
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<size_t> Graph::bfs_distances(size_t src) const {
  std::vector<size_t> dist(adj_.size(), SIZE_MAX);
  std::deque<size_t> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    size_t v = q.front();
    q.pop_front();
    for (size_t w : adj_[v])
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

std::vector<std::vector<size_t>> Graph::all_distances() const {
  std::vector<std::vector<size_t>> d;
  d.reserve(adj_.size());
  for (size_t v = 0; v < adj_.size(); ++v) d.push_back(bfs_distances(v));
  return d;
}

bool Graph::connected() const {
  if (adj_.empty()) return true;
  auto d = bfs_distances(0);
  return std::find(d.begin(), d.end(), SIZE_MAX) == d.end();
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
  std::vector<std::pair<size_t, size_t>> e;
  for (size_t u = 0; u < adj_.size(); ++u)
    for (size_t v : adj_[u])
      if (u < v) e.emplace_back(u, v);
  std::sort(e.begin(), e.end());
  return e;
}

std::string Graph::to_dot(const std::vector<std::string>* labels) const {
  std::ostringstream os;
  os << "graph G {\n";
  for (size_t v = 0; v < adj_.size(); ++v) {
    os << "  v" << v;
    if (labels && v < labels->size()) os << " [label=\"" << (*labels)[v] << "\"]";
    os << ";\n";
  }
  for (const auto& [u, v] : edges()) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

// Stable color refinement: start from degrees, refine by multisets of
// neighbor colors until stable. Colors are consistent across both graphs
// so they can be used to prune the isomorphism search.
std::vector<size_t> refine_colors(const Graph& g, const Graph& h,
                                  std::vector<size_t>* h_colors) {
  size_t n = g.num_vertices(), m = h.num_vertices();
  std::vector<size_t> cg(n), ch(m);
  for (size_t v = 0; v < n; ++v) cg[v] = g.degree(v);
  for (size_t v = 0; v < m; ++v) ch[v] = h.degree(v);
  for (;;) {
    std::map<std::pair<size_t, std::vector<size_t>>, size_t> palette;
    auto signature = [](const std::vector<size_t>& colors, const Graph& gr,
                        size_t v, size_t own) {
      std::vector<size_t> nb;
      for (size_t w : gr.neighbors(v)) nb.push_back(colors[w]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(own, nb);
    };
    std::vector<std::pair<size_t, std::vector<size_t>>> sg(n), sh(m);
    for (size_t v = 0; v < n; ++v) sg[v] = signature(cg, g, v, cg[v]);
    for (size_t v = 0; v < m; ++v) sh[v] = signature(ch, h, v, ch[v]);
    for (const auto& s : sg) palette.emplace(s, 0);
    for (const auto& s : sh) palette.emplace(s, 0);
    size_t next = 0;
    for (auto& [k, id] : palette) id = next++;
    std::vector<size_t> ng(n), nh(m);
    for (size_t v = 0; v < n; ++v) ng[v] = palette[sg[v]];
    for (size_t v = 0; v < m; ++v) nh[v] = palette[sh[v]];
    if (ng == cg && nh == ch) break;
    cg = std::move(ng);
    ch = std::move(nh);
  }
  *h_colors = ch;
  return cg;
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<size_t> cg, ch;
  std::vector<size_t> map_gh;      // g vertex -> h vertex or SIZE_MAX
  std::vector<bool> used;
  uint64_t count = 0;
  bool count_all = false;
  std::vector<std::vector<size_t>>* collect = nullptr;
  bool found = false;
  std::vector<size_t> order;       // g vertices in search order

  IsoSearch(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
    cg = refine_colors(g, h, &ch);
    map_gh.assign(g.num_vertices(), SIZE_MAX);
    used.assign(h.num_vertices(), false);
    order.resize(g.num_vertices());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    // visit rare colors first
    std::map<size_t, size_t> freq;
    for (size_t c : cg) ++freq[c];
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return freq[cg[a]] < freq[cg[b]];
    });
  }

  bool feasible(size_t gv, size_t hv) const {
    if (cg[gv] != ch[hv]) return false;
    for (size_t w : g.neighbors(gv)) {
      if (map_gh[w] == SIZE_MAX) continue;
      if (!h.has_edge(hv, map_gh[w])) return false;
    }
    return true;
  }

  bool dfs(size_t depth) {
    if (depth == order.size()) {
      ++count;
      found = true;
      if (collect) collect->push_back(map_gh);
      return !count_all;
    }
    size_t gv = order[depth];
    for (size_t hv = 0; hv < h.num_vertices(); ++hv) {
      if (used[hv] || !feasible(gv, hv)) continue;
      // degree within mapped set must match both ways
      size_t gm = 0;
      for (size_t w : g.neighbors(gv))
        if (map_gh[w] != SIZE_MAX) ++gm;
      size_t hm = 0;
      for (size_t w : h.neighbors(hv))
        if (used[w]) ++hm;
      if (gm != hm) continue;
      map_gh[gv] = hv;
      used[hv] = true;
      if (dfs(depth + 1)) return true;
      map_gh[gv] = SIZE_MAX;
      used[hv] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<size_t>> graph_isomorphic(const Graph& g1,
                                                    const Graph& g2) {
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges())
    return std::nullopt;
  if (g1.degree_profile() != g2.degree_profile()) return std::nullopt;
  IsoSearch s(g1, g2);
  {
    // color class sizes must agree
    std::map<size_t, long> balance;
    for (size_t c : s.cg) ++balance[c];
    for (size_t c : s.ch) --balance[c];
    for (auto& [c, b] : balance)
      if (b != 0) return std::nullopt;
  }
  std::vector<std::vector<size_t>> maps;
  s.collect = &maps;
  s.dfs(0);
  if (!s.found) return std::nullopt;
  return maps.front();
}

uint64_t graph_automorphism_order(const Graph& g) {
  IsoSearch s(g, g);
  s.count_all = true;
  s.dfs(0);
  return s.count;
}

std::vector<std::vector<size_t>> graph_automorphisms(const Graph& g) {
  IsoSearch s(g, g);
  s.count_all = true;
  std::vector<std::vector<size_t>> maps;
  s.collect = &maps;
  s.dfs(0);
  std::sort(maps.begin(), maps.end());
  return maps;
}

std::optional<PartialCubeEmbedding> partial_cube_check(const Graph& g) {
  if (!g.connected() || g.num_vertices() == 0) return std::nullopt;
  auto dist = g.all_distances();
  auto edges = g.edges();
  const size_t m = edges.size();

  // Djokovic-Winkler: e=(a,b), f=(c,d) related iff
  // d(a,c)+d(b,d) != d(a,d)+d(b,c). Take the transitive closure and verify
  // the induced binary coordinates isometrically.
  std::vector<size_t> cls(m, SIZE_MAX);
  size_t nclasses = 0;
  for (size_t i = 0; i < m; ++i) {
    if (cls[i] != SIZE_MAX) continue;
    size_t id = nclasses++;
    std::deque<size_t> q{i};
    cls[i] = id;
    while (!q.empty()) {
      size_t e = q.front();
      q.pop_front();
      auto [a, b] = edges[e];
      for (size_t f = 0; f < m; ++f) {
        if (cls[f] != SIZE_MAX) continue;
        auto [c, d] = edges[f];
        if (dist[a][c] + dist[b][d] != dist[a][d] + dist[b][c]) {
          cls[f] = id;
          q.push_back(f);
        }
      }
    }
  }

  // Each class must split the graph into exactly two components ("semicubes").
  PartialCubeEmbedding emb;
  emb.num_classes = nclasses;
  emb.edge_class = cls;
  emb.coords.assign(g.num_vertices(), std::vector<uint8_t>(nclasses, 0));
  for (size_t k = 0; k < nclasses; ++k) {
    std::vector<int8_t> side(g.num_vertices(), -1);
    std::deque<size_t> q{0};
    side[0] = 0;
    while (!q.empty()) {
      size_t v = q.front();
      q.pop_front();
      for (size_t w : g.neighbors(v)) {
        size_t e = 0;
        // find edge id (edges are sorted pairs)
        auto key = std::make_pair(std::min(v, w), std::max(v, w));
        e = static_cast<size_t>(
            std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
        if (cls[e] == k) continue;
        if (side[w] == -1) {
          side[w] = side[v];
          q.push_back(w);
        }
      }
    }
    // remaining vertices form the other side
    bool any_other = false;
    for (size_t v = 0; v < g.num_vertices(); ++v)
      if (side[v] == -1) {
        side[v] = 1;
        any_other = true;
      }
    if (!any_other) return std::nullopt;  // removing the class did not cut
    // other side must be connected through non-class edges
    size_t first1 = SIZE_MAX;
    for (size_t v = 0; v < g.num_vertices(); ++v)
      if (side[v] == 1) {
        first1 = v;
        break;
      }
    std::vector<bool> seen(g.num_vertices(), false);
    std::deque<size_t> q2{first1};
    seen[first1] = true;
    while (!q2.empty()) {
      size_t v = q2.front();
      q2.pop_front();
      for (size_t w : g.neighbors(v)) {
        auto key = std::make_pair(std::min(v, w), std::max(v, w));
        size_t e = static_cast<size_t>(
            std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
        if (cls[e] == k || seen[w]) continue;
        seen[w] = true;
        q2.push_back(w);
      }
    }
    for (size_t v = 0; v < g.num_vertices(); ++v)
      if (side[v] == 1 && !seen[v]) return std::nullopt;
    // class edges must all cross the cut
    for (size_t e = 0; e < m; ++e)
      if (cls[e] == k && side[edges[e].first] == side[edges[e].second])
        return std::nullopt;
    for (size_t v = 0; v < g.num_vertices(); ++v)
      emb.coords[v][k] = static_cast<uint8_t>(side[v]);
  }

  // Isometry: graph distance equals Hamming distance.
  for (size_t u = 0; u < g.num_vertices(); ++u)
    for (size_t v = u + 1; v < g.num_vertices(); ++v) {
      size_t ham = 0;
      for (size_t k = 0; k < nclasses; ++k)
        if (emb.coords[u][k] != emb.coords[v][k]) ++ham;
      if (ham != dist[u][v]) return std::nullopt;
    }
  return emb;
}

TopeGraphCheck tope_graph_necessary_check(const Graph& g, size_t n,
                                          size_t rank) {
  TopeGraphCheck r;
  if (g.num_vertices() % 2 != 0) r.failures.push_back("odd vertex count");
  if (!g.connected()) {
    r.failures.push_back("not connected");
    r.pass = false;
    return r;
  }
  for (size_t v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) < rank) {
      r.failures.push_back("vertex of degree < rank (degree " +
                           std::to_string(g.degree(v)) + ")");
      break;
    }
  auto emb = partial_cube_check(g);
  if (!emb) {
    r.failures.push_back("not a partial cube");
  } else {
    r.theta_classes = emb->num_classes;
    if (emb->num_classes != n)
      r.failures.push_back("theta classes " + std::to_string(emb->num_classes) +
                           " != n = " + std::to_string(n));
    // antipodality: every vertex has exactly one vertex at distance n
    for (size_t v = 0; v < g.num_vertices(); ++v) {
      auto d = g.bfs_distances(v);
      size_t cnt = 0;
      for (size_t w = 0; w < g.num_vertices(); ++w)
        if (d[w] == emb->num_classes) ++cnt;
      if (cnt != 1) {
        r.failures.push_back("not antipodal");
        break;
      }
    }
  }
  r.pass = r.failures.empty();
  return r;
}

}  // namespace vg
