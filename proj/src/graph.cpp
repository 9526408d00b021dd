#include "diskhitter/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace dh {

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::Ths: return "ths";
    case Problem::Fvs: return "fvs";
    case Problem::Oct: return "oct";
  }
  return "?";
}

std::string_view to_string(Mode m) { return m == Mode::Geometric ? "geometric" : "robust"; }

Problem parse_problem(std::string_view s) {
  if (s == "ths") return Problem::Ths;
  if (s == "fvs") return Problem::Fvs;
  if (s == "oct") return Problem::Oct;
  throw InvalidArgument("unknown problem '" + std::string(s) + "'");
}

HittingGraph::HittingGraph(int n)
    : alive_(static_cast<std::size_t>(n), 1),
      alive_count_(n),
      adj_(static_cast<std::size_t>(n)),
      matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
      members_(static_cast<std::size_t>(n)) {}

HittingGraph HittingGraph::from_edges(int n, std::span<const Edge> edges) {
  HittingGraph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

std::vector<Vertex> HittingGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(alive_count_));
  for (Vertex v = 0; v < capacity(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::size_t HittingGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& a : adj_) m += a.size();
  return m / 2;
}

std::vector<Edge> HittingGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < capacity(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int HittingGraph::multiplicity(Vertex v) const {
  return members_[v].empty() ? 1 : static_cast<int>(members_[v].size());
}

std::vector<Vertex> HittingGraph::members(Vertex v) const {
  if (members_[v].empty()) return {v};
  return members_[v];
}

void HittingGraph::set_members(Vertex v, std::vector<Vertex> members) {
  if (members.empty()) throw InvalidArgument("a vertex must represent at least one member");
  if (members.size() == 1 && members[0] == v) members.clear();
  members_[v] = std::move(members);
}

std::vector<Edge> HittingGraph::constraint_edges() const {
  std::vector<Edge> out = marked_;
  out.insert(out.end(), must_hit_.begin(), must_hit_.end());
  return out;
}

bool HittingGraph::constrained(Vertex v) const {
  auto touches = [v](const Edge& e) { return e.touches(v); };
  return std::any_of(marked_.begin(), marked_.end(), touches) ||
         std::any_of(must_hit_.begin(), must_hit_.end(), touches);
}

void HittingGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("self-loop");
  if (u < 0 || v < 0 || u >= capacity() || v >= capacity())
    throw InvalidArgument("edge endpoint out of range");
  if (!alive(u) || !alive(v)) throw InvalidArgument("edge endpoint is not alive");
  if (adjacent(u, v)) return;
  matrix_[index(u, v)] = matrix_[index(v, u)] = 1;
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

void HittingGraph::remove_vertex(Vertex v) {
  if (!alive(v)) return;
  for (Vertex u : adj_[v]) {
    auto& a = adj_[u];
    a.erase(std::lower_bound(a.begin(), a.end(), v));
    matrix_[index(u, v)] = matrix_[index(v, u)] = 0;
  }
  adj_[v].clear();
  alive_[v] = 0;
  --alive_count_;
  auto touches = [v](const Edge& e) { return e.touches(v); };
  std::erase_if(marked_, touches);
  std::erase_if(must_hit_, touches);
}

void HittingGraph::remove_vertices(std::span<const Vertex> vs) {
  for (Vertex v : vs) remove_vertex(v);
}

void HittingGraph::add_marked(Edge e) {
  if (!adjacent(e.u, e.v)) throw InvalidArgument("marked pair is not an edge");
  for (const Edge& m : marked_)
    if (m.touches(e.u) || m.touches(e.v)) throw InvalidArgument("marked edges must be disjoint");
  marked_.insert(std::upper_bound(marked_.begin(), marked_.end(), e), e);
}

void HittingGraph::add_must_hit(Edge e) {
  if (e.u < 0 || e.v >= capacity() || !adjacent(e.u, e.v))
    throw InvalidArgument("must-hit pair is not an edge");
  auto it = std::lower_bound(must_hit_.begin(), must_hit_.end(), e);
  if (it == must_hit_.end() || *it != e) must_hit_.insert(it, e);
}

HittingGraph HittingGraph::without(std::span<const Vertex> vs) const {
  HittingGraph g = *this;
  g.remove_vertices(vs);
  return g;
}

std::string HittingGraph::check_invariants() const {
  std::ostringstream err;
  for (Vertex u = 0; u < capacity(); ++u) {
    if (!alive(u) && !adj_[u].empty()) err << "dead vertex " << u << " has neighbors; ";
    for (Vertex v : adj_[u]) {
      if (v == u) err << "self-loop at " << u << "; ";
      if (!alive(v)) err << "edge to dead vertex " << v << "; ";
      if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u)) err << "asymmetric " << u << "-" << v << "; ";
    }
  }
  std::vector<int> used(alive_.size(), 0);
  for (const Edge& e : marked_) {
    if (!adjacent(e.u, e.v)) err << "marked non-edge " << e.u << "-" << e.v << "; ";
    if (used[e.u]++ || used[e.v]++) err << "marked edges share an endpoint at " << e.u << "-" << e.v << "; ";
  }
  for (const Edge& e : must_hit_)
    if (!adjacent(e.u, e.v)) err << "must-hit non-edge " << e.u << "-" << e.v << "; ";
  return err.str();
}

std::optional<Triangle> find_triangle(const HittingGraph& g) {
  for (Vertex u = 0; u < g.capacity(); ++u) {
    if (!g.alive(u)) continue;
    const auto& nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] < u) continue;
      for (std::size_t j = i + 1; j < nu.size(); ++j)
        if (g.adjacent(nu[i], nu[j])) return Triangle{u, nu[i], nu[j]};
    }
  }
  return std::nullopt;
}

std::vector<Triangle> all_triangles(const HittingGraph& g) {
  std::vector<Triangle> out;
  for (Vertex u = 0; u < g.capacity(); ++u) {
    if (!g.alive(u)) continue;
    const auto& nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] < u) continue;
      for (std::size_t j = i + 1; j < nu.size(); ++j)
        if (g.adjacent(nu[i], nu[j])) out.push_back({u, nu[i], nu[j]});
    }
  }
  return out;
}

bool in_some_triangle(const HittingGraph& g, Vertex v) {
  const auto& nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i)
    for (std::size_t j = i + 1; j < nv.size(); ++j)
      if (g.adjacent(nv[i], nv[j])) return true;
  return false;
}

std::vector<Vertex> greedy_ths_3approx(const HittingGraph& g) {
  HittingGraph h = g;
  std::vector<Vertex> out;
  while (auto t = find_triangle(h)) {
    for (Vertex v : *t) {
      out.push_back(v);
      h.remove_vertex(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::vector<char> removal_mask(const HittingGraph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.capacity()), 0);
  for (Vertex v : removed)
    if (v >= 0 && v < g.capacity()) gone[v] = 1;
  return gone;
}

// Residual degree in the working copy used by fvs_2approx.
struct WorkGraph {
  std::vector<std::vector<Vertex>> adj;
  std::vector<char> present;

  int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
  void remove(Vertex v) {
    for (Vertex u : adj[v]) std::erase(adj[u], v);
    adj[v].clear();
    present[v] = 0;
  }
  bool empty() const { return std::none_of(present.begin(), present.end(), [](char c) { return c; }); }
};

// Cycle whose vertices all have degree two except at most one.
std::vector<Vertex> semidisjoint_cycle(const WorkGraph& w) {
  const int n = static_cast<int>(w.adj.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (!w.present[s] || w.degree(s) != 2 || seen[s]) continue;
    // Collect the maximal run of degree-2 vertices through s.
    std::deque<Vertex> run{s};
    seen[s] = 1;
    std::array<Vertex, 2> ends{-1, -1};
    bool closed = false;
    for (int side = 0; side < 2; ++side) {
      Vertex prev = s;
      Vertex cur = w.adj[s][side];
      while (true) {
        if (cur == s) {
          closed = true;
          break;
        }
        if (w.degree(cur) != 2 || seen[cur]) {
          ends[side] = cur;
          break;
        }
        seen[cur] = 1;
        if (side == 0) run.push_back(cur);
        else run.push_front(cur);
        Vertex next = w.adj[cur][0] == prev ? w.adj[cur][1] : w.adj[cur][0];
        prev = cur;
        cur = next;
      }
      if (closed) break;
    }
    if (closed) return {run.begin(), run.end()};
    if (ends[0] >= 0 && ends[0] == ends[1] && w.degree(ends[0]) != 2) {
      std::vector<Vertex> cyc(run.begin(), run.end());
      cyc.push_back(ends[0]);
      return cyc;
    }
  }
  return {};
}

}  // namespace

std::vector<Vertex> fvs_2approx(const HittingGraph& g) {
  const int n = g.capacity();
  WorkGraph w;
  w.adj.resize(static_cast<std::size_t>(n));
  w.present.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v : g.vertices()) {
    w.present[v] = 1;
    w.adj[v] = g.neighbors(v);
  }
  std::vector<double> weight(static_cast<std::size_t>(n), 1.0);
  std::vector<Vertex> stack;
  constexpr double eps = 1e-12;

  while (true) {
    bool pruned = true;
    while (pruned) {
      pruned = false;
      for (Vertex v = 0; v < n; ++v)
        if (w.present[v] && w.degree(v) <= 1) {
          w.remove(v);
          pruned = true;
        }
    }
    if (w.empty()) break;

    const auto cyc = semidisjoint_cycle(w);
    if (!cyc.empty()) {
      double gamma = weight[cyc[0]];
      for (Vertex v : cyc) gamma = std::min(gamma, weight[v]);
      for (Vertex v : cyc) weight[v] -= gamma;
    } else {
      double gamma = -1.0;
      for (Vertex v = 0; v < n; ++v) {
        if (!w.present[v]) continue;
        const double ratio = weight[v] / (w.degree(v) - 1);
        if (gamma < 0.0 || ratio < gamma) gamma = ratio;
      }
      for (Vertex v = 0; v < n; ++v)
        if (w.present[v]) weight[v] -= gamma * (w.degree(v) - 1);
    }
    for (Vertex v = 0; v < n; ++v)
      if (w.present[v] && weight[v] <= eps) {
        stack.push_back(v);
        w.remove(v);
      }
  }

  std::vector<Vertex> solution = stack;
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    std::vector<Vertex> trial;
    for (Vertex v : solution)
      if (v != *it) trial.push_back(v);
    if (is_forest(g, trial)) solution = std::move(trial);
  }
  std::sort(solution.begin(), solution.end());
  return solution;
}

std::vector<Edge> maximal_matching(const HittingGraph& g, std::span<const Vertex> vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.capacity()), 0);
  for (Vertex v : vertices) in[v] = 1;
  std::vector<char> used(static_cast<std::size_t>(g.capacity()), 0);
  std::vector<Vertex> order(vertices.begin(), vertices.end());
  std::sort(order.begin(), order.end());
  std::vector<Edge> out;
  for (Vertex u : order) {
    if (used[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v <= u || !in[v] || used[v]) continue;
      used[u] = used[v] = 1;
      out.emplace_back(u, v);
      break;
    }
  }
  return out;
}

int BipartiteMatching::size() const {
  return static_cast<int>(std::count_if(match_left.begin(), match_left.end(), [](int r) { return r >= 0; }));
}

BipartiteMatching hopcroft_karp(const Bipartite& b) {
  BipartiteMatching m;
  m.match_left.assign(static_cast<std::size_t>(b.left), -1);
  m.match_right.assign(static_cast<std::size_t>(b.right), -1);
  std::vector<int> dist(static_cast<std::size_t>(b.left));
  constexpr int inf = 1 << 29;

  auto bfs = [&] {
    std::deque<int> q;
    bool found = false;
    for (int l = 0; l < b.left; ++l) {
      if (m.match_left[l] < 0) {
        dist[l] = 0;
        q.push_back(l);
      } else {
        dist[l] = inf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop_front();
      for (int r : b.adj[l]) {
        int next = m.match_right[r];
        if (next < 0) {
          found = true;
        } else if (dist[next] == inf) {
          dist[next] = dist[l] + 1;
          q.push_back(next);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, int l) -> bool {
    for (int r : b.adj[l]) {
      int next = m.match_right[r];
      if (next < 0 || (dist[next] == dist[l] + 1 && self(self, next))) {
        m.match_left[l] = r;
        m.match_right[r] = l;
        return true;
      }
    }
    dist[l] = inf;
    return false;
  };

  while (bfs())
    for (int l = 0; l < b.left; ++l)
      if (m.match_left[l] < 0) dfs(dfs, l);
  return m;
}

KonigCover konig_vertex_cover(const Bipartite& b, const BipartiteMatching& m) {
  std::vector<char> seen_left(static_cast<std::size_t>(b.left), 0);
  std::vector<char> seen_right(static_cast<std::size_t>(b.right), 0);
  std::deque<int> q;
  for (int l = 0; l < b.left; ++l)
    if (m.match_left[l] < 0) {
      seen_left[l] = 1;
      q.push_back(l);
    }
  while (!q.empty()) {
    int l = q.front();
    q.pop_front();
    for (int r : b.adj[l]) {
      if (seen_right[r] || m.match_left[l] == r) continue;
      seen_right[r] = 1;
      int next = m.match_right[r];
      if (next >= 0 && !seen_left[next]) {
        seen_left[next] = 1;
        q.push_back(next);
      }
    }
  }
  KonigCover cover;
  for (int l = 0; l < b.left; ++l)
    if (!seen_left[l]) cover.left.push_back(l);
  for (int r = 0; r < b.right; ++r)
    if (seen_right[r]) cover.right.push_back(r);
  return cover;
}

std::vector<std::vector<Vertex>> false_twin_classes(const HittingGraph& g) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_nbhd;
  for (Vertex v : g.vertices()) by_nbhd[g.neighbors(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [nbhd, cls] : by_nbhd) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

HittingGraph clean_for_ths(const HittingGraph& g) {
  HittingGraph h = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < h.capacity(); ++v) {
      if (!h.alive(v) || h.constrained(v)) continue;
      if (h.degree(v) < 2 || !in_some_triangle(h, v)) {
        h.remove_vertex(v);
        changed = true;
      }
    }
  }
  return h;
}

HittingGraph clean_for_fvs_oct(const HittingGraph& g, Problem problem) {
  if (problem == Problem::Ths) throw InvalidArgument("clean_for_fvs_oct expects FVS or OCT");
  HittingGraph h = g;
  auto weighted_degree = [&h](Vertex v) {
    int d = 0;
    for (Vertex u : h.neighbors(v)) d += h.multiplicity(u);
    return d;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    bool pruned = true;
    while (pruned) {
      pruned = false;
      for (Vertex v = 0; v < h.capacity(); ++v)
        if (h.alive(v) && !h.constrained(v) && weighted_degree(v) <= 1) {
          h.remove_vertex(v);
          pruned = changed = true;
        }
    }

    std::map<std::vector<Vertex>, std::vector<Vertex>> by_nbhd;
    for (Vertex v : h.vertices())
      if (!h.constrained(v)) by_nbhd[h.neighbors(v)].push_back(v);
    for (auto& [nbhd, cls] : by_nbhd) {
      const std::size_t keep = problem == Problem::Fvs ? 1 : 2;
      if (cls.size() <= keep) continue;
      std::vector<Vertex> pooled;
      for (Vertex v : cls) {
        auto m = h.members(v);
        pooled.insert(pooled.end(), m.begin(), m.end());
      }
      std::sort(pooled.begin(), pooled.end());
      if (keep == 1) {
        h.set_members(cls[0], pooled);
      } else {
        const auto half = static_cast<std::ptrdiff_t>((pooled.size() + 1) / 2);
        h.set_members(cls[0], {pooled.begin(), pooled.begin() + half});
        h.set_members(cls[1], {pooled.begin() + half, pooled.end()});
      }
      for (std::size_t i = keep; i < cls.size(); ++i) h.remove_vertex(cls[i]);
      changed = true;
    }
  }
  return h;
}

HittingGraph expand_members(const HittingGraph& g) {
  Vertex top = -1;
  for (Vertex v : g.vertices())
    for (Vertex m : g.members(v)) top = std::max(top, m);
  HittingGraph out(top + 1);
  std::vector<char> keep(static_cast<std::size_t>(top + 1), 0);
  for (Vertex v : g.vertices())
    for (Vertex m : g.members(v)) keep[m] = 1;
  for (Vertex v = 0; v <= top; ++v)
    if (!keep[v]) out.remove_vertex(v);
  for (const Edge& e : g.edges())
    for (Vertex a : g.members(e.u))
      for (Vertex b : g.members(e.v)) out.add_edge(a, b);
  for (const Edge& e : g.constraint_edges())
    for (Vertex a : g.members(e.u))
      for (Vertex b : g.members(e.v)) out.add_must_hit(Edge(a, b));
  return out;
}

bool is_triangle_free(const HittingGraph& g, std::span<const Vertex> removed) {
  const auto gone = removal_mask(g, removed);
  for (Vertex u : g.vertices()) {
    if (gone[u]) continue;
    const auto& nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] < u || gone[nu[i]]) continue;
      for (std::size_t j = i + 1; j < nu.size(); ++j)
        if (!gone[nu[j]] && g.adjacent(nu[i], nu[j])) return false;
    }
  }
  return true;
}

bool is_forest(const HittingGraph& g, std::span<const Vertex> removed) {
  const auto gone = removal_mask(g, removed);
  UnionFind uf(static_cast<std::size_t>(g.capacity()));
  for (const Edge& e : g.edges()) {
    if (gone[e.u] || gone[e.v]) continue;
    if (!uf.unite(e.u, e.v)) return false;
  }
  return true;
}

bool is_bipartite(const HittingGraph& g, std::span<const Vertex> removed) {
  const auto gone = removal_mask(g, removed);
  std::vector<int> color(static_cast<std::size_t>(g.capacity()), -1);
  for (Vertex s : g.vertices()) {
    if (gone[s] || color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (gone[v]) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace dh
