#include "diskhitter/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dh {

namespace {

Triangle sorted_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Vertex pairs covered by some core triangle.
std::set<Edge> core_pairs(const Core& core) {
  std::set<Edge> pairs;
  for (const auto& t : core.triangles) {
    pairs.emplace(t[0], t[1]);
    pairs.emplace(t[0], t[2]);
    pairs.emplace(t[1], t[2]);
  }
  return pairs;
}

}  // namespace

std::vector<Vertex> Core::vertices() const {
  std::vector<Vertex> out;
  for (const auto& t : triangles) out.insert(out.end(), t.begin(), t.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Core compute_core(const HittingGraph& g) {
  std::vector<Vertex> seed = greedy_ths_3approx(g);
  for (const Edge& e : g.constraint_edges()) {
    seed.push_back(e.u);
    seed.push_back(e.v);
  }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<char> in_seed(static_cast<std::size_t>(g.capacity()), 0);
  for (Vertex v : seed) in_seed[v] = 1;

  std::set<Triangle> found;
  // Phase 1: one triangle per seed edge, preferring a third vertex outside
  // the seed; a triangle entirely inside the seed is kept as well so that it
  // is covered too.
  for (Vertex x : seed)
    for (Vertex y : g.neighbors(x)) {
      if (y <= x || !in_seed[y]) continue;
      Vertex inside = -1, outside = -1;
      for (Vertex z : g.neighbors(x)) {
        if (z == y || !g.adjacent(y, z)) continue;
        if (!in_seed[z]) {
          outside = z;
          break;
        }
        if (inside < 0) inside = z;
      }
      if (outside >= 0)
        found.insert(sorted_triangle(x, y, outside));
      else if (inside >= 0)
        found.insert(sorted_triangle(x, y, inside));
    }
  // Phase 2: triangles along a maximal matching of N(v) minus the seed.
  for (Vertex v : seed) {
    std::vector<Vertex> outside;
    for (Vertex w : g.neighbors(v))
      if (!in_seed[w]) outside.push_back(w);
    for (const Edge& e : maximal_matching(g, outside)) found.insert(sorted_triangle(v, e.u, e.v));
  }
  return Core{{found.begin(), found.end()}};
}

bool verify_core(const HittingGraph& g, const Core& core) {
  const auto pairs = core_pairs(core);
  for (const auto& t : all_triangles(g))
    if (!pairs.count(Edge(t[0], t[1])) && !pairs.count(Edge(t[0], t[2])) && !pairs.count(Edge(t[1], t[2])))
      return false;
  return true;
}

IHSets compute_IH(const HittingGraph& g, const Core& core) {
  std::vector<char> in_core(static_cast<std::size_t>(g.capacity()), 0);
  for (Vertex v : core.vertices()) in_core[v] = 1;
  IHSets out;
  std::set<Edge> h;
  for (Vertex x : g.vertices()) {
    if (in_core[x] || g.constrained(x)) continue;
    bool any = false;
    const auto& nx = g.neighbors(x);
    for (std::size_t i = 0; i < nx.size(); ++i)
      for (std::size_t j = i + 1; j < nx.size(); ++j)
        if (g.adjacent(nx[i], nx[j])) {
          any = true;
          h.emplace(nx[i], nx[j]);
        }
    if (any) out.I.push_back(x);
  }
  const auto pairs = core_pairs(core);
  for (const Edge& e : h)
    if (!pairs.count(e))
      throw CorePropertyViolated("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                 " lies in no core triangle");
  out.H.assign(h.begin(), h.end());
  return out;
}

std::optional<Crown> find_crown(const HittingGraph& g, const IHSets& ih) {
  if (ih.I.size() <= ih.H.size()) return std::nullopt;
  Bipartite b(static_cast<int>(ih.I.size()), static_cast<int>(ih.H.size()));
  for (std::size_t l = 0; l < ih.I.size(); ++l)
    for (std::size_t r = 0; r < ih.H.size(); ++r)
      if (g.adjacent(ih.I[l], ih.H[r].u) && g.adjacent(ih.I[l], ih.H[r].v))
        b.connect(static_cast<int>(l), static_cast<int>(r));
  const auto m = hopcroft_karp(b);
  const auto x = konig_vertex_cover(b, m);

  std::vector<char> left_cover(ih.I.size(), 0), right_cover(ih.H.size(), 0);
  for (int l : x.left) left_cover[l] = 1;
  for (int r : x.right) right_cover[r] = 1;
  Crown crown;
  for (std::size_t l = 0; l < ih.I.size(); ++l)
    if (!left_cover[l]) crown.I.push_back(ih.I[l]);
  for (std::size_t r = 0; r < ih.H.size(); ++r)
    if (right_cover[r]) {
      crown.H.push_back(ih.H[r]);
      const int l = m.match_right[r];
      if (l >= 0 && !left_cover[l]) crown.M.emplace_back(ih.I[l], ih.H[r]);
    }
  if (crown.I.empty()) return std::nullopt;
  return crown;
}

std::string crown_violation(const HittingGraph& g, const Crown& crown) {
  if (crown.I.empty()) return "empty I";
  const std::set<Vertex> in_i(crown.I.begin(), crown.I.end());
  for (std::size_t a = 0; a < crown.I.size(); ++a)
    for (std::size_t b = a + 1; b < crown.I.size(); ++b) {
      const Vertex x = crown.I[a], y = crown.I[b];
      if (!g.adjacent(x, y)) continue;
      for (Vertex z : g.neighbors(x))
        if (g.adjacent(y, z)) return "two crown vertices share a triangle";
    }
  for (const Edge& e : crown.H) {
    bool formed = false;
    for (Vertex x : crown.I) formed = formed || (g.adjacent(x, e.u) && g.adjacent(x, e.v));
    if (!formed) return "H edge forms no triangle with I";
  }
  std::set<Edge> matched;
  std::set<Vertex> used;
  for (const auto& [x, e] : crown.M) {
    if (!in_i.count(x)) return "matching leaves I";
    if (!g.adjacent(x, e.u) || !g.adjacent(x, e.v)) return "matched pair forms no triangle";
    if (!used.insert(x).second || !matched.insert(e).second) return "M is not a matching";
  }
  for (const Edge& e : crown.H)
    if (!matched.count(e)) return "H edge unmatched";
  // Separation: every triangle through I uses an H edge.
  const std::set<Edge> hs(crown.H.begin(), crown.H.end());
  for (Vertex x : crown.I) {
    const auto& nx = g.neighbors(x);
    for (std::size_t i = 0; i < nx.size(); ++i)
      for (std::size_t j = i + 1; j < nx.size(); ++j)
        if (g.adjacent(nx[i], nx[j]) && !hs.count(Edge(nx[i], nx[j]))) return "triangle through I avoids H";
  }
  return {};
}

HittingInstance apply_crown(const HittingInstance& inst, const Crown& crown) {
  HittingInstance out = inst;
  out.graph.remove_vertices(crown.I);
  for (const Edge& e : crown.H) out.graph.add_must_hit(e);
  return out;
}

HittingInstance kernelize_ths(const HittingInstance& inst, KernelStats* stats, const CrownObserver& observer) {
  HittingInstance cur = inst;
  const long limit = static_cast<long>(cur.graph.capacity()) * cur.graph.capacity() + 1;
  bool weighted = false;
  for (Vertex v : cur.graph.vertices()) weighted = weighted || cur.graph.multiplicity(v) > 1;
  for (long round = 0; !weighted && round < limit; ++round) {
    if (stats) ++stats->rounds;
    const Core core = compute_core(cur.graph);
    const auto ih = compute_IH(cur.graph, core);
    const auto crown = find_crown(cur.graph, ih);
    if (!crown) break;
    if (observer) observer(cur.graph, *crown);
    if (stats) {
      ++stats->crowns;
      stats->removed_by_crowns += static_cast<int>(crown->I.size());
    }
    cur = apply_crown(cur, *crown);
  }
  std::vector<Vertex> idle;
  for (Vertex v : cur.graph.vertices())
    if (!cur.graph.constrained(v) && !in_some_triangle(cur.graph, v)) idle.push_back(v);
  cur.graph.remove_vertices(idle);
  return cur;
}

}  // namespace dh
