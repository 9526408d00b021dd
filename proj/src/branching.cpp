#include "diskhitter/branching.hpp"

#include <algorithm>

namespace dh {

std::vector<Disk> HittingInstance::alive_disks() const {
  std::vector<Disk> out;
  if (!disks) return out;
  for (Vertex v : graph.vertices()) out.push_back((*disks)[v]);
  return out;
}

void HittingInstance::force(std::span<const Vertex> vs) {
  k -= deletion_cost(graph, vs);
  forced.insert(forced.end(), vs.begin(), vs.end());
  std::sort(forced.begin(), forced.end());
  graph.remove_vertices(vs);
}

int deletion_cost(const HittingGraph& g, std::span<const Vertex> vs) {
  int cost = 0;
  for (Vertex v : vs) cost += g.multiplicity(v);
  return cost;
}

namespace {

std::vector<Vertex> greedy_clique_from(const HittingGraph& g, Vertex start) {
  std::vector<Vertex> clique{start};
  std::vector<Vertex> cand = g.neighbors(start);
  while (!cand.empty()) {
    Vertex best = cand[0];
    int best_links = -1;
    for (Vertex c : cand) {
      int links = 0;
      for (Vertex d : cand) links += (d != c && g.adjacent(c, d)) ? 1 : 0;
      if (links > best_links) {
        best_links = links;
        best = c;
      }
    }
    clique.push_back(best);
    std::vector<Vertex> next;
    for (Vertex c : cand)
      if (c != best && g.adjacent(c, best)) next.push_back(c);
    cand = std::move(next);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

bool cliques_step(const HittingInstance& inst, int p, const InstanceSink& sink) {
  auto clique = find_clique_geq(inst, p);
  if (!clique) return sink(HittingInstance(inst));

  const auto& c = *clique;
  const std::size_t n = c.size();
  struct Choice {
    std::vector<Vertex> deleted;
    int k;
  };
  std::vector<Choice> choices;
  auto add = [&](std::vector<char> keep) {
    Choice ch;
    for (std::size_t i = 0; i < n; ++i)
      if (!keep[i]) ch.deleted.push_back(c[i]);
    ch.k = inst.k - deletion_cost(inst.graph, ch.deleted);
    if (ch.k >= 0) choices.push_back(std::move(ch));
  };
  add(std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> keep(n, 0);
    keep[i] = 1;
    add(keep);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<char> keep(n, 0);
      keep[i] = keep[j] = 1;
      add(keep);
    }
  std::stable_sort(choices.begin(), choices.end(), [](const Choice& a, const Choice& b) { return a.k < b.k; });

  for (const auto& ch : choices) {
    HittingInstance child = inst;
    child.force(ch.deleted);
    if (!cliques_step(child, p, sink)) return false;
  }
  return true;
}

bool matchings_step(const HittingInstance& inst, int p, const InstanceSink& sink) {
  const HittingGraph& g = inst.graph;
  for (Vertex v : g.vertices()) {
    const auto nstar = unmarked_neighbors(g, v);
    if (static_cast<int>(nstar.size()) < 2 * p) continue;
    auto matching = maximal_matching(g, nstar);
    if (static_cast<int>(matching.size()) < p) continue;

    const Vertex del[] = {v};
    if (inst.k - g.multiplicity(v) >= 0) {
      HittingInstance child = inst;
      child.force(del);
      if (!matchings_step(child, p, sink)) return false;
    }
    if (static_cast<int>(g.marked_edges().size() + matching.size()) <= inst.k) {
      HittingInstance child = inst;
      for (const Edge& e : matching) child.graph.add_marked(e);
      if (!matchings_step(child, p, sink)) return false;
    }
    return true;
  }
  return sink(HittingInstance(inst));
}

}  // namespace

std::optional<std::vector<Vertex>> find_clique_geq(const HittingInstance& inst, int p) {
  const HittingGraph& g = inst.graph;
  if (inst.mode == Mode::Geometric && inst.disks) {
    const auto disks = inst.alive_disks();
    if (disks.empty()) return std::nullopt;
    const CandidatePoint* best = nullptr;
    const auto points = candidate_points(disks);
    for (const auto& cp : points)
      if (!best || cp.depth() > best->depth()) best = &cp;
    if (best->depth() >= p) return best->coverers;
    return std::nullopt;
  }
  auto order = g.vertices();
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  for (Vertex s : order) {
    if (g.degree(s) + 1 < p) break;
    auto clique = greedy_clique_from(g, s);
    if (static_cast<int>(clique.size()) >= p) return clique;
  }
  return std::nullopt;
}

std::vector<HittingInstance> branch_cliques(const HittingInstance& inst, int p) {
  std::vector<HittingInstance> out;
  cliques_step(inst, p, [&](HittingInstance&& x) {
    out.push_back(std::move(x));
    return true;
  });
  return out;
}

std::vector<Vertex> unmarked_neighbors(const HittingGraph& g, Vertex v) {
  std::vector<char> marked(static_cast<std::size_t>(g.capacity()), 0);
  for (const Edge& e : g.marked_edges()) marked[e.u] = marked[e.v] = 1;
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v))
    if (!marked[w]) out.push_back(w);
  return out;
}

std::vector<HittingInstance> branch_matchings(const HittingInstance& inst, int p) {
  std::vector<HittingInstance> out;
  matchings_step(inst, p, [&](HittingInstance&& x) {
    out.push_back(std::move(x));
    return true;
  });
  return out;
}

bool run_two_step(const HittingInstance& inst, int p, const InstanceSink& sink) {
  return cliques_step(inst, p, [&](HittingInstance&& leaf) { return matchings_step(leaf, p, sink); });
}

std::vector<HittingInstance> run_two_step(const HittingInstance& inst, int p) {
  std::vector<HittingInstance> out;
  run_two_step(inst, p, [&](HittingInstance&& x) {
    out.push_back(std::move(x));
    return true;
  });
  return out;
}

}  // namespace dh
