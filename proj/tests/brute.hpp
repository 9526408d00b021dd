#pragma once

// Exhaustive reference solver shared by the unit tests. It enumerates
// deletion sets by increasing size over the explicit (member-expanded)
// graph and checks the residual graph with plain bitmask routines.

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "diskhitter/graph.hpp"

namespace brute {

using Mask = std::uint64_t;

struct Explicit {
  std::vector<dh::Vertex> ids;  // bit i <-> ids[i]
  std::vector<Mask> adj;
  std::vector<Mask> pairs;      // constraint edges
  std::vector<Mask> triangles;
};

inline Explicit make_explicit(const dh::HittingGraph& compact) {
  const dh::HittingGraph g = dh::expand_members(compact);
  Explicit e;
  e.ids = g.vertices();
  std::vector<int> bit(static_cast<std::size_t>(g.capacity()), -1);
  for (std::size_t i = 0; i < e.ids.size(); ++i) bit[e.ids[i]] = static_cast<int>(i);
  const int n = static_cast<int>(e.ids.size());
  e.adj.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.adjacent(e.ids[i], e.ids[j])) e.adj[i] |= Mask{1} << j;
  for (const dh::Edge& c : g.constraint_edges()) e.pairs.push_back(Mask{1} << bit[c.u] | Mask{1} << bit[c.v]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (e.adj[i] >> j & 1)
        for (int l = j + 1; l < n; ++l)
          if ((e.adj[i] >> l & 1) && (e.adj[j] >> l & 1))
            e.triangles.push_back(Mask{1} << i | Mask{1} << j | Mask{1} << l);
  return e;
}

inline bool acyclic(const Explicit& e, Mask keep) {
  const int n = static_cast<int>(e.ids.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < n; ++i) {
    if (!(keep >> i & 1)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!(keep >> j & 1) || !(e.adj[i] >> j & 1)) continue;
      const int a = find(i), b = find(j);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

inline bool two_colourable(const Explicit& e, Mask keep) {
  const int n = static_cast<int>(e.ids.size());
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (!(keep >> s & 1) || colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (!(keep >> y & 1) || !(e.adj[x] >> y & 1)) continue;
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool feasible(const Explicit& e, dh::Problem problem, Mask removed) {
  for (Mask p : e.pairs)
    if (!(p & removed)) return false;
  const int n = static_cast<int>(e.ids.size());
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  switch (problem) {
    case dh::Problem::Ths:
      for (Mask t : e.triangles)
        if (!(t & removed)) return false;
      return true;
    case dh::Problem::Fvs: return acyclic(e, all & ~removed);
    case dh::Problem::Oct: return two_colourable(e, all & ~removed);
  }
  return false;
}

inline bool search(const Explicit& e, dh::Problem problem, int size, int from, Mask& chosen) {
  if (size == 0) return feasible(e, problem, chosen);
  const int n = static_cast<int>(e.ids.size());
  for (int i = from; i <= n - size; ++i) {
    chosen |= Mask{1} << i;
    if (search(e, problem, size - 1, i + 1, chosen)) return true;
    chosen &= ~(Mask{1} << i);
  }
  return false;
}

/// A minimum deletion set (original ids) of size at most `limit`, if any.
inline std::optional<std::vector<dh::Vertex>> solution(const dh::HittingGraph& g, dh::Problem problem,
                                                       int limit = 64) {
  const Explicit e = make_explicit(g);
  const int n = static_cast<int>(e.ids.size());
  for (int size = 0; size <= limit && size <= n; ++size) {
    Mask chosen = 0;
    if (!search(e, problem, size, 0, chosen)) continue;
    std::vector<dh::Vertex> out;
    for (int i = 0; i < n; ++i)
      if (chosen >> i & 1) out.push_back(e.ids[i]);
    return out;
  }
  return std::nullopt;
}

/// Minimum deletion count if it is at most `limit`, otherwise limit + 1.
inline int optimum(const dh::HittingGraph& g, dh::Problem problem, int limit = 64) {
  const auto s = solution(g, problem, limit);
  return s ? static_cast<int>(s->size()) : limit + 1;
}

/// Does deleting the original ids `removed` leave a feasible residual?
inline bool certifies(const dh::HittingGraph& g, dh::Problem problem, const std::vector<dh::Vertex>& removed) {
  const Explicit e = make_explicit(g);
  Mask m = 0;
  for (dh::Vertex v : removed)
    for (std::size_t i = 0; i < e.ids.size(); ++i)
      if (e.ids[i] == v) m |= Mask{1} << i;
  return feasible(e, problem, m);
}

}  // namespace brute
