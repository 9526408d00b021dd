#include "diskhitter/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <random>
#include <string>

namespace dh {

namespace {

using Mask = std::uint32_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

struct Dense {
  int n = 0;
  std::vector<Vertex> ids;
  std::vector<Mask> adj;
  std::vector<Mask> pairs;
};

Dense densify(const HittingGraph& compact, int limit) {
  const HittingGraph g = expand_members(compact);
  Dense d;
  d.ids = g.vertices();
  d.n = static_cast<int>(d.ids.size());
  if (d.n > limit)
    throw TooLarge("exhaustive solver limited to " + std::to_string(limit) + " vertices, got " +
                   std::to_string(d.n));
  std::vector<int> pos(static_cast<std::size_t>(g.capacity()), -1);
  for (int i = 0; i < d.n; ++i) pos[d.ids[i]] = i;
  d.adj.assign(d.n, 0);
  for (int i = 0; i < d.n; ++i)
    for (Vertex w : g.neighbors(d.ids[i])) d.adj[i] |= bit(pos[w]);
  for (const Edge& e : g.constraint_edges()) d.pairs.push_back(bit(pos[e.u]) | bit(pos[e.v]));
  return d;
}

std::vector<int> members_of(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<int> find_triangle(const Dense& d, Mask alive) {
  for (int a : members_of(alive)) {
    const Mask na = d.adj[a] & alive & ~(bit(a + 1) - 1);
    for (int b : members_of(na)) {
      const Mask common = na & d.adj[b];
      if (common) return {a, b, std::countr_zero(common)};
    }
  }
  return {};
}

// Shortest path from s to t inside `alive`, avoiding the edge s-t itself.
std::vector<int> shortest_path(const Dense& d, Mask alive, int s, int t) {
  std::vector<int> prev(d.n, -1);
  std::deque<int> queue{s};
  Mask seen = bit(s);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : members_of(d.adj[x] & alive & ~seen)) {
      if (x == s && y == t) continue;
      seen |= bit(y);
      prev[y] = x;
      if (y == t) {
        std::vector<int> path{t};
        for (int z = t; z != s; z = prev[z]) path.push_back(prev[z]);
        return path;
      }
      queue.push_back(y);
    }
  }
  return {};
}

std::vector<int> find_cycle(const Dense& d, Mask alive) {
  std::vector<int> best;
  for (int u : members_of(alive))
    for (int v : members_of(d.adj[u] & alive & ~(bit(u + 1) - 1))) {
      auto p = shortest_path(d, alive, u, v);
      if (!p.empty() && (best.empty() || p.size() < best.size())) best = std::move(p);
    }
  return best;
}

// Vertices of a shortest odd closed walk, which is an odd cycle.
std::vector<int> find_odd_cycle(const Dense& d, Mask alive) {
  std::vector<int> best;
  for (int s : members_of(alive)) {
    // States are (vertex, parity of the walk length).
    std::vector<int> prev(2 * d.n, -1);
    std::vector<char> seen(2 * d.n, 0);
    std::deque<int> queue{2 * s};
    seen[2 * s] = 1;
    while (!queue.empty()) {
      const int st = queue.front();
      queue.pop_front();
      if (st == 2 * s + 1) break;
      const int x = st / 2, par = st % 2;
      for (int y : members_of(d.adj[x] & alive)) {
        const int nx = 2 * y + (1 - par);
        if (seen[nx]) continue;
        seen[nx] = 1;
        prev[nx] = st;
        queue.push_back(nx);
      }
    }
    if (!seen[2 * s + 1]) continue;
    std::vector<int> walk;
    for (int st = 2 * s + 1; st != 2 * s; st = prev[st]) walk.push_back(st / 2);
    std::sort(walk.begin(), walk.end());
    walk.erase(std::unique(walk.begin(), walk.end()), walk.end());
    if (best.empty() || walk.size() < best.size()) best = std::move(walk);
  }
  return best;
}

std::vector<int> violation(const Dense& d, Problem problem, Mask alive) {
  for (Mask p : d.pairs)
    if ((p & alive) == p) return members_of(p);
  switch (problem) {
    case Problem::Ths: return find_triangle(d, alive);
    case Problem::Fvs: return find_cycle(d, alive);
    case Problem::Oct: return find_odd_cycle(d, alive);
  }
  return {};
}

bool search(const Dense& d, Problem problem, Mask alive, int budget, std::uint64_t& enumerated) {
  ++enumerated;
  const auto hit = violation(d, problem, alive);
  if (hit.empty()) return true;
  if (budget <= 0) return false;
  for (int v : hit)
    if (search(d, problem, alive & ~bit(v), budget - 1, enumerated)) return true;
  return false;
}

Mask full_mask(int n) { return n == 32 ? ~Mask{0} : bit(n) - 1; }

void set_witness(const Dense& d, Mask removed, OracleResult& r) {
  r.witness.clear();
  for (int i : members_of(removed)) r.witness.push_back(d.ids[i]);
  std::sort(r.witness.begin(), r.witness.end());
}

}  // namespace

OracleResult brute_force(Problem problem, const HittingGraph& g, int k_max) {
  const Dense d = densify(g, kOracleMaxVertices);
  OracleResult r;
  const Mask all = full_mask(d.n);
  for (int b = 0; b <= std::min(k_max, d.n); ++b) {
    if (!search(d, problem, all, b, r.enumerated)) continue;
    // Recover a witness of size b by greedy descent.
    Mask alive = all;
    int left = b;
    while (true) {
      const auto hit = violation(d, problem, alive);
      if (hit.empty()) break;
      for (int v : hit) {
        std::uint64_t scratch = 0;
        if (search(d, problem, alive & ~bit(v), left - 1, scratch)) {
          alive &= ~bit(v);
          --left;
          break;
        }
      }
    }
    r.optimum = b - left;
    set_witness(d, all & ~alive, r);
    return r;
  }
  return r;
}

OracleResult brute_force_flat(Problem problem, const HittingGraph& g, int k_max) {
  const Dense d = densify(g, kFlatOracleMaxVertices);
  OracleResult r;
  const Mask all = full_mask(d.n);
  std::vector<Mask> order;
  for (Mask m = 0; m <= all; ++m) {
    order.push_back(m);
    if (m == all) break;
  }
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  for (Mask m : order) {
    if (std::popcount(m) > k_max) break;
    ++r.enumerated;
    if (violation(d, problem, all & ~m).empty()) {
      r.optimum = std::popcount(m);
      set_witness(d, m, r);
      break;
    }
  }
  return r;
}

namespace {

constexpr double kDegeneracy = 1e-6;

bool near_tangent(const Disk& a, const Disk& b) {
  const double dist = std::hypot(a.cx - b.cx, a.cy - b.cy);
  return std::abs(dist - (a.r + b.r)) < kDegeneracy || std::abs(dist - std::abs(a.r - b.r)) < kDegeneracy;
}

bool near_boundary(const Disk& d, Point p) {
  return std::abs(std::hypot(p.x - d.cx, p.y - d.cy) - d.r) < kDegeneracy;
}

}  // namespace

std::vector<Disk> random_instance(int n, int target_ply, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("random_instance needs n >= 1");
  if (target_ply < 1) throw InvalidArgument("random_instance needs target_ply >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> log_radius(std::log(0.02), std::log(0.3));
  constexpr int kMaxRejections = 100000;

  std::vector<Disk> disks;
  // Arrangement vertices so far (centers and boundary crossings) with the
  // number of disks covering each; a new disk only deepens points inside it.
  std::vector<Point> points;
  std::vector<int> depth;
  std::vector<char> is_crossing;
  while (static_cast<int>(disks.size()) < n) {
    int rejections = 0;
    while (true) {
      Disk cand{static_cast<Vertex>(disks.size()), unit(rng), unit(rng), std::exp(log_radius(rng))};
      std::vector<const Disk*> local;
      for (const Disk& d : disks)
        if (disks_intersect(cand, d)) local.push_back(&d);
      bool ok = true;
      std::vector<Point> fresh{cand.center()};
      std::vector<const Disk*> owner{nullptr};
      std::vector<int> fresh_depth;
      std::vector<int> inside;
      if (!local.empty()) {
        for (std::size_t i = 0; ok && i < points.size(); ++i)
          if (disk_contains(cand, points[i])) {
            inside.push_back(static_cast<int>(i));
            ok = depth[i] + 1 <= target_ply;
          }
        for (const Disk* d : local)
          for (Point p : circle_intersections(cand, *d)) {
            fresh.push_back(p);
            owner.push_back(d);
          }
      }
      for (std::size_t i = 0; ok && i < fresh.size(); ++i) {
        int covered = 1;
        for (const Disk* d : local) covered += disk_contains(*d, fresh[i]) ? 1 : 0;
        fresh_depth.push_back(covered);
        ok = covered <= target_ply;
      }
      // Degeneracies: near-tangent pairs and near triple points.
      for (std::size_t i = 0; ok && i < disks.size(); ++i)
        ok = !near_tangent(cand, disks[i]) && !near_boundary(disks[i], cand.center());
      for (std::size_t i = 1; ok && i < fresh.size(); ++i)
        for (const Disk* d : local)
          if (d != owner[i] && near_boundary(*d, fresh[i])) ok = false;
      for (std::size_t i = 0; ok && i < points.size(); ++i) ok = !(is_crossing[i] && near_boundary(cand, points[i]));
      if (ok) {
        for (int i : inside) ++depth[i];
        for (std::size_t i = 0; i < fresh.size(); ++i) {
          points.push_back(fresh[i]);
          depth.push_back(fresh_depth[i]);
          is_crossing.push_back(i > 0 ? 1 : 0);
        }
        disks.push_back(cand);
        break;
      }
      if (++rejections >= kMaxRejections)
        throw GenerationStalled("could not place disk " + std::to_string(disks.size()) + " of " +
                                std::to_string(n) + " within ply " + std::to_string(target_ply));
    }
  }
  return disks;
}

}  // namespace dh
