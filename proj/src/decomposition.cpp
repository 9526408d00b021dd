#include "diskhitter/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace dh {

namespace {

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Component sizes of G[vertices] minus the vertices flagged in `blocked`.
int largest_component(const HittingGraph& g, const std::vector<Vertex>& vertices, std::vector<char>& member,
                      const std::vector<char>& blocked, std::vector<Vertex>& stack) {
  std::vector<char> seen(member.size(), 0);
  int best = 0;
  for (Vertex s : vertices) {
    if (blocked[s] || seen[s]) continue;
    int size = 0;
    stack.assign(1, s);
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(v))
        if (member[w] && !blocked[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    best = std::max(best, size);
  }
  return best;
}

std::vector<std::vector<Vertex>> components(const HittingGraph& g, const std::vector<Vertex>& vertices,
                                            const std::vector<char>& member) {
  std::vector<char> seen(member.size(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s : vertices) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (member[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

struct GeometricBuilder {
  const HittingGraph& g;
  std::vector<const Disk*> disk_of;  // by vertex id
  TdOptions opts;
  TdTrace* trace;
  TreeDecomposition td;
  std::mt19937_64 rng;

  GeometricBuilder(const HittingGraph& graph, std::span<const Disk> disks, const TdOptions& o, TdTrace* t)
      : g(graph), disk_of(static_cast<std::size_t>(graph.capacity()), nullptr), opts(o), trace(t), rng(o.seed) {
    for (const auto& d : disks)
      if (d.id >= 0 && d.id < g.capacity()) disk_of[d.id] = &d;
    for (Vertex v : g.vertices())
      if (!disk_of[v]) throw InvalidArgument("build_td: no disk for vertex " + std::to_string(v));
  }

  std::vector<Disk> disks_for(const std::vector<Vertex>& vs) const {
    std::vector<Disk> out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(*disk_of[v]);
    return out;
  }

  std::vector<int> add_units(const CliquePartition& part) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < part.cliques.size(); ++i) {
      auto c = part.cliques[i];
      std::sort(c.begin(), c.end());
      ids.push_back(static_cast<int>(td.units.size()));
      td.units.push_back(std::move(c));
      td.unit_witness.push_back(i < part.witnesses.size() ? part.witnesses[i] : Point{});
    }
    return ids;
  }

  std::vector<Point> sample_centers(const std::vector<Vertex>& vs) {
    std::vector<Point> centers;
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300, sx = 0.0, sy = 0.0;
    for (Vertex v : vs) {
      const Disk& d = *disk_of[v];
      minx = std::min(minx, d.cx);
      maxx = std::max(maxx, d.cx);
      miny = std::min(miny, d.cy);
      maxy = std::max(maxy, d.cy);
      sx += d.cx;
      sy += d.cy;
    }
    const double n = static_cast<double>(vs.size());
    centers.push_back({(minx + maxx) / 2.0, (miny + maxy) / 2.0});
    centers.push_back({sx / n, sy / n});

    // k-means-style centers: seeded picks refined by a few Lloyd rounds.
    const int k = std::min<int>(6, static_cast<int>(vs.size()));
    std::vector<Point> km;
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    for (int i = 0; i < k; ++i) km.push_back(disk_of[vs[pick(rng)]]->center());
    for (int round = 0; round < 5; ++round) {
      std::vector<double> ax(k, 0.0), ay(k, 0.0), cnt(k, 0.0);
      for (Vertex v : vs) {
        const Point p = disk_of[v]->center();
        int best = 0;
        double bd = 1e300;
        for (int i = 0; i < k; ++i) {
          const double d = (p.x - km[i].x) * (p.x - km[i].x) + (p.y - km[i].y) * (p.y - km[i].y);
          if (d < bd) {
            bd = d;
            best = i;
          }
        }
        ax[best] += p.x;
        ay[best] += p.y;
        cnt[best] += 1.0;
      }
      for (int i = 0; i < k; ++i)
        if (cnt[i] > 0) km[i] = {ax[i] / cnt[i], ay[i] / cnt[i]};
    }
    centers.insert(centers.end(), km.begin(), km.end());
    return centers;
  }

  // Throws SeparatorNotFound.
  Separator separator(const std::vector<Vertex>& vs) {
    const int n = static_cast<int>(vs.size());
    const double limit = opts.balance * n;
    std::vector<char> member(static_cast<std::size_t>(g.capacity()), 0);
    for (Vertex v : vs) member[v] = 1;
    std::vector<char> blocked(member.size(), 0);
    std::vector<Vertex> stack;

    if (largest_component(g, vs, member, blocked, stack) <= limit) return {};

    std::set<std::vector<Vertex>> tried;
    std::vector<std::vector<Vertex>> balanced;
    auto consider = [&](std::vector<Vertex> s) {
      if (s.empty() || static_cast<int>(s.size()) >= n) return;
      if (!tried.insert(s).second) return;
      for (Vertex v : s) blocked[v] = 1;
      const int big = largest_component(g, vs, member, blocked, stack);
      for (Vertex v : s) blocked[v] = 0;
      if (big <= limit) balanced.push_back(std::move(s));
    };

    for (Point c : sample_centers(vs)) {
      double far = 0.0;
      for (Vertex v : vs) far = std::max(far, std::hypot(disk_of[v]->cx - c.x, disk_of[v]->cy - c.y));
      if (far <= 0.0) continue;
      const double lo = far * 0.05;
      for (int step = 0; step < 32; ++step) {
        const double radius = lo * std::pow(far / lo, step / 31.0);
        std::vector<Vertex> s;
        for (Vertex v : vs) {
          const Disk& d = *disk_of[v];
          if (std::abs(std::hypot(d.cx - c.x, d.cy - c.y) - radius) <= d.r + kGeomEps) s.push_back(v);
        }
        consider(std::move(s));
      }
    }

    // Straight lines are the limit of circles with far-away centers.
    constexpr int kDirections = 12;
    const double quantiles[] = {0.34, 0.4, 0.45, 0.5, 0.55, 0.6, 0.66};
    for (int a = 0; a < kDirections; ++a) {
      const double theta = M_PI * a / kDirections;
      const double ux = std::cos(theta), uy = std::sin(theta);
      std::vector<double> proj;
      for (Vertex v : vs) proj.push_back(disk_of[v]->cx * ux + disk_of[v]->cy * uy);
      std::vector<double> sorted = proj;
      std::sort(sorted.begin(), sorted.end());
      for (double q : quantiles) {
        const double t = sorted[static_cast<std::size_t>(q * (n - 1))];
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < vs.size(); ++i)
          if (std::abs(proj[i] - t) <= disk_of[vs[i]]->r + kGeomEps) s.push_back(vs[i]);
        consider(std::move(s));
      }
    }

    if (balanced.empty()) throw SeparatorNotFound("no balanced circle or line separator");

    std::sort(balanced.begin(), balanced.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    constexpr std::size_t kWeighed = 12;
    Separator best;
    double best_weight = 1e300;
    for (std::size_t i = 0; i < balanced.size() && i < kWeighed; ++i) {
      auto part = clique_partition(disks_for(balanced[i]));
      const double w = part.weight();
      if (w < best_weight) {
        best_weight = w;
        best.vertices = balanced[i];
        best.partition = std::move(part);
      }
    }
    if (best_weight > opts.c_sep * std::sqrt(static_cast<double>(n)))
      throw SeparatorNotFound("separator weight exceeds bound");
    return best;
  }

  void attach_robust(const std::vector<Vertex>& vs, int parent_node, const std::vector<int>& inherited) {
    std::vector<char> keep(static_cast<std::size_t>(g.capacity()), 0);
    for (Vertex v : vs) keep[v] = 1;
    std::vector<Vertex> drop;
    for (Vertex v : g.vertices())
      if (!keep[v]) drop.push_back(v);
    const TreeDecomposition sub = robust_td(g.without(drop));
    const int unit_offset = static_cast<int>(td.units.size());
    for (const auto& u : sub.units) {
      td.units.push_back(u);
      td.unit_witness.push_back(Point{});
    }
    const int node_offset = td.node_count();
    for (int t = 0; t < sub.node_count(); ++t) {
      std::vector<int> bag = inherited;
      for (int u : sub.bag_units[t]) bag.push_back(u + unit_offset);
      std::sort(bag.begin(), bag.end());
      const int p = sub.parent[t] < 0 ? parent_node : sub.parent[t] + node_offset;
      td.parent.push_back(p);
      td.bag_units.push_back(std::move(bag));
    }
    if (parent_node < 0) td.root = sub.root + node_offset;
  }

  // Builds the subtree for `vs`, attached below `parent_node`.
  void build(const std::vector<Vertex>& vs, int parent_node, const std::vector<int>& inherited) {
    const int n = static_cast<int>(vs.size());
    if (n <= opts.leaf_size) {
      std::vector<int> bag = inherited;
      for (int u : add_units(clique_partition(disks_for(vs)))) bag.push_back(u);
      std::sort(bag.begin(), bag.end());
      const int node = td.add_node(parent_node, std::move(bag));
      if (parent_node < 0) td.root = node;
      return;
    }
    Separator sep;
    try {
      sep = separator(vs);
    } catch (const SeparatorNotFound&) {
      if (trace) ++trace->fallbacks;
      attach_robust(vs, parent_node, inherited);
      return;
    }
    if (trace) trace->separator_weights.push_back(sep.partition.weight());
    std::vector<int> bag = inherited;
    for (int u : add_units(sep.partition)) bag.push_back(u);
    std::sort(bag.begin(), bag.end());
    const int node = td.add_node(parent_node, bag);
    if (parent_node < 0) td.root = node;

    std::vector<char> member(static_cast<std::size_t>(g.capacity()), 0);
    std::vector<Vertex> rest;
    std::vector<char> in_sep(member.size(), 0);
    for (Vertex v : sep.vertices) in_sep[v] = 1;
    for (Vertex v : vs)
      if (!in_sep[v]) {
        member[v] = 1;
        rest.push_back(v);
      }
    // A unit is passed down only while it still touches the component.
    std::vector<char> in_comp(member.size(), 0);
    for (const auto& comp : components(g, rest, member)) {
      if (trace) trace->splits.emplace_back(n, static_cast<int>(comp.size()));
      for (Vertex v : comp) in_comp[v] = 1;
      std::vector<int> down;
      for (int u : bag) {
        const auto& unit = td.units[u];
        if (std::any_of(unit.begin(), unit.end(), [&](Vertex x) {
              const auto& nb = g.neighbors(x);
              return std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return in_comp[w] != 0; });
            }))
          down.push_back(u);
      }
      for (Vertex v : comp) in_comp[v] = 0;
      build(comp, node, down);
    }
  }
};

// Contracts every tree edge where one endpoint's (sorted) bag contains the
// other's.
void contract_subset_edges(std::vector<std::vector<int>>& bags, std::vector<int>& parent, int& root) {
  bool changed = true;
  while (changed) {
    changed = false;
    const int count = static_cast<int>(parent.size());
    for (int t = 0; t < count && !changed; ++t) {
      const int p = parent[t];
      if (p < 0) continue;
      const auto& bt = bags[t];
      const auto& bp = bags[p];
      const bool t_in_p = std::includes(bp.begin(), bp.end(), bt.begin(), bt.end());
      const bool p_in_t = std::includes(bt.begin(), bt.end(), bp.begin(), bp.end());
      if (!t_in_p && !p_in_t) continue;
      if (!t_in_p) bags[p] = bt;
      for (auto& q : parent)
        if (q == t) q = p;
      const int last = count - 1;
      if (t != last) {
        parent[t] = parent[last];
        bags[t] = std::move(bags[last]);
        for (auto& q : parent)
          if (q == last) q = t;
        if (root == last) root = t;
      }
      parent.pop_back();
      bags.pop_back();
      changed = true;
    }
  }
}

}  // namespace

std::vector<std::vector<int>> TreeDecomposition::children() const {
  std::vector<std::vector<int>> out(parent.size());
  for (int t = 0; t < node_count(); ++t)
    if (parent[t] >= 0) out[parent[t]].push_back(t);
  return out;
}

std::vector<Vertex> TreeDecomposition::bag(int node) const {
  std::vector<Vertex> out;
  for (int u : bag_units[node]) out.insert(out.end(), units[u].begin(), units[u].end());
  std::sort(out.begin(), out.end());
  return out;
}

CliquePartition TreeDecomposition::bag_partition(int node) const {
  CliquePartition part;
  for (int u : bag_units[node]) {
    part.cliques.push_back(units[u]);
    if (static_cast<std::size_t>(u) < unit_witness.size()) part.witnesses.push_back(unit_witness[u]);
  }
  return part;
}

double TreeDecomposition::bag_weight(int node) const {
  double w = 0.0;
  for (int u : bag_units[node]) w += CliquePartition::clique_weight(units[u].size());
  return w;
}

int TreeDecomposition::add_node(int parent_node, std::vector<int> units_in_bag) {
  parent.push_back(parent_node);
  bag_units.push_back(std::move(units_in_bag));
  return node_count() - 1;
}

Separator balanced_separator(const HittingGraph& g, std::span<const Disk> disks, const TdOptions& opts) {
  GeometricBuilder b(g, disks, opts, nullptr);
  return b.separator(g.vertices());
}

TreeDecomposition build_td(const HittingGraph& g, std::span<const Disk> disks, const TdOptions& opts,
                           TdTrace* trace) {
  if (disks.empty()) return robust_td(g);
  GeometricBuilder b(g, disks, opts, trace);
  const auto vs = g.vertices();
  if (vs.empty()) {
    b.td.add_node(-1, {});
    b.td.root = 0;
    return std::move(b.td);
  }
  std::vector<char> member(static_cast<std::size_t>(g.capacity()), 0);
  for (Vertex v : vs) member[v] = 1;
  const auto comps = components(g, vs, member);
  if (comps.size() == 1) {
    b.build(vs, -1, {});
  } else {
    // Components hang below an empty root bag.
    const int root = b.td.add_node(-1, {});
    b.td.root = root;
    for (const auto& comp : comps) b.build(comp, root, {});
  }
  return std::move(b.td);
}

TreeDecomposition robust_td(const HittingGraph& g) {
  TreeDecomposition td;
  const auto vs = g.vertices();
  if (vs.empty()) {
    td.add_node(-1, {});
    td.root = 0;
    return td;
  }
  const int cap = g.capacity();
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(cap));
  for (Vertex v : vs) adj[v] = std::set<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end());

  std::vector<char> eliminated(static_cast<std::size_t>(cap), 0);
  std::vector<int> position(static_cast<std::size_t>(cap), -1);
  std::vector<std::vector<Vertex>> bags;
  std::vector<Vertex> order;

  auto fill_in = [&](Vertex v) {
    long fill = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].count(*b)) ++fill;
    return fill;
  };

  for (std::size_t step = 0; step < vs.size(); ++step) {
    Vertex best = -1;
    long best_fill = 0;
    for (Vertex v : vs) {
      if (eliminated[v]) continue;
      const long f = fill_in(v);
      if (best < 0 || f < best_fill || (f == best_fill && adj[v].size() < adj[best].size())) {
        best = v;
        best_fill = f;
      }
    }
    std::vector<Vertex> bag(adj[best].begin(), adj[best].end());
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    for (auto a = adj[best].begin(); a != adj[best].end(); ++a)
      for (auto b = std::next(a); b != adj[best].end(); ++b) {
        adj[*a].insert(*b);
        adj[*b].insert(*a);
      }
    for (Vertex w : adj[best]) adj[w].erase(best);
    adj[best].clear();
    eliminated[best] = 1;
    position[best] = static_cast<int>(order.size());
    order.push_back(best);
    bags.push_back(std::move(bag));
  }

  // Parent of node i: the node of the earliest-eliminated later neighbour.
  const int count = static_cast<int>(order.size());
  std::vector<int> parent(static_cast<std::size_t>(count), -1);
  for (int i = 0; i < count; ++i) {
    int best = -1;
    for (Vertex w : bags[i])
      if (w != order[i] && (best < 0 || position[w] < best)) best = position[w];
    parent[i] = best;
  }
  // Chain separate roots (one per component) under the last root.
  int root = -1;
  for (int i = count - 1; i >= 0; --i)
    if (parent[i] < 0) {
      if (root < 0)
        root = i;
      else
        parent[i] = root;
    }

  contract_subset_edges(bags, parent, root);
  const int nodes = static_cast<int>(bags.size());

  // Units: vertices with identical occurrence sets, split greedily into cliques.
  std::map<std::vector<int>, std::vector<Vertex>> groups;
  {
    std::vector<std::vector<int>> occurs(static_cast<std::size_t>(cap));
    for (int i = 0; i < nodes; ++i)
      for (Vertex v : bags[i]) occurs[v].push_back(i);
    for (Vertex v : vs) groups[occurs[v]].push_back(v);
  }
  std::vector<std::vector<int>> node_units(static_cast<std::size_t>(nodes));
  for (auto& [occ, group] : groups) {
    std::vector<Vertex> left = group;
    while (!left.empty()) {
      auto inner_degree = [&](Vertex v) {
        int d = 0;
        for (Vertex w : left)
          if (w != v && g.adjacent(v, w)) ++d;
        return d;
      };
      std::stable_sort(left.begin(), left.end(),
                       [&](Vertex a, Vertex b) { return inner_degree(a) > inner_degree(b); });
      std::vector<Vertex> clique;
      std::vector<Vertex> rest;
      for (Vertex v : left) {
        bool ok = true;
        for (Vertex c : clique)
          if (!g.adjacent(v, c)) {
            ok = false;
            break;
          }
        (ok ? clique : rest).push_back(v);
      }
      std::sort(clique.begin(), clique.end());
      const int id = static_cast<int>(td.units.size());
      td.units.push_back(std::move(clique));
      for (int node : occ) node_units[node].push_back(id);
      left = std::move(rest);
    }
  }
  for (auto& u : node_units) std::sort(u.begin(), u.end());
  td.parent = std::move(parent);
  td.bag_units = std::move(node_units);
  td.root = root;
  return td;
}

std::string td_violation(const HittingGraph& g, const TreeDecomposition& td) {
  const int nodes = td.node_count();
  if (nodes == 0) return "no nodes";
  if (static_cast<int>(td.bag_units.size()) != nodes) return "bag count mismatch";
  if (td.root < 0 || td.root >= nodes || td.parent[td.root] != -1) return "bad root";
  for (int t = 0; t < nodes; ++t) {
    if (t != td.root && (td.parent[t] < 0 || td.parent[t] >= nodes)) return "node without parent";
    // Walk to the root; a cycle would exceed `nodes` steps.
    int steps = 0;
    for (int x = t; x != td.root; x = td.parent[x])
      if (++steps > nodes) return "parent links contain a cycle";
  }

  const int cap = g.capacity();
  std::vector<std::vector<int>> occurs(static_cast<std::size_t>(cap));
  for (int t = 0; t < nodes; ++t) {
    auto bag = td.bag(t);
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) return "bag partition overlaps in node " + std::to_string(t);
    for (Vertex v : bag) {
      if (v < 0 || v >= cap || !g.alive(v)) return "bag holds a non-vertex";
      occurs[v].push_back(t);
    }
  }
  for (Vertex v : g.vertices()) {
    if (occurs[v].empty()) return "vertex " + std::to_string(v) + " in no bag";
    std::vector<char> has(static_cast<std::size_t>(nodes), 0);
    for (int t : occurs[v]) has[t] = 1;
    int links = 0;
    for (int t : occurs[v])
      if (td.parent[t] >= 0 && has[td.parent[t]]) ++links;
    if (links != static_cast<int>(occurs[v].size()) - 1)
      return "bags of vertex " + std::to_string(v) + " are disconnected";
  }
  for (const Edge& e : g.edges()) {
    std::vector<int> common;
    std::set_intersection(occurs[e.u].begin(), occurs[e.u].end(), occurs[e.v].begin(), occurs[e.v].end(),
                          std::back_inserter(common));
    if (common.empty()) return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " uncovered";
  }
  return {};
}

bool validate_td(const HittingGraph& g, const TreeDecomposition& td) { return td_violation(g, td).empty(); }

double weighted_width(const TreeDecomposition& td) {
  double w = 0.0;
  for (int t = 0; t < td.node_count(); ++t) w = std::max(w, td.bag_weight(t));
  return w;
}

int td_width(const TreeDecomposition& td) {
  std::size_t w = 0;
  for (int t = 0; t < td.node_count(); ++t) w = std::max(w, td.bag(t).size());
  return static_cast<int>(w) - 1;
}

std::string to_pace(const TreeDecomposition& td, int vertex_count) {
  std::ostringstream out;
  out << "s td " << td.node_count() << ' ' << td_width(td) + 1 << ' ' << vertex_count << '\n';
  for (int t = 0; t < td.node_count(); ++t) {
    out << "b " << t + 1;
    for (Vertex v : td.bag(t)) out << ' ' << v + 1;
    out << '\n';
  }
  for (int t = 0; t < td.node_count(); ++t)
    if (td.parent[t] >= 0) out << td.parent[t] + 1 << ' ' << t + 1 << '\n';
  return out.str();
}

std::vector<Vertex> NiceTreeDecomposition::bag(int node) const {
  std::vector<Vertex> out;
  for (int u : nodes[node].units) out.insert(out.end(), units[u].begin(), units[u].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> NiceTreeDecomposition::postorder() const {
  std::vector<int> order;
  if (root < 0) return order;
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(t);
      continue;
    }
    stack.emplace_back(t, true);
    for (auto it = nodes[t].children.rbegin(); it != nodes[t].children.rend(); ++it) stack.emplace_back(*it, false);
  }
  return order;
}

TreeDecomposition NiceTreeDecomposition::flatten() const {
  TreeDecomposition td;
  td.units = units;
  td.parent.assign(nodes.size(), -1);
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    td.bag_units.push_back(nodes[t].units);
    for (int c : nodes[t].children) td.parent[c] = static_cast<int>(t);
  }
  td.root = root;
  return td;
}

std::string NiceTreeDecomposition::check() const {
  if (root < 0) return "no root";
  if (!nodes[root].units.empty()) return "root bag not empty";
  std::vector<int> forgets(units.size(), 0);
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    const NiceNode& nd = nodes[t];
    const std::string where = " at node " + std::to_string(t);
    switch (nd.kind) {
      case NiceKind::Leaf:
        if (!nd.children.empty() || !nd.units.empty()) return "leaf not empty" + where;
        break;
      case NiceKind::Introduce: {
        if (nd.children.size() != 1) return "introduce arity" + where;
        const auto& child = nodes[nd.children[0]].units;
        if (std::binary_search(child.begin(), child.end(), nd.unit)) return "re-introduced clique" + where;
        if (sorted_union(child, {nd.unit}) != nd.units) return "introduce sets differ" + where;
        break;
      }
      case NiceKind::Forget: {
        if (nd.children.size() != 1) return "forget arity" + where;
        const auto& child = nodes[nd.children[0]].units;
        if (!std::binary_search(child.begin(), child.end(), nd.unit)) return "forgetting absent clique" + where;
        if (sorted_difference(child, {nd.unit}) != nd.units) return "forget sets differ" + where;
        ++forgets[nd.unit];
        break;
      }
      case NiceKind::Join:
        if (nd.children.size() != 2) return "join arity" + where;
        if (nodes[nd.children[0]].units != nd.units || nodes[nd.children[1]].units != nd.units)
          return "join sets differ" + where;
        break;
    }
  }
  for (std::size_t u = 0; u < units.size(); ++u)
    if (forgets[u] != 1) return "clique " + std::to_string(u) + " forgotten " + std::to_string(forgets[u]) + " times";
  return {};
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  NiceTreeDecomposition nice;
  nice.units = td.units;
  const auto kids = td.children();

  auto push = [&](NiceKind kind, int unit, std::vector<int> children, std::vector<int> units) {
    nice.nodes.push_back({kind, unit, std::move(children), std::move(units)});
    return static_cast<int>(nice.nodes.size()) - 1;
  };
  auto introduce = [&](int child, int unit) {
    auto units = sorted_union(nice.nodes[child].units, {unit});
    return push(NiceKind::Introduce, unit, {child}, std::move(units));
  };
  auto forget = [&](int child, int unit) {
    auto units = sorted_difference(nice.nodes[child].units, {unit});
    return push(NiceKind::Forget, unit, {child}, std::move(units));
  };

  // Post-order over the source tree without recursion.
  std::vector<int> top(static_cast<std::size_t>(td.node_count()), -1);
  std::vector<int> order;
  {
    std::vector<std::pair<int, bool>> stack{{td.root, false}};
    while (!stack.empty()) {
      auto [t, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        order.push_back(t);
        continue;
      }
      stack.emplace_back(t, true);
      for (auto it = kids[t].rbegin(); it != kids[t].rend(); ++it) stack.emplace_back(*it, false);
    }
  }
  for (int t : order) {
    const auto& bag = td.bag_units[t];
    std::vector<int> branches;
    if (kids[t].empty()) {
      int cur = push(NiceKind::Leaf, -1, {}, {});
      for (int u : bag) cur = introduce(cur, u);
      branches.push_back(cur);
    }
    for (int c : kids[t]) {
      int cur = top[c];
      const auto gone = sorted_difference(td.bag_units[c], bag);
      for (auto it = gone.rbegin(); it != gone.rend(); ++it) cur = forget(cur, *it);
      for (int u : sorted_difference(bag, td.bag_units[c])) cur = introduce(cur, u);
      branches.push_back(cur);
    }
    while (branches.size() > 1) {
      std::vector<int> next;
      for (std::size_t i = 0; i + 1 < branches.size(); i += 2)
        next.push_back(push(NiceKind::Join, -1, {branches[i], branches[i + 1]}, bag));
      if (branches.size() % 2 == 1) next.push_back(branches.back());
      branches = std::move(next);
    }
    top[t] = branches[0];
  }
  int cur = top[td.root];
  const auto root_units = td.bag_units[td.root];
  for (auto it = root_units.rbegin(); it != root_units.rend(); ++it) cur = forget(cur, *it);
  nice.root = cur;
  return nice;
}

}  // namespace dh
