#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "diskhitter/geometry.hpp"
#include "diskhitter/graph.hpp"

namespace dh {

/// A graph with a remaining budget and the vertices already committed to
/// the solution. In geometric mode `disks` is indexed by vertex id.
struct HittingInstance {
  HittingGraph graph;
  int k = 0;
  std::vector<Vertex> forced;
  Mode mode = Mode::Robust;
  std::shared_ptr<const std::vector<Disk>> disks;

  /// Disks of the alive vertices (empty in robust mode).
  std::vector<Disk> alive_disks() const;
  /// Commits `vs` to the solution, charging their multiplicities.
  void force(std::span<const Vertex> vs);
};

/// Sum of multiplicities.
int deletion_cost(const HittingGraph& g, std::span<const Vertex> vs);

/// A clique of size >= p: the deepest common-point clique in geometric
/// mode, a greedy clique grown from high-degree vertices in robust mode.
std::optional<std::vector<Vertex>> find_clique_geq(const HittingInstance& inst, int p);

/// Repeatedly branches on large cliques; each child keeps at most two
/// vertices of the clique. Children over budget are dropped.
std::vector<HittingInstance> branch_cliques(const HittingInstance& inst, int p);

/// N*(v): neighbours of v not incident to any marked edge.
std::vector<Vertex> unmarked_neighbors(const HittingGraph& g, Vertex v);

/// Branches on a vertex whose unmarked neighbourhood has a maximal matching
/// of size >= p: delete it, or mark the matching edges.
std::vector<HittingInstance> branch_matchings(const HittingInstance& inst, int p);

/// Returning false from the sink stops the enumeration.
using InstanceSink = std::function<bool(HittingInstance&&)>;

/// Clique branching followed by matching branching on each leaf, streamed
/// to `sink` in exploration order. Returns false if the sink stopped it.
bool run_two_step(const HittingInstance& inst, int p, const InstanceSink& sink);
std::vector<HittingInstance> run_two_step(const HittingInstance& inst, int p);

}  // namespace dh
