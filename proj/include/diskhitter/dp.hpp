#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "diskhitter/decomposition.hpp"
#include "diskhitter/graph.hpp"

namespace dh {

/// Default bound on the number of states of a single node, overridable by
/// the DISKHITTER_STATE_CAP environment variable.
std::uint64_t default_state_cap();

/// Vertices of one clique that survive in a bag state.
///
/// `colors` is used by odd cycle transversal (0/1 per survivor), `full` by
/// feedback vertex set: a surviving twin representative either keeps every
/// copy (full) or exactly one.
struct LocalChoice {
  std::vector<Vertex> survivors;
  std::vector<int> colors;
  std::vector<char> full;
  int cost = 0;  // deletions charged when the clique is introduced
};

/// Every admissible choice for one clique, in enumeration order.
std::vector<LocalChoice> local_choices(const HittingGraph& g, std::span<const Vertex> clique, Problem problem);

/// All bag states of a clique partition: the product of per-clique choices.
/// Each state lists its choice index per clique.
std::vector<std::vector<int>> enumerate_bag_states(const HittingGraph& g, const CliquePartition& part,
                                                   Problem problem);
std::uint64_t bag_state_count(const HittingGraph& g, const CliquePartition& part, Problem problem);

/// A partial-solution row of the feedback vertex set table.
struct PartitionRow {
  std::vector<int> block;   // block label per survivor, canonical (first-occurrence order)
  std::vector<int> degree;  // residual degree per survivor (checked for full representatives)
  int cost = 0;
};

/// True when `a` makes `b` redundant: no more expensive, a refinement of its
/// partition and no larger degree anywhere.
bool row_dominates(const PartitionRow& a, const PartitionRow& b);

/// Drops dominated rows (and duplicates, keeping the cheapest); the retained
/// rows have the same optimal completion value as the input.
std::vector<PartitionRow> rank_reduce(std::vector<PartitionRow> rows);

struct NodeStats {
  int node = -1;
  NiceKind kind = NiceKind::Leaf;
  std::uint64_t enumerated = 0;  // states evaluated at the node
  std::uint64_t feasible = 0;    // states with finite cost
};

/// Stored tables around one join node (triangle hitting and odd cycle
/// transversal). Index i of every vector is the same bag state.
struct JoinRecord {
  int node = -1;
  std::vector<int> cost;
  std::vector<int> left;
  std::vector<int> right;
  std::vector<int> bag_deleted;  // weight of the deleted bag vertices per state
};

inline constexpr int kInfeasible = 1 << 29;

struct DpOptions {
  std::uint64_t state_cap = 0;  // 0 selects default_state_cap()
  int budget = -1;              // costs above it are discarded when >= 0
  bool reduce_rows = true;
  std::function<void(const NodeStats&)> on_node;
  std::function<void(const JoinRecord&)> on_join;
};

struct DpResult {
  bool feasible = false;
  int cost = 0;
  std::vector<Vertex> deleted;  // fully deleted vertices
  std::vector<Vertex> single;   // representatives keeping exactly one copy
  std::uint64_t max_states = 0;
};

/// Solution over member ids: all members of deleted vertices and all but the
/// first member of single-copy representatives.
std::vector<Vertex> expand_solution(const HittingGraph& g, const DpResult& r);

DpResult solve_ths_td(const NiceTreeDecomposition& ntd, const HittingGraph& g, const DpOptions& opts = {});
DpResult solve_oct_td(const NiceTreeDecomposition& ntd, const HittingGraph& g, const DpOptions& opts = {});
DpResult solve_fvs_td(const NiceTreeDecomposition& ntd, const HittingGraph& g, const DpOptions& opts = {});
DpResult solve_td(Problem problem, const NiceTreeDecomposition& ntd, const HittingGraph& g,
                  const DpOptions& opts = {});

}  // namespace dh
