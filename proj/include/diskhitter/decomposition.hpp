#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diskhitter/geometry.hpp"
#include "diskhitter/graph.hpp"

namespace dh {

/// Rooted tree decomposition whose bags are unions of clique units.
///
/// `units` is a global list of disjoint cliques; every bag is a set of whole
/// units, so a unit's occurrence set is a connected subtree. The units inside
/// a bag form that bag's clique partition.
struct TreeDecomposition {
  std::vector<int> parent;                  // -1 at the root
  int root = -1;
  std::vector<std::vector<Vertex>> units;   // sorted members
  std::vector<std::vector<int>> bag_units;  // sorted unit ids per node
  std::vector<Point> unit_witness;          // geometric units only (may be empty)

  int node_count() const { return static_cast<int>(parent.size()); }
  std::vector<std::vector<int>> children() const;
  std::vector<Vertex> bag(int node) const;
  CliquePartition bag_partition(int node) const;
  double bag_weight(int node) const;
  int add_node(int parent_node, std::vector<int> units_in_bag);
};

struct TdOptions {
  int leaf_size = 16;
  double balance = 2.0 / 3.0;
  /// A separator heavier than c_sep * sqrt(n) is rejected.
  double c_sep = 4.0;
  std::uint64_t seed = 0;
};

struct TdTrace {
  std::vector<std::pair<int, int>> splits;  // (parent size, child size)
  std::vector<double> separator_weights;
  int fallbacks = 0;
};

struct Separator {
  std::vector<Vertex> vertices;
  CliquePartition partition;
};

/// Separator of the alive vertices of `g`, taken from circle and line
/// sweeps over the disk centers. Every component of g - S has at most
/// balance * n vertices. Throws SeparatorNotFound otherwise.
Separator balanced_separator(const HittingGraph& g, std::span<const Disk> disks, const TdOptions& opts = {});

/// Geometric recursive construction when `disks` is nonempty, robust_td
/// otherwise. A failed separator search falls back to robust_td for that
/// subproblem.
TreeDecomposition build_td(const HittingGraph& g, std::span<const Disk> disks, const TdOptions& opts = {},
                           TdTrace* trace = nullptr);

/// Min-fill elimination ordering; units group vertices with identical
/// occurrence sets, split into cliques greedily.
TreeDecomposition robust_td(const HittingGraph& g);

bool validate_td(const HittingGraph& g, const TreeDecomposition& td);
/// Human-readable reason validate_td fails; empty when valid.
std::string td_violation(const HittingGraph& g, const TreeDecomposition& td);

double weighted_width(const TreeDecomposition& td);
/// Classical width: largest bag size minus one.
int td_width(const TreeDecomposition& td);

/// PACE-2017 `.td` text (1-based bag and vertex ids).
std::string to_pace(const TreeDecomposition& td, int vertex_count);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  int unit = -1;  // Introduce / Forget
  std::vector<int> children;
  std::vector<int> units;  // sorted clique set of the node
};

struct NiceTreeDecomposition {
  std::vector<std::vector<Vertex>> units;
  std::vector<NiceNode> nodes;
  int root = -1;

  std::vector<Vertex> bag(int node) const;
  /// Children before parents.
  std::vector<int> postorder() const;
  TreeDecomposition flatten() const;
  /// Node-type invariant violations; empty when well formed.
  std::string check() const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition& td);

}  // namespace dh
