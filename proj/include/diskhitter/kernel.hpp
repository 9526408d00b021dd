#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "diskhitter/branching.hpp"
#include "diskhitter/graph.hpp"

namespace dh {

/// Triangles such that every triangle of the graph shares at least two
/// vertices with one of them.
struct Core {
  std::vector<Triangle> triangles;

  std::vector<Vertex> vertices() const;
};

struct Crown {
  std::vector<Vertex> I;
  std::vector<Edge> H;
  std::vector<std::pair<Vertex, Edge>> M;  // matches every H edge into I
};

/// Seeded with the greedy hitting set plus all constraint endpoints; adds
/// one triangle per seed edge and the triangles of a maximal matching in
/// each seed vertex's outside neighbourhood.
Core compute_core(const HittingGraph& g);
bool verify_core(const HittingGraph& g, const Core& core);

struct IHSets {
  std::vector<Vertex> I;
  std::vector<Edge> H;
};

/// I: vertices in some triangle but in no core triangle (constraint
/// endpoints excluded); H: edges forming a triangle with a vertex of I.
/// Throws CorePropertyViolated when an H edge is not inside a core triangle.
IHSets compute_IH(const HittingGraph& g, const Core& core);

/// Crown from a maximum matching and Koenig cover of the I/H incidence
/// graph; none unless |I| > |H|.
std::optional<Crown> find_crown(const HittingGraph& g, const IHSets& ih);

/// Empty string when all crown conditions hold.
std::string crown_violation(const HittingGraph& g, const Crown& crown);

/// Deletes I and turns every H edge into a must-hit constraint.
HittingInstance apply_crown(const HittingInstance& inst, const Crown& crown);

struct KernelStats {
  int rounds = 0;
  int crowns = 0;
  int removed_by_crowns = 0;
};

using CrownObserver = std::function<void(const HittingGraph&, const Crown&)>;

/// Crown reductions until none applies, then drops vertices in no triangle
/// (constraint endpoints stay).
HittingInstance kernelize_ths(const HittingInstance& inst, KernelStats* stats = nullptr,
                              const CrownObserver& observer = {});

}  // namespace dh
