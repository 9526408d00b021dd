#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "diskhitter/branching.hpp"
#include "diskhitter/geometry.hpp"
#include "diskhitter/graph.hpp"

namespace dh {

struct SolveConfig {
  Problem problem = Problem::Ths;
  Mode mode = Mode::Geometric;
  int p = 0;                   // 0 selects select_p
  std::uint64_t seed = 0;
  int jobs = 1;
  std::uint64_t state_cap = 0; // 0 selects default_state_cap()
  /// Cross-check every cleaned instance small enough for the exhaustive
  /// solver and skip the cleaning where the optima disagree.
  bool validate = false;
};

enum class Answer { Yes, No, Unknown };
std::string_view to_string(Answer a);

struct SolveReport {
  Answer answer = Answer::No;
  std::vector<Vertex> solution;  // member ids
  bool certified = false;
  int k = 0;
  int p = 0;
  std::uint64_t instances_explored = 0;
  std::vector<int> kernel_sizes;
  std::vector<double> widths;
  int short_circuits = 0;   // branch instances refuted by an approximation bound
  int overflows = 0;        // decompositions whose tables exceeded the cap
  int robust_retries = 0;   // overflowed instances re-run on a robust decomposition
  int cleaning_skipped = 0; // instances solved uncleaned after a validation mismatch
  double wall_seconds = 0.0;
};

/// An instance as read from a file: the graph plus, for disk inputs, the
/// disks indexed by vertex id.
struct SolveInput {
  HittingGraph graph;
  std::shared_ptr<const std::vector<Disk>> disks;
};

/// max(3, round(k^e)) with the exponent fixed per problem and mode.
int select_p(Problem problem, int k, Mode mode);

SolveReport solve(const SolveInput& input, int k, const SolveConfig& config);

/// Vertices outside `f` whose whole neighbourhood lies in `f`.
std::vector<Vertex> deep_vertices(const HittingGraph& g, std::span<const Vertex> f);

/// Does deleting the member ids `solution` (at most k of them) leave the
/// member-expanded graph triangle-free, acyclic or bipartite with every
/// constraint edge hit?
bool certify_solution(Problem problem, const HittingGraph& g, std::span<const Vertex> solution, int k);

/// Kernel sizes of THS branch instances: the instance is branched with
/// threshold p and each emitted instance is cleaned and kernelized.
struct KernelProfile {
  int instances = 0;      // branch instances kernelized
  int short_circuits = 0; // branch instances rejected by the 3k packing bound
  double mean_kernel = 0.0;
  int max_kernel = 0;
  int direct_kernel = 0;  // kernel of the unbranched instance
};
KernelProfile kernel_profile(const SolveInput& input, int k, int p, Mode mode);

}  // namespace dh
