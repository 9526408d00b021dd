#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diskhitter/geometry.hpp"
#include "diskhitter/graph.hpp"

namespace dh {

/// Largest explicit vertex count the exhaustive solvers accept.
inline constexpr int kOracleMaxVertices = 26;
inline constexpr int kFlatOracleMaxVertices = 20;

struct OracleResult {
  std::optional<int> optimum;  // none when the optimum exceeds k_max
  std::vector<Vertex> witness; // member ids
  std::uint64_t enumerated = 0;
};

/// Exact optimum by iterative deepening: an uncovered structure (unhit
/// constraint edge, triangle, shortest cycle or shortest odd cycle) is
/// picked and each of its vertices is tried. Works on the member-expanded
/// graph, so sizes are multiplicity-weighted. Throws TooLarge above
/// kOracleMaxVertices explicit vertices.
OracleResult brute_force(Problem problem, const HittingGraph& g, int k_max);

/// Same answer by scanning every subset in order of size; limited to
/// kFlatOracleMaxVertices.
OracleResult brute_force_flat(Problem problem, const HittingGraph& g, int k_max);

/// Seeded random disks in the unit square with radii log-uniform in
/// [0.02, 0.3]. Each disk is resampled until the ply stays within
/// `target_ply` and no pair of circles is within 1e-6 of tangency or of a
/// triple point. Throws GenerationStalled after 100000 consecutive
/// rejections of one disk.
std::vector<Disk> random_instance(int n, int target_ply, std::uint64_t seed);

}  // namespace dh
