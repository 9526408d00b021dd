#pragma once

#include <span>
#include <vector>

#include "diskhitter/types.hpp"

namespace dh {

/// Slack applied to every squared-distance comparison.
inline constexpr double kGeomEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Closed disk in the plane. `id` is the vertex it represents.
struct Disk {
  Vertex id = 0;
  double cx = 0.0;
  double cy = 0.0;
  double r = 1.0;

  Point center() const { return {cx, cy}; }
  friend bool operator==(const Disk&, const Disk&) = default;
};

struct CandidatePoint {
  Point at;
  std::vector<Vertex> coverers;  // sorted ids of disks containing `at`

  int depth() const { return static_cast<int>(coverers.size()); }
};

/// Partition of a vertex set into cliques. In geometric mode every clique
/// carries a witness point common to all of its disks.
struct CliquePartition {
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Point> witnesses;

  /// log2(size) + 1
  static double clique_weight(std::size_t size);
  double weight() const;
  std::size_t vertex_count() const;
};

bool disks_intersect(const Disk& a, const Disk& b);
bool disk_contains(const Disk& d, Point p);

/// Intersection points of the two boundary circles (0, 1 or 2 points).
std::vector<Point> circle_intersections(const Disk& a, const Disk& b);

/// Disk centers plus all pairwise boundary intersections, each annotated
/// with the disks covering it.
std::vector<CandidatePoint> candidate_points(std::span<const Disk> disks);

int ply(std::span<const Disk> disks);

/// Greedy cover by deepest residual candidate points.
CliquePartition clique_partition(std::span<const Disk> disks);

/// Intersection-graph edges between the given disks (by disk id).
std::vector<Edge> intersection_edges(std::span<const Disk> disks);

}  // namespace dh
