#include "diskhitter/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dh {

namespace {

double sq(double x) { return x * x; }

double dist2(Point a, Point b) { return sq(a.x - b.x) + sq(a.y - b.y); }

// Neighbor lists by position in `disks` (not by id).
std::vector<std::vector<int>> overlap_lists(std::span<const Disk> disks) {
  std::vector<std::vector<int>> out(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i)
    for (std::size_t j = i + 1; j < disks.size(); ++j)
      if (disks_intersect(disks[i], disks[j])) {
        out[i].push_back(static_cast<int>(j));
        out[j].push_back(static_cast<int>(i));
      }
  return out;
}

}  // namespace

double CliquePartition::clique_weight(std::size_t size) {
  return std::log2(static_cast<double>(size)) + 1.0;
}

double CliquePartition::weight() const {
  double w = 0.0;
  for (const auto& c : cliques) w += clique_weight(c.size());
  return w;
}

std::size_t CliquePartition::vertex_count() const {
  std::size_t n = 0;
  for (const auto& c : cliques) n += c.size();
  return n;
}

bool disks_intersect(const Disk& a, const Disk& b) {
  return dist2(a.center(), b.center()) <= sq(a.r + b.r) + kGeomEps;
}

bool disk_contains(const Disk& d, Point p) {
  return dist2(d.center(), p) <= sq(d.r) + kGeomEps;
}

std::vector<Point> circle_intersections(const Disk& a, const Disk& b) {
  const double d2 = dist2(a.center(), b.center());
  if (d2 <= 0.0) return {};
  if (d2 > sq(a.r + b.r) + kGeomEps) return {};
  if (d2 < sq(a.r - b.r) - kGeomEps) return {};
  const double d = std::sqrt(d2);
  const double along = (d2 + sq(a.r) - sq(b.r)) / (2.0 * d);
  const double h2 = sq(a.r) - sq(along);
  const double ux = (b.cx - a.cx) / d;
  const double uy = (b.cy - a.cy) / d;
  const Point base{a.cx + along * ux, a.cy + along * uy};
  if (h2 <= kGeomEps) return {base};
  const double h = std::sqrt(h2);
  return {Point{base.x - h * uy, base.y + h * ux}, Point{base.x + h * uy, base.y - h * ux}};
}

std::vector<CandidatePoint> candidate_points(std::span<const Disk> disks) {
  const auto nbrs = overlap_lists(disks);
  std::vector<CandidatePoint> out;

  auto covered_by = [&](Point p, int anchor, int other) {
    std::vector<Vertex> cov{disks[anchor].id};
    if (other >= 0) cov.push_back(disks[other].id);
    for (int j : nbrs[anchor]) {
      if (j == other) continue;
      if (disk_contains(disks[j], p)) cov.push_back(disks[j].id);
    }
    std::sort(cov.begin(), cov.end());
    return cov;
  };

  for (std::size_t i = 0; i < disks.size(); ++i) {
    const Point c = disks[i].center();
    out.push_back({c, covered_by(c, static_cast<int>(i), -1)});
  }
  for (std::size_t i = 0; i < disks.size(); ++i)
    for (int j : nbrs[i]) {
      if (j <= static_cast<int>(i)) continue;
      for (Point p : circle_intersections(disks[i], disks[j]))
        out.push_back({p, covered_by(p, static_cast<int>(i), j)});
    }
  return out;
}

int ply(std::span<const Disk> disks) {
  int best = 0;
  for (const auto& cp : candidate_points(disks)) best = std::max(best, cp.depth());
  return best;
}

CliquePartition clique_partition(std::span<const Disk> disks) {
  CliquePartition part;
  if (disks.empty()) return part;
  const auto points = candidate_points(disks);

  Vertex max_id = 0;
  for (const auto& d : disks) max_id = std::max(max_id, d.id);
  std::vector<char> taken(static_cast<std::size_t>(max_id) + 1, 0);
  std::size_t remaining = disks.size();

  while (remaining > 0) {
    std::size_t best = 0;
    int best_depth = -1;
    for (std::size_t i = 0; i < points.size(); ++i) {
      int depth = 0;
      for (Vertex v : points[i].coverers) depth += taken[v] ? 0 : 1;
      if (depth > best_depth) {
        best_depth = depth;
        best = i;
      }
    }
    std::vector<Vertex> clique;
    for (Vertex v : points[best].coverers)
      if (!taken[v]) {
        taken[v] = 1;
        clique.push_back(v);
      }
    remaining -= clique.size();
    part.cliques.push_back(std::move(clique));
    part.witnesses.push_back(points[best].at);
  }
  return part;
}

std::vector<Edge> intersection_edges(std::span<const Disk> disks) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < disks.size(); ++i)
    for (std::size_t j = i + 1; j < disks.size(); ++j)
      if (disks_intersect(disks[i], disks[j])) edges.emplace_back(disks[i].id, disks[j].id);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace dh
