#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "diskhitter/types.hpp"

namespace dh {

/// Graph shared by all three hitting problems. Vertex ids are stable for the
/// lifetime of an instance: deleting a vertex only clears its `alive` flag.
///
/// Two kinds of "at least one endpoint must be deleted" constraints are kept:
/// marked edges come from branching and form a matching; must-hit edges come
/// from crown reductions (or input files) and may share endpoints.
///
/// A vertex may stand for several false twins of the input graph; `members`
/// lists the original ids it represents and `multiplicity` is their count.
class HittingGraph {
 public:
  HittingGraph() = default;
  explicit HittingGraph(int n);
  static HittingGraph from_edges(int n, std::span<const Edge> edges);

  int capacity() const { return static_cast<int>(alive_.size()); }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  int alive_count() const { return alive_count_; }
  std::vector<Vertex> vertices() const;

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return matrix_[index(u, v)] != 0; }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  int multiplicity(Vertex v) const;
  std::vector<Vertex> members(Vertex v) const;
  void set_members(Vertex v, std::vector<Vertex> members);

  const std::vector<Edge>& marked_edges() const { return marked_; }
  const std::vector<Edge>& must_hit_edges() const { return must_hit_; }
  /// Marked and must-hit edges together.
  std::vector<Edge> constraint_edges() const;
  bool constrained(Vertex v) const;

  void add_edge(Vertex u, Vertex v);
  /// Deletes `v`. Constraint edges incident to `v` are dropped: they are
  /// satisfied when `v` goes into the solution, and callers never discard
  /// a constrained vertex any other way.
  void remove_vertex(Vertex v);
  void remove_vertices(std::span<const Vertex> vs);
  /// Requires an existing edge whose endpoints are untouched by other marks.
  void add_marked(Edge e);
  void add_must_hit(Edge e);

  /// Copy with `vs` removed.
  HittingGraph without(std::span<const Vertex> vs) const;

  /// Checks symmetry, constraint validity and the marked-edge matching
  /// property. Returns an empty string when consistent.
  std::string check_invariants() const;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * alive_.size() + static_cast<std::size_t>(v);
  }

  std::vector<char> alive_;
  int alive_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> matrix_;
  std::vector<std::vector<Vertex>> members_;  // empty means {v}
  std::vector<Edge> marked_;
  std::vector<Edge> must_hit_;
};

using Triangle = std::array<Vertex, 3>;

/// Lexicographically smallest triangle on alive vertices.
std::optional<Triangle> find_triangle(const HittingGraph& g);
std::vector<Triangle> all_triangles(const HittingGraph& g);
bool in_some_triangle(const HittingGraph& g, Vertex v);

/// Repeatedly takes a triangle and deletes all three vertices.
std::vector<Vertex> greedy_ths_3approx(const HittingGraph& g);

/// Local-ratio 2-approximation (semidisjoint cycles + degree weighting,
/// followed by reverse deletion).
std::vector<Vertex> fvs_2approx(const HittingGraph& g);

/// Greedy inclusion-maximal matching of G[vertices], scanning edges in
/// lexicographic order.
std::vector<Edge> maximal_matching(const HittingGraph& g, std::span<const Vertex> vertices);

/// Bipartite graph on left ids 0..left-1 and right ids 0..right-1.
struct Bipartite {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;  // left -> right

  Bipartite(int l, int r) : left(l), right(r), adj(static_cast<std::size_t>(l)) {}
  void connect(int l, int r) { adj[l].push_back(r); }
};

/// match_left[l] = matched right vertex or -1.
struct BipartiteMatching {
  std::vector<int> match_left;
  std::vector<int> match_right;
  int size() const;
};

BipartiteMatching hopcroft_karp(const Bipartite& b);

struct KonigCover {
  std::vector<int> left;   // cover vertices on the left side
  std::vector<int> right;  // cover vertices on the right side
  std::size_t size() const { return left.size() + right.size(); }
};

/// Minimum vertex cover from a maximum matching (alternating-path
/// reachability from unmatched left vertices).
KonigCover konig_vertex_cover(const Bipartite& b, const BipartiteMatching& m);

/// Classes of alive vertices with identical open neighborhoods, ordered by
/// smallest member.
std::vector<std::vector<Vertex>> false_twin_classes(const HittingGraph& g);

/// Removes vertices of degree < 2 and vertices with independent
/// neighborhoods until a fixed point. Constrained vertices are kept.
HittingGraph clean_for_ths(const HittingGraph& g);

/// Removes vertices on no cycle (multiplicity-weighted degree <= 1) and
/// collapses false-twin classes: one representative for FVS, two for OCT.
/// Iterates to a fixed point. Constrained vertices are kept and never merged.
HittingGraph clean_for_fvs_oct(const HittingGraph& g, Problem problem);

/// Explicit graph over member ids: every vertex is replaced by its members,
/// which become pairwise non-adjacent copies; constraint edges expand to all
/// member pairs (as must-hit edges).
HittingGraph expand_members(const HittingGraph& g);

bool is_triangle_free(const HittingGraph& g, std::span<const Vertex> removed);
bool is_forest(const HittingGraph& g, std::span<const Vertex> removed);
bool is_bipartite(const HittingGraph& g, std::span<const Vertex> removed);

}  // namespace dh
