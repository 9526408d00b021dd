#include "doctest.h"

#include <cmath>
#include <random>

#include "diskhitter/decomposition.hpp"

using namespace dh;

namespace {

HittingGraph disk_graph(const std::vector<Disk>& disks) {
  auto edges = intersection_edges(disks);
  return HittingGraph::from_edges(static_cast<int>(disks.size()), edges);
}

std::vector<Disk> scattered(int n, double rmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(0.0, 1.0), rad(0.01, rmax);
  std::vector<Disk> d;
  for (int i = 0; i < n; ++i) d.push_back({i, pos(rng), pos(rng), rad(rng)});
  return d;
}

HittingGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  HittingGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Hand-rolled decomposition over explicit bags, one unit per vertex.
TreeDecomposition from_bags(int n, const std::vector<std::vector<Vertex>>& bags, const std::vector<int>& parent) {
  TreeDecomposition td;
  for (Vertex v = 0; v < n; ++v) td.units.push_back({v});
  td.parent = parent;
  for (const auto& b : bags) td.bag_units.push_back(std::vector<int>(b.begin(), b.end()));
  for (std::size_t t = 0; t < parent.size(); ++t)
    if (parent[t] < 0) td.root = static_cast<int>(t);
  return td;
}

}  // namespace

TEST_CASE("disconnected input needs no separator") {
  std::vector<Disk> d;
  for (int i = 0; i < 10; ++i) d.push_back({i, 0.0, 0.0, 0.5 + 0.01 * i});
  for (int i = 10; i < 20; ++i) d.push_back({i, 10.0, 0.0, 0.5 + 0.01 * i});
  auto sep = balanced_separator(disk_graph(d), d);
  CHECK(sep.vertices.empty());
}

TEST_CASE("a line of disks splits at one middle disk") {
  std::vector<Disk> d;
  for (int i = 0; i < 30; ++i) d.push_back({i, 1.8 * i, 0.0, 1.0});
  auto g = disk_graph(d);
  auto sep = balanced_separator(g, d);
  REQUIRE(sep.vertices.size() == 1);
  CHECK(sep.partition.weight() <= 2.0);
  const Vertex mid = sep.vertices[0];
  CHECK(std::max(mid, 29 - mid) <= 20);
}

TEST_CASE("geometric decomposition basics") {
  std::vector<Disk> one{{0, 0.0, 0.0, 1.0}};
  auto td = build_td(disk_graph(one), one);
  CHECK(td.node_count() == 1);
  CHECK(td.bag(0) == std::vector<Vertex>{0});

  std::vector<Disk> tris;
  for (int t = 0; t < 8; ++t)
    for (int i = 0; i < 3; ++i) tris.push_back({3 * t + i, 10.0 * t + 0.1 * i, 0.0, 1.0});
  auto g = disk_graph(tris);
  auto tt = build_td(g, tris);
  CHECK(validate_td(g, tt));
  CHECK(td_width(tt) + 1 <= 3);
}

TEST_CASE("geometric decompositions are valid and balanced") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto d = scattered(60 + 10 * static_cast<int>(seed), 0.06, seed);
    auto g = disk_graph(d);
    TdTrace trace;
    auto td = build_td(g, d, {}, &trace);
    CHECK_MESSAGE(validate_td(g, td), td_violation(g, td));
    for (auto [parent, child] : trace.splits) CHECK(child <= 2.0 / 3.0 * parent + 1e-9);
    for (int t = 0; t < td.node_count(); ++t)
      for (int u : td.bag_units[t]) {
        const auto& c = td.units[u];
        for (Vertex a : c)
          for (Vertex b : c)
            if (a != b) CHECK(g.adjacent(a, b));
      }
  }
}

TEST_CASE("robust decomposition examples") {
  HittingGraph tree(7);
  for (int i = 1; i < 7; ++i) tree.add_edge((i - 1) / 2, i);
  auto t = robust_td(tree);
  CHECK(validate_td(tree, t));
  CHECK(td_width(t) == 1);

  HittingGraph c6(6);
  for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  auto tc = robust_td(c6);
  CHECK(validate_td(c6, tc));
  CHECK(td_width(tc) == 2);

  HittingGraph k5(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
  auto tk = robust_td(k5);
  CHECK(validate_td(k5, tk));
  CHECK(td_width(tk) == 4);
  for (int n = 0; n < tk.node_count(); ++n) CHECK(tk.bag_units[n].size() == 1);
}

TEST_CASE("robust decompositions of random graphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(15 + trial % 10, 0.2, rng);
    auto td = robust_td(g);
    CHECK_MESSAGE(validate_td(g, td), td_violation(g, td));
  }
}

TEST_CASE("validation rejects broken decompositions") {
  HittingGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto ok = from_bags(3, {{0, 1}, {1, 2}}, {-1, 0});
  CHECK(validate_td(g, ok));
  auto missing_edge = from_bags(3, {{0}, {1, 2}}, {-1, 0});
  CHECK_FALSE(validate_td(g, missing_edge));
  HittingGraph p(3);
  p.add_edge(0, 1);
  auto split = from_bags(3, {{0, 1}, {2}, {0}}, {-1, 0, 1});
  CHECK_FALSE(validate_td(p, split));
}

TEST_CASE("weighted width") {
  TreeDecomposition k;
  k.units = {{0, 1, 2, 3, 4}};
  k.parent = {-1};
  k.bag_units = {{0}};
  k.root = 0;
  CHECK(weighted_width(k) == doctest::Approx(std::log2(5.0) + 1.0));

  auto singles = from_bags(4, {{0, 1, 2, 3}, {2, 3}}, {-1, 0});
  CHECK(weighted_width(singles) == doctest::Approx(4.0));

  TreeDecomposition mixed;
  mixed.units = {{0, 1}, {2}, {3, 4, 5, 6}, {7, 8, 9}};
  mixed.parent = {-1, 0};
  mixed.bag_units = {{0, 1, 2}, {2, 3}};
  mixed.root = 0;
  const double first = 2.0 + 1.0 + 3.0;
  const double second = 3.0 + std::log2(3.0) + 1.0;
  CHECK(weighted_width(mixed) == doctest::Approx(std::max(first, second)));
}

TEST_CASE("nice conversion of a single bag") {
  TreeDecomposition td;
  td.units = {{0}, {1}};
  td.parent = {-1};
  td.bag_units = {{0, 1}};
  td.root = 0;
  auto nice = make_nice(td);
  CHECK(nice.check().empty());
  std::vector<NiceKind> kinds;
  for (int t : nice.postorder()) kinds.push_back(nice.nodes[t].kind);
  CHECK(kinds == std::vector<NiceKind>{NiceKind::Leaf, NiceKind::Introduce, NiceKind::Introduce, NiceKind::Forget,
                                       NiceKind::Forget});
  auto order = nice.postorder();
  CHECK(nice.nodes[order[1]].unit == 0);
  CHECK(nice.nodes[order[2]].unit == 1);
  CHECK(nice.nodes[order[3]].unit == 1);
  CHECK(nice.nodes[order[4]].unit == 0);
}

TEST_CASE("nice conversion keeps a shared clique across a transition") {
  HittingGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto td = from_bags(3, {{0, 1}, {1, 2}}, {-1, 0});
  auto nice = make_nice(td);
  CHECK(nice.check().empty());
  CHECK(validate_td(g, nice.flatten()));
  int forgets_of_shared = 0;
  for (const auto& nd : nice.nodes)
    if (nd.kind == NiceKind::Forget && nd.unit == 1) ++forgets_of_shared;
  CHECK(forgets_of_shared == 1);
}

TEST_CASE("nice conversion property") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    TreeDecomposition td;
    HittingGraph g;
    if (trial % 2 == 0) {
      g = random_graph(12 + trial % 9, 0.25, rng);
      td = robust_td(g);
    } else {
      auto d = scattered(30 + trial % 40, 0.12, static_cast<std::uint64_t>(trial));
      g = disk_graph(d);
      td = build_td(g, d);
    }
    auto nice = make_nice(td);
    CHECK(nice.check().empty());
    auto flat = nice.flatten();
    CHECK(validate_td(g, flat));
    CHECK(weighted_width(flat) <= weighted_width(td) + 1e-9);
    for (std::size_t t = 0; t < nice.nodes.size(); ++t)
      if (nice.nodes[t].kind == NiceKind::Join) CHECK(nice.nodes[t].children.size() == 2);
  }
}

TEST_CASE("PACE export") {
  HittingGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto td = from_bags(3, {{0, 1}, {1, 2}}, {-1, 0});
  CHECK(to_pace(td, 3) == "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
}
