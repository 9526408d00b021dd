#include "doctest.h"

#include <algorithm>
#include <random>

#include "brute.hpp"
#include "diskhitter/branching.hpp"

using namespace dh;

namespace {

HittingInstance robust(HittingGraph g, int k) {
  HittingInstance inst;
  inst.graph = std::move(g);
  inst.k = k;
  return inst;
}

HittingInstance geometric(std::vector<Disk> disks, int k) {
  HittingInstance inst;
  const auto edges = intersection_edges(disks);
  inst.graph = HittingGraph::from_edges(static_cast<int>(disks.size()), edges);
  inst.k = k;
  inst.mode = Mode::Geometric;
  inst.disks = std::make_shared<const std::vector<Disk>>(std::move(disks));
  return inst;
}

std::vector<Disk> random_disks(int n, double rmax, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.0, 1.0), rad(0.05, rmax);
  std::vector<Disk> out;
  for (int i = 0; i < n; ++i) out.push_back({i, pos(rng), pos(rng), rad(rng)});
  return out;
}

HittingGraph complete(int n) {
  HittingGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

bool yes(const HittingInstance& inst, Problem p = Problem::Ths) {
  return inst.k >= 0 && brute::optimum(inst.graph, p, inst.k) <= inst.k;
}

void check_emitted(const HittingInstance& parent, const HittingInstance& child) {
  CHECK(child.graph.check_invariants().empty());
  CHECK(child.k + static_cast<int>(child.forced.size()) == parent.k + static_cast<int>(parent.forced.size()));
  for (Vertex v : child.forced) CHECK_FALSE(child.graph.alive(v));
}

}  // namespace

TEST_CASE("clique finder") {
  std::vector<Disk> same;
  for (int i = 0; i < 6; ++i) same.push_back({i, 0.5, 0.5, 0.1});
  auto c = find_clique_geq(geometric(same, 3), 4);
  REQUIRE(c);
  CHECK(c->size() == 6);

  HittingGraph c6(6);
  for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  CHECK_FALSE(find_clique_geq(robust(c6, 2), 3));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = geometric(random_disks(30, 0.3, rng), 5);
    auto found = find_clique_geq(inst, 5);
    if (!found) continue;
    CHECK(found->size() >= 5);
    for (std::size_t i = 0; i < found->size(); ++i)
      for (std::size_t j = i + 1; j < found->size(); ++j) CHECK(inst.graph.adjacent((*found)[i], (*found)[j]));
  }
}

TEST_CASE("clique branching on small fixtures") {
  // Only the 10 two-survivor choices fit the budget of 3.
  auto kids = branch_cliques(robust(complete(5), 3), 4);
  CHECK(kids.size() == 10);
  for (const auto& k : kids) {
    CHECK(k.k == 0);
    CHECK(k.graph.alive_count() == 2);
  }
  CHECK(branch_cliques(robust(complete(5), 5), 4).size() == 16);

  HittingGraph path(4);
  for (int i = 0; i + 1 < 4; ++i) path.add_edge(i, i + 1);
  auto same = branch_cliques(robust(path, 2), 3);
  REQUIRE(same.size() == 1);
  CHECK(same[0].graph.alive_count() == 4);
  CHECK(same[0].k == 2);

  CHECK(branch_cliques(robust(complete(3), 0), 3).empty());
}

TEST_CASE("children are explored with the smallest budget first") {
  auto kids = branch_cliques(robust(complete(5), 5), 4);
  for (std::size_t i = 1; i < kids.size(); ++i) CHECK(kids[i - 1].k <= kids[i].k);
}

TEST_CASE("matching branching on a triangle fan") {
  const int p = 3;
  HittingGraph g(1 + 2 * p);
  for (int i = 0; i < p; ++i) {
    g.add_edge(0, 1 + 2 * i);
    g.add_edge(0, 2 + 2 * i);
    g.add_edge(1 + 2 * i, 2 + 2 * i);
  }
  auto kids = branch_matchings(robust(g, 3), p);
  REQUIRE(kids.size() == 2);
  CHECK_FALSE(kids[0].graph.alive(0));
  CHECK(kids[0].k == 2);
  CHECK(kids[1].graph.marked_edges().size() == static_cast<std::size_t>(p));
  CHECK(kids[1].k == 3);

  HittingGraph small(4);
  small.add_edge(0, 1);
  small.add_edge(1, 2);
  CHECK(branch_matchings(robust(small, 1), 3).size() == 1);
}

TEST_CASE("two-step post-conditions") {
  HittingGraph c6(6);
  for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  auto one = run_two_step(robust(c6, 1), 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].graph.edges() == c6.edges());

  std::vector<Disk> two;
  for (int i = 0; i < 4; ++i) two.push_back({i, 0.2, 0.2, 0.05});
  for (int i = 4; i < 8; ++i) two.push_back({i, 0.8, 0.8, 0.05});
  auto inst = geometric(two, 4);
  const auto out = run_two_step(inst, 4);
  CHECK_FALSE(out.empty());
  for (const auto& x : out) {
    CHECK(ply(x.alive_disks()) < 4);
    check_emitted(inst, x);
  }
}

TEST_CASE("sink can stop the stream") {
  int seen = 0;
  const bool finished = run_two_step(robust(complete(6), 6), 3, [&](HittingInstance&&) { return ++seen < 3; });
  CHECK_FALSE(finished);
  CHECK(seen == 3);
}

TEST_CASE("two-step branching is complete and sound") {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.35);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 8 + trial % 11;
    const int k = trial % 6;
    HittingInstance inst;
    if (trial % 2) {
      inst = geometric(random_disks(n, 0.25, rng), k);
    } else {
      HittingGraph g(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (coin(rng)) g.add_edge(i, j);
      inst = robust(std::move(g), k);
    }
    for (int p : {3, 4}) {
      bool any = false;
      for (const auto& x : run_two_step(inst, p)) {
        check_emitted(inst, x);
        const auto sol = brute::solution(x.graph, Problem::Ths, std::max(x.k, 0));
        if (x.k < 0 || !sol) continue;
        any = true;
        // A solution of the child plus its forced set solves the parent.
        auto all = *sol;
        all.insert(all.end(), x.forced.begin(), x.forced.end());
        CHECK(static_cast<int>(all.size()) <= inst.k);
        CHECK(brute::certifies(inst.graph, Problem::Ths, all));
      }
      CHECK(any == yes(inst));
    }
  }
}

TEST_CASE("larger threshold emits fewer instances overall") {
  // Budget large enough that pruning does not dominate the counts.
  std::mt19937_64 rng(13);
  std::size_t count[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = geometric(random_disks(16, 0.3, rng), 6);
    for (int p = 3; p <= 6; ++p) count[p - 3] += run_two_step(inst, p).size();
  }
  for (int i = 1; i < 4; ++i) CHECK(count[i] <= count[i - 1]);
}
