#include "doctest.h"

#include <random>

#include "brute.hpp"
#include "diskhitter/oracle.hpp"
#include "diskhitter/pipeline.hpp"

using namespace dh;

namespace {

HittingGraph complete(int n) {
  HittingGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

HittingGraph cycle(int n) {
  HittingGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

HittingGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  HittingGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

constexpr Problem kAll[] = {Problem::Ths, Problem::Fvs, Problem::Oct};

}  // namespace

TEST_CASE("fixtures agree with the flat scan") {
  for (Problem p : {Problem::Ths, Problem::Fvs}) {
    CHECK(brute_force(p, complete(4), 10).optimum == 2);
    CHECK(brute_force_flat(p, complete(4), 10).optimum == 2);
  }
  CHECK(brute_force(Problem::Oct, cycle(5), 10).optimum == 1);
  CHECK(brute_force_flat(Problem::Oct, cycle(5), 10).optimum == 1);
  CHECK(brute_force(Problem::Fvs, HittingGraph(5), 3).optimum == 0);
  CHECK_FALSE(brute_force(Problem::Ths, complete(6), 2).optimum);
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(brute_force(Problem::Ths, HittingGraph(27), 1), TooLarge);
  CHECK_NOTHROW(brute_force(Problem::Ths, HittingGraph(26), 1));
  HittingGraph heavy(14);
  heavy.set_members(0, {0, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26});
  CHECK_THROWS_AS(brute_force(Problem::Fvs, heavy, 1), TooLarge);
}

TEST_CASE("pruned search, flat scan and the test reference agree") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 5 + trial % 8;
    auto g = random_graph(n, 0.3 + 0.05 * (trial % 4), rng);
    if (trial % 4 == 0) {
      const auto e = g.edges();
      if (!e.empty()) g.add_must_hit(e[rng() % e.size()]);
    }
    if (trial % 5 == 0) g.set_members(0, {0, n, n + 1});
    for (Problem p : kAll) {
      const auto fast = brute_force(p, g, 12);
      const auto flat = brute_force_flat(p, g, 12);
      REQUIRE(fast.optimum);
      CHECK(fast.optimum == flat.optimum);
      CHECK(*fast.optimum == brute::optimum(g, p));
      CHECK(static_cast<int>(fast.witness.size()) == *fast.optimum);
      CHECK(certify_solution(p, g, fast.witness, *fast.optimum));
      CHECK(fast.enumerated > 0);
    }
  }
}

TEST_CASE("feedback vertex set dominates the other two") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(8 + trial % 10, 0.3, rng);
    const int fvs = *brute_force(Problem::Fvs, g, 30).optimum;
    CHECK(fvs >= *brute_force(Problem::Ths, g, 30).optimum);
    CHECK(fvs >= *brute_force(Problem::Oct, g, 30).optimum);
  }
}

TEST_CASE("random instances") {
  const auto one = random_instance(1, 1, 5);
  REQUIRE(one.size() == 1);
  CHECK(ply(one) == 1);

  const auto sparse = random_instance(10, 1, 3);
  CHECK(intersection_edges(sparse).empty());

  CHECK(random_instance(30, 3, 42) == random_instance(30, 3, 42));
  CHECK_FALSE(random_instance(30, 3, 42) == random_instance(30, 3, 43));

  for (int target = 1; target <= 4; ++target)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto d = random_instance(40, target, seed);
      CHECK(static_cast<int>(d.size()) == 40);
      CHECK(ply(d) <= target);
      for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i].id == static_cast<Vertex>(i));
        CHECK(d[i].r >= 0.02 - 1e-12);
        CHECK(d[i].r <= 0.3 + 1e-12);
      }
    }

  CHECK_THROWS_AS(random_instance(0, 2, 1), InvalidArgument);
  CHECK_THROWS_AS(random_instance(800, 1, 1), GenerationStalled);
}
