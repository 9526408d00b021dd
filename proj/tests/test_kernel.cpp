#include "doctest.h"

#include <algorithm>
#include <random>

#include "brute.hpp"
#include "diskhitter/kernel.hpp"

using namespace dh;

namespace {

HittingGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  HittingGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

HittingInstance instance(HittingGraph g, int k) {
  HittingInstance inst;
  inst.graph = std::move(g);
  inst.k = k;
  return inst;
}

bool yes(const HittingInstance& inst) {
  return inst.k >= 0 && brute::optimum(inst.graph, Problem::Ths, inst.k) <= inst.k;
}

// Direct evaluation of the definitions, independent of the library.
bool shares_two(const Triangle& a, const Triangle& b) {
  int common = 0;
  for (Vertex x : a) common += std::count(b.begin(), b.end(), x) ? 1 : 0;
  return common >= 2;
}

// Sparse random graph plus "books": several apexes sharing one base edge,
// which is where crowns come from.
HittingGraph random_with_books(int base, int books, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.2);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < base; ++i)
    for (int j = i + 1; j < base; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  int n = base;
  for (int b = 0; b < books; ++b) {
    const Vertex u = static_cast<Vertex>(rng() % base);
    Vertex v = static_cast<Vertex>(rng() % base);
    if (u == v) v = (v + 1) % base;
    edges.emplace_back(u, v);
    const int pages = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < pages; ++i, ++n) {
      edges.emplace_back(u, n);
      edges.emplace_back(v, n);
    }
  }
  HittingGraph g(n);
  for (auto [a, b] : edges)
    if (!g.adjacent(a, b)) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("core fixtures") {
  HittingGraph path(4);
  for (int i = 0; i + 1 < 4; ++i) path.add_edge(i, i + 1);
  CHECK(compute_core(path).triangles.empty());

  HittingGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  const auto core = compute_core(tri);
  REQUIRE(core.triangles.size() == 1);
  CHECK(shares_two(core.triangles[0], Triangle{0, 1, 2}));

  CHECK(verify_core(HittingGraph(0), Core{}));
  HittingGraph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK(verify_core(k4, Core{{Triangle{0, 1, 2}}}));

  HittingGraph two(6);
  for (int base : {0, 3}) {
    two.add_edge(base, base + 1);
    two.add_edge(base + 1, base + 2);
    two.add_edge(base, base + 2);
  }
  CHECK_FALSE(verify_core(two, Core{{Triangle{0, 1, 2}}}));
}

TEST_CASE("core property on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(10 + trial % 25, 0.15 + 0.05 * (trial % 4), rng);
    if (trial % 3 == 0) {
      const auto e = g.edges();
      if (!e.empty()) g.add_marked(e[rng() % e.size()]);
    }
    const auto core = compute_core(g);
    bool ok = true;
    for (const auto& t : all_triangles(g))
      ok = ok && std::any_of(core.triangles.begin(), core.triangles.end(),
                             [&](const Triangle& c) { return shares_two(t, c); });
    CHECK(ok);
    CHECK(verify_core(g, core) == ok);
  }
}

TEST_CASE("I and H follow their definitions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(12 + trial % 12, 0.25, rng);
    const auto core = compute_core(g);
    const auto ih = compute_IH(g, core);
    const auto cv = core.vertices();
    const auto tris = all_triangles(g);
    std::vector<Vertex> want_i;
    for (Vertex v : g.vertices()) {
      const bool in_tri = std::any_of(tris.begin(), tris.end(), [&](const Triangle& t) {
        return std::count(t.begin(), t.end(), v) > 0;
      });
      const bool in_core = std::any_of(core.triangles.begin(), core.triangles.end(), [&](const Triangle& t) {
        return std::count(t.begin(), t.end(), v) > 0;
      });
      if (in_tri && !in_core) want_i.push_back(v);
    }
    CHECK(ih.I == want_i);
    std::vector<Edge> want_h;
    for (const Edge& e : g.edges())
      for (Vertex x : want_i)
        if (g.adjacent(x, e.u) && g.adjacent(x, e.v)) {
          want_h.push_back(e);
          break;
        }
    CHECK(ih.H == want_h);
    for (Vertex v : ih.I) CHECK_FALSE(std::binary_search(cv.begin(), cv.end(), v));
  }
}

TEST_CASE("constrained vertices never enter I") {
  HittingGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  g.add_must_hit(Edge{0, 1});
  const auto ih = compute_IH(g, compute_core(g));
  for (Vertex v : ih.I) CHECK_FALSE(g.constrained(v));
}

TEST_CASE("crown fixtures") {
  IHSets small{{0}, {Edge{1, 2}, Edge{3, 4}}};
  CHECK_FALSE(find_crown(HittingGraph(5), small));

  // Two apexes on one base edge.
  HittingGraph g(4);
  g.add_edge(0, 1);
  for (Vertex x : {2, 3}) {
    g.add_edge(x, 0);
    g.add_edge(x, 1);
  }
  IHSets ih{{2, 3}, {Edge{0, 1}}};
  const auto crown = find_crown(g, ih);
  REQUIRE(crown);
  CHECK(crown->I.size() >= 1);
  CHECK(crown->H == std::vector<Edge>{Edge{0, 1}});
  CHECK(crown->M.size() == 1);
  CHECK(crown_violation(g, *crown).empty());

  Crown bad{{2, 3}, {Edge{0, 1}}, {}};
  CHECK_FALSE(crown_violation(g, bad).empty());
}

TEST_CASE("applying a crown preserves the answer") {
  HittingGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  Crown c{{2}, {Edge{0, 1}}, {{2, Edge{0, 1}}}};
  CHECK(crown_violation(g, c).empty());
  for (int k = 0; k < 3; ++k) {
    auto inst = instance(g, k);
    const auto reduced = apply_crown(inst, c);
    CHECK_FALSE(reduced.graph.alive(2));
    CHECK(reduced.graph.must_hit_edges().size() == 1);
    CHECK(reduced.k == k);
    CHECK(yes(reduced) == yes(inst));
  }
  auto inst = instance(g, 1);
  CHECK(apply_crown(inst, Crown{}).graph.alive_count() == 3);
}

TEST_CASE("kernel fixtures") {
  HittingGraph path(5);
  for (int i = 0; i + 1 < 5; ++i) path.add_edge(i, i + 1);
  CHECK(kernelize_ths(instance(path, 0)).graph.alive_count() == 0);

  HittingGraph six(18);
  for (int b = 0; b < 18; b += 3) {
    six.add_edge(b, b + 1);
    six.add_edge(b + 1, b + 2);
    six.add_edge(b, b + 2);
  }
  for (int k : {5, 6}) {
    auto inst = instance(six, k);
    CHECK(yes(kernelize_ths(inst)) == yes(inst));
  }
}

TEST_CASE("kernel is sound and every crown is valid") {
  std::mt19937_64 rng(9);
  int crowns = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto g = trial % 2 ? random_graph(10 + trial % 16, 0.1 + 0.05 * (trial % 4), rng)
                       : random_with_books(8 + trial % 5, 1 + trial % 3, rng);
    if (g.capacity() > 25) continue;
    const int n = g.capacity();
    const int k = trial % 7;
    auto inst = instance(g, k);
    KernelStats stats;
    int last = g.alive_count();
    const auto kernel = kernelize_ths(inst, &stats, [&](const HittingGraph& at, const Crown& c) {
      ++crowns;
      CHECK(crown_violation(at, c).empty());
      CHECK(at.alive_count() <= last);
      last = at.alive_count() - static_cast<int>(c.I.size());
    });
    CHECK(kernel.k == k);
    CHECK(stats.rounds <= n * n + 1);
    for (Vertex v : kernel.graph.vertices()) CHECK((kernel.graph.constrained(v) || in_some_triangle(kernel.graph, v)));
    CHECK(yes(kernel) == yes(inst));
  }
  CHECK(crowns > 0);
}

TEST_CASE("weighted graphs are not crown-reduced") {
  HittingGraph g(4);
  g.add_edge(0, 1);
  for (Vertex x : {2, 3}) {
    g.add_edge(x, 0);
    g.add_edge(x, 1);
  }
  g.set_members(2, {2, 3});
  g.remove_vertex(3);
  KernelStats stats;
  kernelize_ths(instance(g, 1), &stats);
  CHECK(stats.crowns == 0);
}
