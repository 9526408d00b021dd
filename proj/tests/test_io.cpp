#include "doctest.h"

#include "diskhitter/instance_io.hpp"
#include "diskhitter/oracle.hpp"

using namespace dh;

namespace {

void check_same(const SolveInput& a, const SolveInput& b) {
  CHECK(a.graph.capacity() == b.graph.capacity());
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.graph.must_hit_edges() == b.graph.must_hit_edges());
  for (Vertex v = 0; v < a.graph.capacity(); ++v) CHECK(a.graph.members(v) == b.graph.members(v));
  REQUIRE(static_cast<bool>(a.disks) == static_cast<bool>(b.disks));
  if (a.disks) CHECK(*a.disks == *b.disks);
}

}  // namespace

TEST_CASE("geometric files") {
  const auto in = parse_instance(R"({"disks": [{"id": 1, "x": 0.5, "y": 0.5, "r": 0.1},
                                               {"id": 0, "x": 0.4, "y": 0.5, "r": 0.1},
                                               {"id": 2, "x": 0.9, "y": 0.9, "r": 0.01}]})");
  REQUIRE(in.disks);
  CHECK(in.disks->size() == 3);
  CHECK((*in.disks)[0].cx == 0.4);
  CHECK(in.graph.edges() == std::vector<Edge>{Edge{0, 1}});
}

TEST_CASE("graph files with constraints and multiplicities") {
  const auto in = parse_instance(R"({"graph": {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
                                     "must_hit": [[0, 1]], "multiplicities": [1, 3, 1]})");
  CHECK_FALSE(in.disks);
  CHECK(in.graph.edge_count() == 3);
  CHECK(in.graph.must_hit_edges() == std::vector<Edge>{Edge{0, 1}});
  CHECK(in.graph.members(1) == std::vector<Vertex>{1, 3, 4});
  CHECK(in.graph.multiplicity(0) == 1);
}

TEST_CASE("malformed files are rejected") {
  const char* bad[] = {
      "",
      "not json",
      "[]",
      "{}",
      R"({"graph": {"n": 2, "edges": [[0, 2]]}})",
      R"({"graph": {"n": 2, "edges": [[0, 0]]}})",
      R"({"graph": {"n": -1}})",
      R"({"graph": {"n": 2, "edges": [[0, 1]]}, "must_hit": [[0]]})",
      R"({"graph": {"n": 3, "edges": [[0, 1]]}, "must_hit": [[1, 2]]})",
      R"({"graph": {"n": 2}, "multiplicities": [1]})",
      R"({"graph": {"n": 2}, "multiplicities": [1, 0]})",
      R"({"disks": [{"id": 0, "x": 0, "y": 0}]})",
      R"({"disks": [{"id": 0, "x": 0, "y": 0, "r": -1}]})",
      R"({"disks": [{"id": 0, "x": 0, "y": 0, "r": 1}, {"id": 0, "x": 1, "y": 0, "r": 1}]})",
      R"({"disks": [{"id": 3, "x": 0, "y": 0, "r": 1}]})",
      R"({"disks": [], "graph": {"n": 0}})",
  };
  for (const char* text : bad) CHECK_THROWS_AS(parse_instance(text), ParseError);
}

TEST_CASE("round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto in = from_disks(random_instance(15, 3, seed));
    if (seed % 2) {
      const auto e = in.graph.edges();
      if (!e.empty()) in.graph.add_must_hit(e.front());
      in.graph.set_members(2, {2, 15, 16});
    }
    const auto text = dump_instance(in);
    const auto back = parse_instance(text);
    check_same(in, back);
    CHECK(dump_instance(back) == text);

    SolveInput robust;
    robust.graph = in.graph;
    const auto rtext = dump_instance(robust);
    const auto rback = parse_instance(rtext);
    check_same(robust, rback);
    CHECK(dump_instance(rback) == rtext);
  }
}

TEST_CASE("solution files") {
  CHECK(parse_solution("[3, 1]") == std::vector<Vertex>{3, 1});
  CHECK(parse_solution(R"({"solution": [0]})") == std::vector<Vertex>{0});
  CHECK(parse_solution("[]").empty());
  CHECK_THROWS_AS(parse_solution("{\"x\": 1}"), ParseError);
  CHECK_THROWS_AS(parse_solution("[1.5]"), ParseError);
}
