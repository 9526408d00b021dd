#include "diskhitter/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dh {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

Vertex vertex_id(const json& j, int n, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + ": vertex id must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || v >= n) fail(std::string(what) + ": vertex id " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

Edge edge_of(const json& j, int n, const char* what) {
  if (!j.is_array() || j.size() != 2) fail(std::string(what) + ": expected [u, v]");
  const Vertex u = vertex_id(j[0], n, what);
  const Vertex v = vertex_id(j[1], n, what);
  if (u == v) fail(std::string(what) + ": self-loop");
  return Edge(u, v);
}

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) fail(std::string("disk field '") + key + "' must be a number");
  return j[key].get<double>();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

SolveInput from_disks(std::vector<Disk> disks) {
  SolveInput in;
  in.graph = HittingGraph::from_edges(static_cast<int>(disks.size()), intersection_edges(disks));
  in.disks = std::make_shared<const std::vector<Disk>>(std::move(disks));
  return in;
}

SolveInput parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("instance must be a JSON object");
  const bool has_disks = doc.contains("disks");
  const bool has_graph = doc.contains("graph");
  if (has_disks == has_graph) fail("instance needs exactly one of 'disks' or 'graph'");

  SolveInput in;
  int n = 0;
  if (has_disks) {
    const json& arr = doc["disks"];
    if (!arr.is_array()) fail("'disks' must be an array");
    n = static_cast<int>(arr.size());
    std::vector<Disk> disks(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const json& d : arr) {
      if (!d.is_object() || !d.contains("id")) fail("disk entries need an 'id'");
      const Vertex id = vertex_id(d["id"], n, "disk");
      if (seen[id]) fail("duplicate disk id " + std::to_string(id));
      seen[id] = 1;
      disks[id] = {id, number(d, "x"), number(d, "y"), number(d, "r")};
      if (!(disks[id].r > 0.0)) fail("disk radius must be positive");
    }
    in = from_disks(std::move(disks));
  } else {
    const json& g = doc["graph"];
    if (!g.is_object() || !g.contains("n") || !g["n"].is_number_integer()) fail("'graph' needs an integer 'n'");
    const auto nn = g["n"].get<long long>();
    if (nn < 0 || nn > 1000000) fail("'n' out of range");
    n = static_cast<int>(nn);
    in.graph = HittingGraph(n);
    if (g.contains("edges")) {
      if (!g["edges"].is_array()) fail("'edges' must be an array");
      for (const json& e : g["edges"]) {
        const Edge ed = edge_of(e, n, "edge");
        in.graph.add_edge(ed.u, ed.v);
      }
    }
  }
  if (doc.contains("must_hit")) {
    if (!doc["must_hit"].is_array()) fail("'must_hit' must be an array");
    for (const json& e : doc["must_hit"]) {
      const Edge ed = edge_of(e, n, "must_hit");
      if (!in.graph.adjacent(ed.u, ed.v)) fail("must_hit pair is not an edge of the graph");
      in.graph.add_must_hit(ed);
    }
  }
  if (doc.contains("multiplicities")) {
    const json& m = doc["multiplicities"];
    if (!m.is_array() || static_cast<int>(m.size()) != n) fail("'multiplicities' needs one entry per vertex");
    Vertex next = n;
    for (int v = 0; v < n; ++v) {
      if (!m[v].is_number_integer() || m[v].get<long long>() < 1 || m[v].get<long long>() > 1000)
        fail("multiplicities must be integers in [1, 1000]");
      const int count = m[v].get<int>();
      std::vector<Vertex> members{v};
      for (int c = 1; c < count; ++c) members.push_back(next++);
      in.graph.set_members(v, std::move(members));
    }
  }
  return in;
}

std::string dump_instance(const SolveInput& in) {
  json doc = json::object();
  const HittingGraph& g = in.graph;
  const int n = g.capacity();
  if (in.disks) {
    json arr = json::array();
    for (const Disk& d : *in.disks) arr.push_back({{"id", d.id}, {"x", d.cx}, {"y", d.cy}, {"r", d.r}});
    doc["disks"] = std::move(arr);
  } else {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    doc["graph"] = {{"n", n}, {"edges", std::move(edges)}};
  }
  if (!g.must_hit_edges().empty()) {
    json mh = json::array();
    for (const Edge& e : g.must_hit_edges()) mh.push_back({e.u, e.v});
    doc["must_hit"] = std::move(mh);
  }
  bool weighted = false;
  json mult = json::array();
  for (Vertex v = 0; v < n; ++v) {
    mult.push_back(g.multiplicity(v));
    weighted = weighted || g.multiplicity(v) > 1;
  }
  if (weighted) doc["multiplicities"] = std::move(mult);
  return doc.dump(2) + "\n";
}

SolveInput read_instance(const std::string& path) { return parse_instance(slurp(path)); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("failed writing " + path);
}

std::vector<Vertex> parse_solution(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("solution")) doc = doc["solution"];
  if (!doc.is_array()) fail("solution must be an array of vertex ids");
  std::vector<Vertex> out;
  for (const json& v : doc) {
    if (!v.is_number_integer()) fail("solution entries must be integers");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

std::vector<Vertex> read_solution(const std::string& path) { return parse_solution(slurp(path)); }

}  // namespace dh
