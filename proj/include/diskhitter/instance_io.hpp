#pragma once

#include <string>
#include <vector>

#include "diskhitter/pipeline.hpp"

namespace dh {

/// JSON instance files. A geometric file lists disks,
///   {"disks": [{"id": 0, "x": 0.1, "y": 0.2, "r": 0.05}, ...]}
/// and a robust file lists a graph,
///   {"graph": {"n": 4, "edges": [[0, 1], [1, 2]]}}.
/// Both may carry "must_hit": [[u, v], ...] (graph edges) and
/// "multiplicities": [m_0, ..., m_{n-1}]. Vertex v with multiplicity m stands
/// for m pairwise non-adjacent copies; the extra copies get the ids
/// n, n+1, ... in vertex order, and solutions are written over these ids.
/// Throws ParseError on malformed input.
SolveInput parse_instance(const std::string& text);
std::string dump_instance(const SolveInput& input);

SolveInput read_instance(const std::string& path);
void write_text(const std::string& path, const std::string& text);

/// A bare JSON array of ids or {"solution": [...]}.
std::vector<Vertex> parse_solution(const std::string& text);
std::vector<Vertex> read_solution(const std::string& path);

SolveInput from_disks(std::vector<Disk> disks);

}  // namespace dh
