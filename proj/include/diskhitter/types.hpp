#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dh {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Problem { Ths, Fvs, Oct };
enum class Mode { Geometric, Robust };

std::string_view to_string(Problem p);
std::string_view to_string(Mode m);
Problem parse_problem(std::string_view s);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SeparatorNotFound : public Error {
 public:
  using Error::Error;
};

class WidthOverflow : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class GenerationStalled : public Error {
 public:
  using Error::Error;
};

class CorePropertyViolated : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace dh
