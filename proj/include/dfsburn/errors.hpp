#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfsburn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph validation.
class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(std::size_t v)
      : Error("self-loop at vertex " + std::to_string(v)) {}
};

class DuplicateEdgeError : public Error {
 public:
  DuplicateEdgeError(std::size_t u, std::size_t v)
      : Error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}") {}
};

class VertexOutOfRangeError : public Error {
 public:
  VertexOutOfRangeError(std::size_t v, std::size_t n_vertices)
      : Error("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_vertices) +
              " vertices") {}
};

class DisconnectedGraphError : public Error {
 public:
  DisconnectedGraphError() : Error("graph is not connected") {}
  using Error::Error;
};

/// An exhaustive routine was asked to search a space larger than its budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// A function's domain does not match the non-root vertices of the graph.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

class NotASpanningTreeError : public Error {
 public:
  using Error::Error;
};

class RootMismatchError : public Error {
 public:
  RootMismatchError(std::size_t tree_root, std::size_t graph_root)
      : Error("tree is rooted at " + std::to_string(tree_root) + " but graph root is " +
              std::to_string(graph_root)) {}
};

class MalformedSequenceError : public Error {
 public:
  using Error::Error;
};

/// Text input (edge list, csv, tree list) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dfsburn
