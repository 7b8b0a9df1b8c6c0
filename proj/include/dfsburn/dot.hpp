#pragma once

#include <ostream>
#include <span>
#include <string_view>

#include "bijection.hpp"
#include "graph.hpp"
#include "trees.hpp"

namespace dfsburn {

// DOT export. Tree edges are solid arrows, dampened edges dashed arrows; the
// root is drawn as a double circle.

inline void write_dot(std::ostream& out, const Graph& g, std::string_view name = "G") {
  out << "graph " << name << " {\n";
  out << "  " << g.root() << " [shape=doublecircle];\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

inline void write_dot(std::ostream& out, const Graph& g, const RootedTree& tree,
                      std::span<const DirectedEdge> dampened, std::string_view name = "burn") {
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.n_vertices(); ++v)
    out << "  " << v << (v == g.root() ? " [shape=doublecircle]" : "") << ";\n";
  for (const DirectedEdge& e : tree.edges()) out << "  " << e.from << " -> " << e.to << ";\n";
  for (const DirectedEdge& e : dampened) out << "  " << e.from << " -> " << e.to << " [style=dashed];\n";
  out << "}\n";
}

/// Burn outcome, successful or not. Unburnt vertices are drawn grey.
inline void write_dot(std::ostream& out, const Graph& g, const BurnResult& burn, std::string_view name = "burn") {
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    out << "  " << v;
    if (v == g.root())
      out << " [shape=doublecircle]";
    else if (!burn.is_tree() && burn.certificate().unburnt.contains(v))
      out << " [style=filled, fillcolor=lightgrey]";
    out << ";\n";
  }
  for (const TraceEntry& e : burn.trace().entries)
    out << "  " << e.edge.from << " -> " << e.edge.to << (e.marking == Marking::dampened ? " [style=dashed]" : "")
        << ";\n";
  out << "}\n";
}

}  // namespace dfsburn
