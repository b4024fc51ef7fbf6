#pragma once

#include <iosfwd>
#include <string>

#include "minorpack/graph.hpp"

namespace minorpack {

enum class GraphFormat { EdgeList, Dot };

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Edge list: one "u v" pair per line, '#' comments, blank lines ignored.
// A "# vertices N" pragma preserves isolated vertices on round trips.
// DOT subset: graph { a -- b; } with plain identifiers.
// Vertices are renumbered densely in order of first appearance.
Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::EdgeList);

std::string format_graph(const Graph& g, GraphFormat format = GraphFormat::EdgeList);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace minorpack
