#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "tollcvx/graph.hpp"

namespace tollcvx {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_no = 0)
        : std::runtime_error(msg), line(line_no) {}
    int line;
};

/// Edge-list format: header "n m", then m lines "u v" (0-based). '#' starts a
/// comment; blank lines and extra whitespace are ignored. Errors carry line
/// numbers.
Graph parse_edgelist(const std::string& text);

/// Canonical form: header plus edges sorted ascending.
std::string serialize_edgelist(const Graph& g);

/// graph6 with single-byte sizes (n <= 62): size byte n+63, then the upper
/// triangle column-major, 6 bits per byte, MSB first, zero-padded. Extended
/// size headers are rejected. An optional ">>graph6<<" prefix is stripped.
Graph parse_graph6(const std::string& text);

/// Bit-exact inverse of parse_graph6.
std::string serialize_graph6(const Graph& g);

enum class GraphFormat { edgelist, graph6 };

struct GraphDocument {
    GraphFormat format = GraphFormat::edgelist;
    std::optional<std::string> name;
    std::string payload;

    Graph parse() const;
    static GraphDocument from_graph(const Graph& g, GraphFormat format);
};

/// Families used throughout: "path:n", "cycle:n", "complete:n", "star:m"
/// (center is vertex 0), and the two fixed instances "fig3-spider"
/// (path 0-1-2-3-4 plus edges 2-5, 5-6) and "fig3-gprime" (8 vertices,
/// 12 edges). Throws on unknown names or invalid parameters.
Graph named_graph(const std::string& spec);

namespace named {
Graph path(int n);
Graph cycle(int n);      // n >= 3
Graph complete(int n);
Graph star(int leaves);  // K_{1,m}, center 0
Graph fig3_spider();
Graph fig3_gprime();
}  // namespace named

}  // namespace tollcvx
