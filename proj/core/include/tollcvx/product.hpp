#pragma once

#include <utility>

#include "tollcvx/graph.hpp"

namespace tollcvx {

enum class ProductKind { cartesian, lexicographic };

/// A product graph together with its factor dimensions. Vertex (g,h) is
/// stored at index g*h_count + h, so the H-layer of g is a contiguous block.
struct ProductGraph {
    Graph graph;
    int g_count = 0;
    int h_count = 0;
    ProductKind kind = ProductKind::cartesian;

    int encode(int g, int h) const { return g * h_count + h; }
    std::pair<int, int> decode(int v) const { return {v / h_count, v % h_count}; }

    /// G-layer G^h: all (g, h) for fixed h.
    VertexSet g_layer(int h) const;
    /// H-layer ^gH: all (g, h) for fixed g.
    VertexSet h_layer(int g) const;
};

ProductGraph product(const Graph& g, const Graph& h, ProductKind kind);

}  // namespace tollcvx
