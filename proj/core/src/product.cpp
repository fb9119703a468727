#include "tollcvx/product.hpp"

#include <stdexcept>

namespace tollcvx {

VertexSet ProductGraph::g_layer(int h) const {
    VertexSet s(graph.vertex_count());
    for (int g = 0; g < g_count; ++g) s.set(encode(g, h));
    return s;
}

VertexSet ProductGraph::h_layer(int g) const {
    VertexSet s(graph.vertex_count());
    for (int h = 0; h < h_count; ++h) s.set(encode(g, h));
    return s;
}

ProductGraph product(const Graph& g, const Graph& h, ProductKind kind) {
    int ng = g.vertex_count();
    int nh = h.vertex_count();
    if (ng < 1 || nh < 1) throw std::invalid_argument("product factors must be non-empty");

    ProductGraph p;
    p.graph = Graph(ng * nh);
    p.g_count = ng;
    p.h_count = nh;
    p.kind = kind;

    for (int a = 0; a < ng; ++a) {
        for (int x = 0; x < nh; ++x) {
            int v = p.encode(a, x);
            // edges within the H-layer of a (both product kinds)
            for (int y : h.neighbors(x))
                if (x < y) p.graph.add_edge(v, p.encode(a, y));
            for (int b : g.neighbors(a)) {
                if (b < a) continue;
                if (kind == ProductKind::cartesian) {
                    p.graph.add_edge(v, p.encode(b, x));
                } else {
                    for (int y = 0; y < nh; ++y) p.graph.add_edge(v, p.encode(b, y));
                }
            }
        }
    }
    return p;
}

}  // namespace tollcvx
