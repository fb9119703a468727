#include "tollcvx/enumerate.hpp"

#include <stdexcept>

namespace tollcvx {

int edge_bit_count(int n) { return n * (n - 1) / 2; }

int edge_bit_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    // pairs with first coordinate < u come first
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

void enumerate_connected_graphs(int n,
                                const std::function<void(const Graph&, std::uint64_t)>& fn,
                                int ceiling) {
    if (n < 1 || n > ceiling)
        throw std::invalid_argument("enumeration supports 1 <= n <= " + std::to_string(ceiling));
    std::uint64_t masks = std::uint64_t{1} << edge_bit_count(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (is_connected(g)) fn(g, mask);
    }
}

std::uint64_t connected_graph_count(int n, int ceiling) {
    std::uint64_t count = 0;
    enumerate_connected_graphs(n, [&](const Graph&, std::uint64_t) { ++count; }, ceiling);
    return count;
}

}  // namespace tollcvx
