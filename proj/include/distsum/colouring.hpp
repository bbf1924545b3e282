#pragma once

#include "graph.hpp"

#include <cstdint>
#include <vector>

namespace distsum {

using Colour = std::int64_t;

/// A colour for every vertex and every edge (indexed by EdgeId).
struct TotalColouring {
    std::vector<Colour> vertex;
    std::vector<Colour> edge;

    friend bool operator==(const TotalColouring&, const TotalColouring&) = default;
};

/// w(v) = c(v) + sum of the colours of the edges at v.
inline Colour weighted_degree(const Graph& g, const TotalColouring& c, Vertex v) {
    Colour w = c.vertex[v];
    for (const auto& inc : g.incidences(v)) w += c.edge[inc.edge];
    return w;
}

inline std::vector<Colour> weighted_degrees(const Graph& g, const TotalColouring& c) {
    std::vector<Colour> w(g.order());
    for (Vertex v = 0; v < g.order(); ++v) w[v] = weighted_degree(g, c, v);
    return w;
}

}  // namespace distsum
