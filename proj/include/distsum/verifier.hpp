#pragma once

// Algorithm-agnostic check of a total colouring: properness plus distinct
// weighted degrees for every pair of vertices at distance at most r.

#include "colouring.hpp"
#include "graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace distsum {

class IncompleteColouring : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ViolationKind { AdjacentVertices, AdjacentEdges, EdgeEndpoint, EqualSums, ColourBound, NonPositive };

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::AdjacentVertices: return "adjacent-vertices";
        case ViolationKind::AdjacentEdges: return "adjacent-edges";
        case ViolationKind::EdgeEndpoint: return "edge-endpoint";
        case ViolationKind::EqualSums: return "equal-sums";
        case ViolationKind::ColourBound: return "colour-bound";
        case ViolationKind::NonPositive: return "non-positive";
    }
    return "?";
}

/// Witness of a failed check. For edge-related kinds `a`/`b` are edge ids, else vertex ids.
struct Violation {
    ViolationKind kind;
    std::uint32_t a;
    std::uint32_t b;
};

struct VerificationReport {
    bool proper_vertices = true;
    bool proper_edges = true;
    bool proper_incidence = true;
    bool r_distant_ok = true;
    bool bound_ok = true;
    Colour max_colour = 0;
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
};

inline VerificationReport verify(const Graph& g, const TotalColouring& col, std::uint32_t r,
                                 std::optional<Colour> bound = std::nullopt) {
    if (col.vertex.size() != g.order() || col.edge.size() != g.size())
        throw IncompleteColouring("colouring does not cover every vertex and edge");
    VerificationReport rep;
    auto add = [&](ViolationKind k, std::uint32_t a, std::uint32_t b) { rep.violations.push_back({k, a, b}); };

    for (Vertex v = 0; v < g.order(); ++v) {
        rep.max_colour = std::max(rep.max_colour, col.vertex[v]);
        if (col.vertex[v] < 1) add(ViolationKind::NonPositive, v, v);
    }
    for (EdgeId e = 0; e < g.size(); ++e) {
        rep.max_colour = std::max(rep.max_colour, col.edge[e]);
        if (col.edge[e] < 1) add(ViolationKind::NonPositive, e, e);
    }

    for (EdgeId e = 0; e < g.size(); ++e) {
        const Edge& ed = g.edge(e);
        if (col.vertex[ed.u] == col.vertex[ed.v]) {
            rep.proper_vertices = false;
            add(ViolationKind::AdjacentVertices, ed.u, ed.v);
        }
        if (col.edge[e] == col.vertex[ed.u] || col.edge[e] == col.vertex[ed.v]) {
            rep.proper_incidence = false;
            add(ViolationKind::EdgeEndpoint, e, col.edge[e] == col.vertex[ed.u] ? ed.u : ed.v);
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& inc = g.incidences(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (col.edge[inc[i].edge] == col.edge[inc[j].edge]) {
                    rep.proper_edges = false;
                    add(ViolationKind::AdjacentEdges, inc[i].edge, inc[j].edge);
                }
    }

    std::vector<Colour> w(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        w[v] = col.vertex[v];
        for (const auto& inc : g.incidences(v)) w[v] += col.edge[inc.edge];
    }
    // Truncated BFS from every vertex; each pair is reported once (a < b).
    std::vector<std::uint32_t> seen(g.order(), UINT32_MAX);
    std::vector<Vertex> frontier, next;
    for (Vertex s = 0; s < g.order(); ++s) {
        frontier.assign(1, s);
        seen[s] = s;
        for (std::uint32_t depth = 1; depth <= r && !frontier.empty(); ++depth) {
            next.clear();
            for (Vertex x : frontier)
                for (const auto& inc : g.incidences(x)) {
                    const Vertex y = inc.neighbour;
                    if (seen[y] == s) continue;
                    seen[y] = s;
                    next.push_back(y);
                    if (s < y && w[s] == w[y]) {
                        rep.r_distant_ok = false;
                        add(ViolationKind::EqualSums, s, y);
                    }
                }
            std::swap(frontier, next);
        }
    }

    if (bound && rep.max_colour > *bound) {
        rep.bound_ok = false;
        add(ViolationKind::ColourBound, 0, 0);
    }
    return rep;
}

}  // namespace distsum
