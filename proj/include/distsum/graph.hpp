#pragma once

// Simple undirected graphs, r-neighbourhoods and the degree statistics consumed
// by the ordering and recolouring stages.
//
// Vertices are 0-based internally. The 1-based convention of the file formats
// is handled by build_graph() and the io layer.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distsum {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    Vertex u;  ///< smaller endpoint
    Vertex v;  ///< larger endpoint

    Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Incidence entry: neighbour plus the id of the connecting edge.
struct Incidence {
    Vertex neighbour;
    EdgeId edge;
};

/// Rejected input edge. `edge_index` is the 0-based position in the input list.
class GraphError : public std::invalid_argument {
public:
    enum class Kind { SelfLoop, DuplicateEdge, OutOfRange };

    GraphError(Kind kind, std::size_t edge_index, const std::string& what)
        : std::invalid_argument(what), kind_(kind), edge_index_(edge_index) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t edge_index() const noexcept { return edge_index_; }

private:
    Kind kind_;
    std::size_t edge_index_;
};

class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }
    std::uint32_t max_degree() const noexcept { return max_degree_; }

    std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(adjacency_[v].size()); }

    /// Incidences of v sorted by neighbour id.
    const std::vector<Incidence>& incidences(Vertex v) const { return adjacency_[v]; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b) >= 0; }

    /// Edge id joining a and b, or -1.
    std::int64_t find_edge(Vertex a, Vertex b) const {
        const auto& inc = adjacency_[a];
        auto it = std::lower_bound(inc.begin(), inc.end(), b,
                                   [](const Incidence& i, Vertex x) { return i.neighbour < x; });
        if (it != inc.end() && it->neighbour == b) return it->edge;
        return -1;
    }

    friend Graph build_graph(std::size_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& edges);

private:
    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<Edge> edges_;
    std::uint32_t max_degree_ = 0;
};

/// Validates a 1-based edge list and builds the graph. Edge ids follow input order.
inline Graph build_graph(std::size_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& edges) {
    Graph g;
    g.adjacency_.assign(n, {});
    g.edges_.reserve(edges.size());
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        const std::string where = "edge #" + std::to_string(i + 1) + " (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")";
        if (a < 1 || b < 1 || static_cast<std::uint64_t>(a) > n || static_cast<std::uint64_t>(b) > n)
            throw GraphError(GraphError::Kind::OutOfRange, i, where + ": endpoint out of range [1," +
                                                                  std::to_string(n) + "]");
        if (a == b) throw GraphError(GraphError::Kind::SelfLoop, i, where + ": self-loop");
        Vertex u = static_cast<Vertex>(std::min(a, b) - 1);
        Vertex v = static_cast<Vertex>(std::max(a, b) - 1);
        if (!seen.emplace(u, v).second)
            throw GraphError(GraphError::Kind::DuplicateEdge, i, where + ": duplicate edge");
        auto id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({u, v});
        g.adjacency_[u].push_back({v, id});
        g.adjacency_[v].push_back({u, id});
    }
    for (auto& inc : g.adjacency_) {
        std::sort(inc.begin(), inc.end(),
                  [](const Incidence& x, const Incidence& y) { return x.neighbour < y.neighbour; });
        g.max_degree_ = std::max(g.max_degree_, static_cast<std::uint32_t>(inc.size()));
    }
    return g;
}

/// All u != v with 1 <= dist(u,v) <= r, ascending. Breadth-first search truncated at depth r.
inline std::vector<Vertex> r_neighbourhood(const Graph& g, Vertex v, std::uint32_t r) {
    std::vector<Vertex> out;
    if (r == 0) return out;
    std::vector<std::uint32_t> depth(g.order(), UINT32_MAX);
    std::vector<Vertex> frontier{v};
    depth[v] = 0;
    for (std::uint32_t d = 1; d <= r && !frontier.empty(); ++d) {
        std::vector<Vertex> next;
        for (Vertex x : frontier)
            for (const auto& inc : g.incidences(x))
                if (depth[inc.neighbour] == UINT32_MAX) {
                    depth[inc.neighbour] = d;
                    next.push_back(inc.neighbour);
                }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// r-neighbourhoods of every vertex.
inline std::vector<std::vector<Vertex>> all_r_neighbourhoods(const Graph& g, std::uint32_t r) {
    std::vector<std::vector<Vertex>> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out[v] = r_neighbourhood(g, v, r);
    return out;
}

enum class DegreeClass : std::uint8_t { Small, Big };

/// Per-vertex degree data. A vertex is Small iff d(v) <= Δ^{2/3}, Big otherwise.
struct DegreeStats {
    std::vector<std::uint32_t> degree;
    std::vector<std::uint32_t> small_neighbours;  ///< s(v)
    std::vector<std::uint32_t> big_neighbours;    ///< b(v)
    std::vector<std::uint64_t> neighbour_degree_sum;  ///< D(v)
    std::vector<DegreeClass> cls;

    bool is_big(Vertex v) const { return cls[v] == DegreeClass::Big; }
    bool is_small(Vertex v) const { return cls[v] == DegreeClass::Small; }
};

inline double small_degree_threshold(std::uint32_t max_degree) {
    return std::cbrt(static_cast<double>(max_degree) * static_cast<double>(max_degree));
}

/// d > Δ^{2/3}, decided exactly as d³ > Δ².
inline bool is_big_degree(std::uint32_t degree, std::uint32_t max_degree) {
    const auto d = static_cast<unsigned __int128>(degree);
    const auto D = static_cast<unsigned __int128>(max_degree);
    return d * d * d > D * D;
}

inline DegreeStats degree_stats(const Graph& g) {
    const std::size_t n = g.order();
    DegreeStats s;
    s.degree.resize(n);
    s.small_neighbours.assign(n, 0);
    s.big_neighbours.assign(n, 0);
    s.neighbour_degree_sum.assign(n, 0);
    s.cls.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        s.degree[v] = g.degree(v);
        s.cls[v] = is_big_degree(s.degree[v], g.max_degree()) ? DegreeClass::Big : DegreeClass::Small;
    }
    for (Vertex v = 0; v < n; ++v)
        for (const auto& inc : g.incidences(v)) {
            s.neighbour_degree_sum[v] += s.degree[inc.neighbour];
            if (s.is_big(inc.neighbour))
                ++s.big_neighbours[v];
            else
                ++s.small_neighbours[v];
        }
    return s;
}

/// Position of every vertex in `ordering`. Throws if `ordering` is not a permutation.
inline std::vector<std::uint32_t> positions_of(const std::vector<Vertex>& ordering, std::size_t n) {
    if (ordering.size() != n) throw std::invalid_argument("ordering length differs from vertex count");
    std::vector<std::uint32_t> pos(n, UINT32_MAX);
    for (std::uint32_t i = 0; i < ordering.size(); ++i) {
        Vertex v = ordering[i];
        if (v >= n || pos[v] != UINT32_MAX) throw std::invalid_argument("ordering is not a permutation");
        pos[v] = i;
    }
    return pos;
}

/// Backward quantities relative to an ordering:
/// N_-(v), N^r_-(v), d^r_-(v), b_-(v) and d^r_I(v) for a membership mask I.
struct BackwardStats {
    std::vector<std::vector<Vertex>> backward_neighbours;    ///< N_-(v)
    std::vector<std::vector<Vertex>> backward_r_neighbours;  ///< N^r_-(v)
    std::vector<std::uint32_t> backward_r_count;             ///< d^r_-(v)
    std::vector<std::uint32_t> backward_big;                 ///< b_-(v)
    std::vector<std::uint32_t> r_in_mask;                    ///< d^r_I(v)
};

inline BackwardStats backward_stats(const Graph& g, const DegreeStats& stats,
                                    const std::vector<std::vector<Vertex>>& r_neighbourhoods,
                                    const std::vector<Vertex>& ordering, const std::vector<bool>& in_mask) {
    const std::size_t n = g.order();
    const auto pos = positions_of(ordering, n);
    BackwardStats b;
    b.backward_neighbours.resize(n);
    b.backward_r_neighbours.resize(n);
    b.backward_r_count.assign(n, 0);
    b.backward_big.assign(n, 0);
    b.r_in_mask.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (const auto& inc : g.incidences(v))
            if (pos[inc.neighbour] < pos[v]) {
                b.backward_neighbours[v].push_back(inc.neighbour);
                if (stats.is_big(inc.neighbour)) ++b.backward_big[v];
            }
        for (Vertex u : r_neighbourhoods[v]) {
            if (pos[u] < pos[v]) b.backward_r_neighbours[v].push_back(u);
            if (in_mask[u]) ++b.r_in_mask[v];
        }
        b.backward_r_count[v] = static_cast<std::uint32_t>(b.backward_r_neighbours[v].size());
    }
    return b;
}

inline BackwardStats backward_stats(const Graph& g, const std::vector<Vertex>& ordering, std::uint32_t r,
                                    const std::vector<bool>& in_mask) {
    return backward_stats(g, degree_stats(g), all_r_neighbourhoods(g, r), ordering, in_mask);
}

}  // namespace distsum
