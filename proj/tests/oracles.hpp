#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <distsum/colouring.hpp>
#include <distsum/graph.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <vector>

namespace distsum::oracle {

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

/// Floyd–Warshall over the edge list.
inline std::vector<std::vector<std::uint32_t>> distance_table(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
    for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (d[a][m] + d[m][b] < d[a][b]) d[a][b] = d[a][m] + d[m][b];
    return d;
}

inline std::set<Vertex> r_neighbours(const std::vector<std::vector<std::uint32_t>>& d, Vertex v, std::uint32_t r) {
    std::set<Vertex> out;
    for (Vertex u = 0; u < d.size(); ++u)
        if (u != v && d[v][u] >= 1 && d[v][u] <= r) out.insert(u);
    return out;
}

/// Plain checker straight from the definitions, O(n² + m²).
inline bool valid_colouring(const Graph& g, const TotalColouring& c, std::uint32_t r) {
    const auto d = distance_table(g);
    const auto& E = g.edges();
    for (std::size_t i = 0; i < E.size(); ++i) {
        if (c.vertex[E[i].u] == c.vertex[E[i].v]) return false;
        if (c.edge[i] == c.vertex[E[i].u] || c.edge[i] == c.vertex[E[i].v]) return false;
        for (std::size_t j = i + 1; j < E.size(); ++j) {
            const bool share = E[i].u == E[j].u || E[i].u == E[j].v || E[i].v == E[j].u || E[i].v == E[j].v;
            if (share && c.edge[i] == c.edge[j]) return false;
        }
    }
    std::vector<Colour> w(g.order());
    for (Vertex v = 0; v < g.order(); ++v) w[v] = c.vertex[v];
    for (std::size_t i = 0; i < E.size(); ++i) {
        w[E[i].u] += c.edge[i];
        w[E[i].v] += c.edge[i];
    }
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (d[a][b] >= 1 && d[a][b] <= r && w[a] == w[b]) return false;
    return true;
}

/// Enumerates all p^(n+m) colourings; true iff one of them is valid.
inline bool exhaustive_feasible(const Graph& g, std::uint32_t r, std::uint32_t p) {
    const std::size_t total = g.order() + g.size();
    TotalColouring c;
    c.vertex.assign(g.order(), 1);
    c.edge.assign(g.size(), 1);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == total) return valid_colouring(g, c, r);
        Colour& slot = i < g.order() ? c.vertex[i] : c.edge[i - g.order()];
        for (Colour x = 1; x <= static_cast<Colour>(p); ++x) {
            slot = x;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return p >= 1 ? rec(0) : total == 0;
}

inline std::uint32_t exhaustive_chi(const Graph& g, std::uint32_t r, std::uint32_t limit) {
    for (std::uint32_t p = 1; p <= limit; ++p)
        if (exhaustive_feasible(g, r, p)) return p;
    return 0;
}

/// Small/big split in exact integer arithmetic: d <= Δ^{2/3} iff d³ <= Δ².
inline bool is_big(std::uint64_t degree, std::uint64_t max_degree) {
    return degree * degree * degree > max_degree * max_degree;
}

/// Backward counts recomputed from a distance table and explicit positions.
struct BackwardCounts {
    std::uint32_t r_in_mask = 0;
    std::uint32_t backward_big = 0;
    std::uint32_t backward_r = 0;
};

inline BackwardCounts backward_counts(const std::vector<std::vector<std::uint32_t>>& d, const std::vector<bool>& big,
                                      const std::vector<std::uint32_t>& position, const std::vector<bool>& in_mask,
                                      Vertex v, std::uint32_t r) {
    BackwardCounts out;
    for (Vertex u = 0; u < d.size(); ++u) {
        if (u == v || d[v][u] < 1 || d[v][u] > r) continue;
        if (in_mask[u]) ++out.r_in_mask;
        if (position[u] < position[v]) {
            ++out.backward_r;
            if (d[v][u] == 1 && big[u]) ++out.backward_big;
        }
    }
    return out;
}

}  // namespace distsum::oracle
