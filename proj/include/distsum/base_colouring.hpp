#pragma once

// Initial total colouring: a proper (Δ+1)-edge colouring by the Misra–Gries
// fan/path procedure, mapped onto the palette L, followed by a greedy vertex
// colouring with colours in [1, K] that is proper modulo K.

#include "colouring.hpp"
#include "graph.hpp"
#include "params.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace distsum {

namespace detail {

/// Misra–Gries state. Colour indices are 1..Δ+1; 0 means uncoloured.
class MisraGries {
public:
    explicit MisraGries(const Graph& g)
        : g_(g), palette_(g.max_degree() + 1), colour_(g.size(), 0),
          at_(g.order(), std::vector<std::int64_t>(palette_ + 1, -1)) {}

    std::vector<std::uint32_t> run() {
        for (EdgeId e = 0; e < g_.size(); ++e) colour_edge(e);
        return colour_;
    }

private:
    bool is_free(Vertex x, std::uint32_t c) const { return at_[x][c] < 0; }

    std::uint32_t smallest_free(Vertex x) const {
        for (std::uint32_t c = 1; c <= palette_; ++c)
            if (is_free(x, c)) return c;
        throw std::logic_error("Misra-Gries: no free colour (degree exceeds Δ)");
    }

    void set(EdgeId e, std::uint32_t c) {
        const Edge& ed = g_.edge(e);
        if (colour_[e] != 0) {
            at_[ed.u][colour_[e]] = -1;
            at_[ed.v][colour_[e]] = -1;
        }
        colour_[e] = c;
        if (c != 0) {
            at_[ed.u][c] = e;
            at_[ed.v][c] = e;
        }
    }

    EdgeId edge_between(Vertex a, Vertex b) const { return static_cast<EdgeId>(g_.find_edge(a, b)); }

    // Maximal fan at x starting from the uncoloured neighbour y: each next
    // vertex f is joined to x by an edge whose colour is free at the previous one.
    std::vector<Vertex> maximal_fan(Vertex x, Vertex y) const {
        std::vector<Vertex> fan{y};
        std::vector<bool> in_fan(g_.order(), false);
        in_fan[y] = true;
        for (bool extended = true; extended;) {
            extended = false;
            const Vertex last = fan.back();
            for (std::uint32_t c = 1; c <= palette_; ++c) {
                if (!is_free(last, c) || at_[x][c] < 0) continue;
                Vertex w = g_.edge(static_cast<EdgeId>(at_[x][c])).other(x);
                if (in_fan[w]) continue;
                fan.push_back(w);
                in_fan[w] = true;
                extended = true;
                break;
            }
        }
        return fan;
    }

    // Swaps colours c and d along the maximal cd-path starting at x (c free at x).
    void invert_path(Vertex x, std::uint32_t c, std::uint32_t d) {
        std::vector<EdgeId> path;
        Vertex cur = x;
        std::uint32_t want = d;
        while (at_[cur][want] >= 0) {
            EdgeId e = static_cast<EdgeId>(at_[cur][want]);
            path.push_back(e);
            cur = g_.edge(e).other(cur);
            want = want == d ? c : d;
        }
        std::vector<std::uint32_t> old(path.size());
        for (std::size_t i = 0; i < path.size(); ++i) {
            old[i] = colour_[path[i]];
            set(path[i], 0);
        }
        for (std::size_t i = 0; i < path.size(); ++i) set(path[i], old[i] == c ? d : c);
    }

    bool is_fan_prefix(Vertex x, const std::vector<Vertex>& fan, std::size_t end) const {
        for (std::size_t j = 0; j + 1 <= end; ++j) {
            std::uint32_t c = colour_[edge_between(x, fan[j + 1])];
            if (c == 0 || !is_free(fan[j], c)) return false;
        }
        return true;
    }

    void colour_edge(EdgeId e) {
        const Vertex x = g_.edge(e).u;
        const Vertex y = g_.edge(e).v;
        auto fan = maximal_fan(x, y);
        const std::uint32_t c = smallest_free(x);
        const std::uint32_t d = smallest_free(fan.back());
        if (c != d) invert_path(x, c, d);

        std::size_t w = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i)
            if (is_free(fan[i], d) && is_fan_prefix(x, fan, i)) {
                w = i;
                break;
            }
        if (w == fan.size()) throw std::logic_error("Misra-Gries: no rotation point found");

        // Rotate the fan prefix, then give (x, fan[w]) colour d.
        std::vector<std::uint32_t> shifted(w);
        for (std::size_t j = 0; j < w; ++j) shifted[j] = colour_[edge_between(x, fan[j + 1])];
        for (std::size_t j = 1; j <= w; ++j) set(edge_between(x, fan[j]), 0);
        for (std::size_t j = 0; j < w; ++j) set(edge_between(x, fan[j]), shifted[j]);
        set(edge_between(x, fan[w]), d);
    }

    const Graph& g_;
    std::uint32_t palette_;
    std::vector<std::uint32_t> colour_;
    std::vector<std::vector<std::int64_t>> at_;
};

}  // namespace detail

/// Proper edge colouring with indices in [1, Δ+1].
inline std::vector<std::uint32_t> vizing_edge_colouring(const Graph& g) {
    if (g.size() == 0) return {};
    return detail::MisraGries(g).run();
}

inline std::int64_t narrow(Wide x, const char* what) {
    if (x > INT64_MAX || x < INT64_MIN) throw ArithmeticOverflow(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}

/// Index j becomes the j-th smallest element of L.
inline std::vector<Colour> map_to_L(const std::vector<std::uint32_t>& indices, const PaletteParams& params) {
    const Wide size = params.L_size();
    std::vector<Colour> out(indices.size());
    for (std::size_t e = 0; e < indices.size(); ++e) {
        if (indices[e] < 1 || indices[e] > size) throw std::out_of_range("edge colour index outside L");
        out[e] = narrow(params.L_element(indices[e] - 1), "edge colour");
    }
    return out;
}

/// Ascending-id greedy: each vertex takes the smallest colour in [1, K] whose
/// residue avoids the residues of coloured neighbours and of all incident edges.
inline std::vector<Colour> greedy_modK_vertex_colouring(const Graph& g, const std::vector<Colour>& edge_colour,
                                                        std::int64_t K) {
    std::vector<Colour> colour(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<std::int64_t> used;
        for (const auto& inc : g.incidences(v)) {
            used.push_back(residue(edge_colour[inc.edge], K));
            if (colour[inc.neighbour] != 0) used.push_back(residue(colour[inc.neighbour], K));
        }
        std::sort(used.begin(), used.end());
        Colour pick = 0;
        for (Colour c = 1; c <= K; ++c)
            if (!std::binary_search(used.begin(), used.end(), residue(c, K))) {
                pick = c;
                break;
            }
        if (pick == 0) throw std::logic_error("greedy vertex colouring infeasible: K <= number of forbidden residues");
        colour[v] = pick;
    }
    return colour;
}

/// Vizing edge colouring into L followed by the mod-K greedy vertex colouring.
inline TotalColouring base_colouring(const Graph& g, const PaletteParams& params) {
    TotalColouring c;
    c.edge = map_to_L(vizing_edge_colouring(g), params);
    c.vertex = greedy_modK_vertex_colouring(g, c.edge, narrow(params.K, "K"));
    return c;
}

}  // namespace distsum
