#pragma once

// Exhaustive search for the least palette [1, p] admitting a proper total
// colouring whose weighted degrees differ on every pair at distance <= r.
// Only meant for graphs with a handful of vertices and edges.

#include "colouring.hpp"
#include "graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace distsum {

struct FeasibilityResult {
    bool feasible = false;
    TotalColouring witness;  ///< set when feasible
    std::uint64_t nodes = 0;
};

namespace detail {

/// Elements 0..n-1 are vertices, n..n+m-1 are edges.
class ExactSearch {
public:
    ExactSearch(const Graph& g, std::uint32_t r, std::uint32_t palette)
        : g_(g), n_(g.order()), p_(palette), total_(g.order() + g.size()), conflicts_(total_),
          sum_partners_(g.order()), colour_(total_, 0),
          blocked_(total_, std::vector<std::uint32_t>(palette + 1, 0)), pending_(g.order(), 0) {
        auto link = [&](std::size_t a, std::size_t b) {
            conflicts_[a].push_back(b);
            conflicts_[b].push_back(a);
        };
        for (EdgeId e = 0; e < g.size(); ++e) {
            const Edge& ed = g.edge(e);
            link(ed.u, ed.v);
            link(n_ + e, ed.u);
            link(n_ + e, ed.v);
        }
        for (Vertex v = 0; v < n_; ++v) {
            const auto& inc = g.incidences(v);
            for (std::size_t i = 0; i < inc.size(); ++i)
                for (std::size_t j = i + 1; j < inc.size(); ++j) link(n_ + inc[i].edge, n_ + inc[j].edge);
            pending_[v] = 1 + static_cast<std::uint32_t>(inc.size());
        }
        for (Vertex v = 0; v < n_; ++v) sum_partners_[v] = r_neighbourhood(g, v, r);
    }

    FeasibilityResult solve() {
        FeasibilityResult res;
        res.feasible = p_ >= 1 ? search(0) : total_ == 0;
        res.nodes = nodes_;
        if (res.feasible) {
            res.witness.vertex.assign(colour_.begin(), colour_.begin() + static_cast<std::ptrdiff_t>(n_));
            res.witness.edge.assign(colour_.begin() + static_cast<std::ptrdiff_t>(n_), colour_.end());
        }
        return res;
    }

private:
    std::uint32_t domain_size(std::size_t x) const {
        std::uint32_t s = 0;
        for (std::uint32_t c = 1; c <= p_; ++c) s += blocked_[x][c] == 0;
        return s;
    }

    // Unassigned element with the fewest remaining colours; lowest index on ties.
    std::optional<std::size_t> pick() const {
        std::optional<std::size_t> best;
        std::uint32_t best_size = UINT32_MAX;
        for (std::size_t x = 0; x < total_; ++x) {
            if (colour_[x] != 0) continue;
            const auto s = domain_size(x);
            if (s < best_size) {
                best = x;
                best_size = s;
            }
        }
        return best;
    }

    std::vector<Vertex> owners(std::size_t x) const {
        if (x < n_) return {static_cast<Vertex>(x)};
        const Edge& ed = g_.edge(static_cast<EdgeId>(x - n_));
        return {ed.u, ed.v};
    }

    Colour sum_of(Vertex v) const {
        Colour w = colour_[v];
        for (const auto& inc : g_.incidences(v)) w += colour_[n_ + inc.edge];
        return w;
    }

    // Vertices completed by the last assignment must differ from completed r-neighbours.
    bool sums_ok(const std::vector<Vertex>& completed) const {
        for (Vertex v : completed) {
            const Colour w = sum_of(v);
            for (Vertex u : sum_partners_[v])
                if (pending_[u] == 0 && sum_of(u) == w) return false;
        }
        return true;
    }

    bool search(std::size_t assigned) {
        ++nodes_;
        if (assigned == total_) return true;
        const auto next = pick();
        const std::size_t x = *next;
        for (std::uint32_t c = 1; c <= p_; ++c) {
            if (blocked_[x][c] != 0) continue;
            colour_[x] = c;
            bool wiped = false;
            for (std::size_t y : conflicts_[x]) {
                if (++blocked_[y][c] == 1 && colour_[y] == 0 && domain_size(y) == 0) wiped = true;
            }
            std::vector<Vertex> completed;
            for (Vertex v : owners(x))
                if (--pending_[v] == 0) completed.push_back(v);
            if (!wiped && sums_ok(completed) && search(assigned + 1)) return true;
            for (Vertex v : owners(x)) ++pending_[v];
            for (std::size_t y : conflicts_[x]) --blocked_[y][c];
            colour_[x] = 0;
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::uint32_t p_;
    std::size_t total_;
    std::vector<std::vector<std::size_t>> conflicts_;
    std::vector<std::vector<Vertex>> sum_partners_;
    std::vector<Colour> colour_;
    std::vector<std::vector<std::uint32_t>> blocked_;
    std::vector<std::uint32_t> pending_;  ///< unassigned elements among v and its edges
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Decision version: is there a valid colouring with colours in [1, p]?
inline FeasibilityResult is_feasible(const Graph& g, std::uint32_t r, std::uint32_t p) {
    return detail::ExactSearch(g, r, p).solve();
}

struct ExactResult {
    bool solved = false;       ///< false: no palette up to the limit works
    std::uint32_t chi = 0;     ///< least feasible palette size when solved
    TotalColouring witness;
};

/// Least p in [1, limit] with is_feasible(g, r, p); unsolved if none.
inline ExactResult exact_chi(const Graph& g, std::uint32_t r, std::uint32_t limit) {
    ExactResult out;
    for (std::uint32_t p = 1; p <= limit; ++p) {
        auto res = is_feasible(g, r, p);
        if (res.feasible) {
            out.solved = true;
            out.chi = p;
            out.witness = std::move(res.witness);
            return out;
        }
    }
    return out;
}

}  // namespace distsum
