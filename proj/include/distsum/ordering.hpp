#pragma once

// Random vertex ordering with local resampling.
//
// Every vertex draws x_v ~ U[0,1]; vertices are processed by increasing x_v.
// With τ = lnΔ / Δ^{1/3}, I = {v : x_v < τ} and R = V \ I. For vertices with
// b(v) >= Δ^{1/3} lnΔ three conditions are required:
//   (i)   d^r_I(v) <= 2 d(v) Δ^{r-4/3} lnΔ
//   (ii)  v ∈ R  =>  b_-(v) >= x_v b(v) - sqrt(x_v b(v)) lnΔ
//   (iii) v ∈ R  =>  d^r_-(v) <= x_v D(v) Δ^{r-2} + sqrt(x_v D(v) Δ^{r-2}) lnΔ
// Violations are repaired Moser–Tardos style: every x_u within distance 2r of a
// violating vertex is redrawn, until all checks pass or the budget runs out.

#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace distsum {

/// Deterministic uniform draw in [0,1) from a 64-bit Mersenne twister.
inline double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::vector<double> sample_weights(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> x(g.order());
    for (auto& xv : x) xv = uniform_unit(rng);
    return x;
}

/// Vertices sorted by (x, id).
inline std::vector<Vertex> ordering_from_weights(const std::vector<double>& x) {
    std::vector<Vertex> order(x.size());
    for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a] < x[b]; });
    return order;
}

/// Thresholds derived from Δ. Only meaningful for Δ >= 2; below that nothing is checked.
struct OrderingThresholds {
    double delta = 0;
    double ln_delta = 0;
    double tau = 0;          ///< lnΔ / Δ^{1/3}
    double big_cutoff = 0;   ///< Δ^{1/3} lnΔ
    bool active = false;

    OrderingThresholds() = default;
    explicit OrderingThresholds(std::uint32_t max_degree) : delta(max_degree) {
        active = max_degree >= 2;
        if (!active) return;
        ln_delta = std::log(delta);
        tau = ln_delta / std::cbrt(delta);
        big_cutoff = std::cbrt(delta) * ln_delta;
    }
};

struct VertexCheck {
    Vertex v = 0;
    bool in_I = false;
    bool cond_i = true;
    std::optional<bool> cond_ii;   ///< absent when v ∈ I
    std::optional<bool> cond_iii;  ///< absent when v ∈ I

    bool ok() const { return cond_i && cond_ii.value_or(true) && cond_iii.value_or(true); }
};

/// Result of evaluating the three conditions for one choice of x.
struct ConditionReport {
    std::vector<Vertex> ordering;
    std::vector<bool> in_I;
    BackwardStats quantities;
    std::vector<VertexCheck> checks;  ///< one per checkable vertex, ascending id

    bool all_ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const VertexCheck& c) { return c.ok(); });
    }
};

/// Graph data reused across resampling rounds.
class OrderingContext {
public:
    OrderingContext(const Graph& g, std::uint32_t r)
        : g_(g), r_(r), stats_(degree_stats(g)), neighbourhoods_(all_r_neighbourhoods(g, r)),
          thresholds_(g.max_degree()) {}

    const Graph& graph() const { return g_; }
    std::uint32_t radius() const { return r_; }
    const DegreeStats& stats() const { return stats_; }
    const std::vector<std::vector<Vertex>>& neighbourhoods() const { return neighbourhoods_; }
    const OrderingThresholds& thresholds() const { return thresholds_; }

    bool checkable(Vertex v) const {
        return thresholds_.active && static_cast<double>(stats_.big_neighbours[v]) >= thresholds_.big_cutoff;
    }

    ConditionReport evaluate(const std::vector<double>& x) const {
        const auto& t = thresholds_;
        const double r = r_;
        ConditionReport rep;
        rep.ordering = ordering_from_weights(x);
        rep.in_I.assign(g_.order(), false);
        for (Vertex v = 0; v < g_.order(); ++v) rep.in_I[v] = t.active && x[v] < t.tau;
        rep.quantities = backward_stats(g_, stats_, neighbourhoods_, rep.ordering, rep.in_I);
        const auto& q = rep.quantities;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (!checkable(v)) continue;
            VertexCheck c;
            c.v = v;
            c.in_I = rep.in_I[v];
            const double d = stats_.degree[v];
            c.cond_i = q.r_in_mask[v] <= 2.0 * d * std::pow(t.delta, r - 4.0 / 3.0) * t.ln_delta;
            if (!c.in_I) {
                const double xb = x[v] * stats_.big_neighbours[v];
                c.cond_ii = q.backward_big[v] >= xb - std::sqrt(xb) * t.ln_delta;
                const double xD = x[v] * static_cast<double>(stats_.neighbour_degree_sum[v]) * std::pow(t.delta, r - 2.0);
                c.cond_iii = q.backward_r_count[v] <= xD + std::sqrt(xD) * t.ln_delta;
            }
            rep.checks.push_back(c);
        }
        return rep;
    }

private:
    const Graph& g_;
    std::uint32_t r_;
    DegreeStats stats_;
    std::vector<std::vector<Vertex>> neighbourhoods_;
    OrderingThresholds thresholds_;
};

inline ConditionReport check_conditions(const Graph& g, const std::vector<double>& x, std::uint32_t r) {
    if (r < 2) throw std::invalid_argument("ordering conditions require r >= 2");
    return OrderingContext(g, r).evaluate(x);
}

struct OrderingCertificate {
    std::uint64_t seed = 0;
    std::uint32_t r = 0;
    std::vector<double> x;
    std::vector<Vertex> ordering;
    std::vector<bool> in_I;
    double tau = 0;
    std::vector<VertexCheck> checks;
    std::uint32_t resample_rounds = 0;
    bool valid = false;

    std::size_t failed_checks() const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [](const VertexCheck& c) { return !c.ok(); }));
    }
};

inline constexpr std::uint32_t default_max_rounds = 1000;

inline OrderingCertificate resample_until_valid(const Graph& g, std::uint32_t r, std::uint64_t seed,
                                                std::uint32_t max_rounds = default_max_rounds) {
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be at least 1");
    OrderingContext ctx(g, r < 2 ? 2 : r);
    std::mt19937_64 rng(seed);
    std::vector<double> x(g.order());
    for (auto& xv : x) xv = uniform_unit(rng);

    OrderingCertificate cert;
    cert.seed = seed;
    cert.r = ctx.radius();
    cert.tau = ctx.thresholds().tau;

    ConditionReport rep = ctx.evaluate(x);
    std::uint32_t rounds = 0;
    while (!rep.all_ok() && rounds < max_rounds) {
        std::set<Vertex> redraw;
        for (const auto& c : rep.checks) {
            if (c.ok()) continue;
            redraw.insert(c.v);
            for (Vertex u : r_neighbourhood(g, c.v, 2 * ctx.radius())) redraw.insert(u);
        }
        for (Vertex u : redraw) x[u] = uniform_unit(rng);
        ++rounds;
        rep = ctx.evaluate(x);
    }

    cert.x = std::move(x);
    cert.ordering = std::move(rep.ordering);
    cert.in_I = std::move(rep.in_I);
    cert.checks = std::move(rep.checks);
    cert.resample_rounds = rounds;
    cert.valid = cert.failed_checks() == 0;
    return cert;
}

}  // namespace distsum
