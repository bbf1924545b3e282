#pragma once

// Sequential recolouring that fixes the weighted degree of each vertex in the
// certified order so that it differs from every earlier r-neighbour.
//
// When v is processed it receives a base colour c'(v) in [1, K] and a target
// sum w_f(v). From then on c_t(v) stays in {c', c'+k, c'+K, c'+K+k} and the
// weighted degree of v stays equal to w_f(v). The sum of v is adjusted through
// its incident edges only:
//   forward edge uv   +{0, K}  if v ∈ S and u ∈ B, otherwise +{0, k}
//   backward edge uv  +{0, ±K} if u ∈ B, +{0, ±k} if u ∈ S, with c_t(u)
//                     compensating by the opposite amount so that w(u) is kept
// Each backward edge has exactly one nonzero option: the sign for which the
// compensated colour of u stays in its four-element set.

#include "base_colouring.hpp"
#include "graph.hpp"
#include "ordering.hpp"
#include "params.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace distsum {

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct RunOptions {
    std::uint32_t max_rounds = default_max_rounds;
    /// Exclude base colours against every processed r-neighbour instead of processed neighbours only.
    bool literal_r_exclusion = false;
    /// Re-check every state invariant after each step and record violations in the trace.
    bool check_invariants = false;
    /// Replaces the computed palette. Must satisfy validate_palette().
    std::optional<PaletteParams> params_override;
};

struct EdgeDelta {
    EdgeId edge;
    Colour delta;
    friend bool operator==(const EdgeDelta&, const EdgeDelta&) = default;
};

struct Compensation {
    Vertex vertex;
    Colour delta;
    friend bool operator==(const Compensation&, const Compensation&) = default;
};

struct StepRecord {
    Vertex v = 0;
    Colour base_colour = 0;  ///< c'(v)
    Colour colour = 0;       ///< c_t(v) right after the step
    Colour target = 0;       ///< w_f(v)
    std::vector<EdgeDelta> edge_deltas;
    std::vector<Compensation> compensations;
    std::size_t admissible = 0;     ///< admissible base colours
    std::size_t lattice = 0;        ///< edge adjustment combinations
    std::size_t backward_r = 0;     ///< |N^r_-(v)|
    std::uint32_t lift = 0;         ///< multiples of K added to c'(v) by a fallback
    bool fallback = false;
};

struct RunTrace {
    std::uint32_t r = 0;
    std::uint32_t param_r = 0;      ///< radius used for palette and ordering arithmetic
    std::uint32_t param_delta = 0;  ///< Δ used for palette arithmetic
    TotalColouring base;
    std::vector<StepRecord> steps;
    std::size_t fallback_count = 0;
    std::vector<std::string> invariant_violations;
};

struct RunResult {
    PaletteParams params;
    TotalColouring colouring;
    RunTrace trace;
    OrderingCertificate certificate;
};

/// Minimal soundness requirements for a palette used with graph maximum degree `max_degree`.
inline void validate_palette(const PaletteParams& p, std::uint32_t max_degree) {
    auto fail = [](const std::string& why) { throw std::invalid_argument("unusable palette: " + why); };
    if (p.k < 1 || p.K < 1) fail("k and K must be positive");
    if (p.K % p.k != 0) fail("k must divide K");
    if (p.L.empty() || p.L_size() < static_cast<Wide>(max_degree) + 1) fail("L needs at least Δ+1 elements");
    if (p.L.front().lo <= p.K) fail("L must lie above K");
    if (p.K <= 8 * static_cast<Wide>(max_degree)) fail("K must exceed 8Δ");
    if (!check_L_property(p).holds) fail("four-element sets of L are not disjoint modulo K");
    if (p.palette_max > INT64_MAX / 4) fail("palette too large for 64-bit colours");
}

/// The mutable state of one run. Steps must be taken in the certified order.
class Distinguisher {
public:
    Distinguisher(const Graph& g, std::uint32_t r, const PaletteParams& params, TotalColouring base,
                  const RunOptions& options = {})
        : g_(g), r_(r), options_(options), stats_(degree_stats(g)), neighbourhoods_(all_r_neighbourhoods(g, r)),
          k_(narrow(params.k, "k")), K_(narrow(params.K, "K")), palette_max_(narrow(params.palette_max, "palette")),
          anchor_(base.edge), current_(std::move(base)), base_colour_(g.order(), 0), lift_(g.order(), 0),
          target_(g.order(), 0), processed_(g.order(), false), alterations_(g.size(), 0) {}

    const TotalColouring& colouring() const { return current_; }
    const DegreeStats& stats() const { return stats_; }
    std::int64_t k() const { return k_; }
    std::int64_t K() const { return K_; }
    bool processed(Vertex v) const { return processed_[v]; }
    Colour target(Vertex v) const { return target_[v]; }
    Colour base_colour(Vertex v) const { return base_colour_[v]; }
    Colour anchor(EdgeId e) const { return anchor_[e]; }

    /// Admissible c' in [1, K], ascending. `literal` also excludes against processed r-neighbours.
    std::vector<Colour> admissible_base_colours(Vertex v, bool literal) const {
        std::vector<bool> banned(static_cast<std::size_t>(K_), false);
        auto ban = [&](Colour c) { banned[static_cast<std::size_t>(residue(c, K_))] = true; };
        // c' and c'+k must both avoid every residue in `values`
        auto avoid = [&](Colour y) {
            ban(y);
            ban(y - k_);
        };
        auto avoid_vertex = [&](Vertex u) {
            avoid(base_colour_[u]);
            avoid(base_colour_[u] + k_);
        };
        if (literal) {
            for (Vertex u : neighbourhoods_[v])
                if (processed_[u]) avoid_vertex(u);
        } else {
            for (const auto& inc : g_.incidences(v))
                if (processed_[inc.neighbour]) avoid_vertex(inc.neighbour);
        }
        for (const auto& inc : g_.incidences(v)) {
            const Colour c = current_.edge[inc.edge];
            if (stats_.is_small(v)) {
                for (Colour y : {c - k_, c, c + k_, c + 2 * k_}) avoid(y);
            } else if (processed_[inc.neighbour]) {
                avoid(c);
                avoid(c + backward_delta(inc.neighbour));
            } else {
                avoid(c);
                avoid(c + k_);
            }
        }
        std::vector<Colour> out;
        for (Colour c = 1; c <= K_; ++c)
            if (!banned[static_cast<std::size_t>(residue(c, K_))]) out.push_back(c);
        return out;
    }

    /// Edges of v that can shift its sum, grouped by the signed amount they offer.
    struct Providers {
        std::vector<Vertex> plus_K, minus_K, plus_k, minus_k;  ///< neighbour ids, ascending

        std::size_t lattice_size() const {
            return (plus_K.size() + minus_K.size() + 1) * (plus_k.size() + minus_k.size() + 1);
        }
    };

    Providers providers(Vertex v) const {
        Providers p;
        for (const auto& inc : g_.incidences(v)) {
            const Vertex u = inc.neighbour;
            if (!processed_[u]) {
                if (stats_.is_small(v) && stats_.is_big(u))
                    p.plus_K.push_back(u);
                else
                    p.plus_k.push_back(u);
                continue;
            }
            const Colour d = backward_delta(u);
            if (d == K_) p.plus_K.push_back(u);
            else if (d == -K_) p.minus_K.push_back(u);
            else if (d == k_) p.plus_k.push_back(u);
            else p.minus_k.push_back(u);
        }
        return p;
    }

    /// Reachable sums for base colour c': base + iK + jk over the provider rectangle.
    struct SumLattice {
        Colour base = 0;
        std::int64_t i_min = 0, i_max = 0, j_min = 0, j_max = 0;
        std::int64_t K = 0, k = 0;

        Colour at(std::int64_t i, std::int64_t j) const { return base + i * K + j * k; }
        bool contains(Colour w) const {
            for (std::int64_t i = i_min; i <= i_max; ++i) {
                Colour rest = w - base - i * K;
                if (rest % k == 0 && rest / k >= j_min && rest / k <= j_max) return true;
            }
            return false;
        }
    };

    SumLattice achievable_sums(Vertex v, Colour c_prime) const {
        const auto p = providers(v);
        SumLattice s;
        s.base = c_prime;
        for (const auto& inc : g_.incidences(v)) s.base += current_.edge[inc.edge];
        s.i_min = -static_cast<std::int64_t>(p.minus_K.size());
        s.i_max = static_cast<std::int64_t>(p.plus_K.size());
        s.j_min = -static_cast<std::int64_t>(p.minus_k.size());
        s.j_max = static_cast<std::int64_t>(p.plus_k.size());
        s.K = K_;
        s.k = k_;
        return s;
    }

    StepRecord process_vertex(Vertex v) {
        if (processed_[v]) throw InternalError("vertex processed twice");
        StepRecord rec;
        rec.v = v;
        for (Vertex u : neighbourhoods_[v])
            if (processed_[u]) ++rec.backward_r;

        if (g_.degree(v) == 0) {
            commit_vertex(v, 1, 0, 1);
            rec.base_colour = rec.colour = rec.target = 1;
            rec.admissible = static_cast<std::size_t>(K_);
            rec.lattice = 1;
            return rec;
        }

        std::vector<Colour> forbidden;
        for (Vertex u : neighbourhoods_[v])
            if (processed_[u]) forbidden.push_back(target_[u]);
        std::sort(forbidden.begin(), forbidden.end());
        auto is_forbidden = [&](Colour w) { return std::binary_search(forbidden.begin(), forbidden.end(), w); };

        const Providers prov = providers(v);
        rec.lattice = prov.lattice_size();
        Colour edge_sum = 0;
        for (const auto& inc : g_.incidences(v)) edge_sum += current_.edge[inc.edge];
        const auto offsets = ordered_offsets(prov);

        struct Choice {
            Colour c_prime;
            std::uint32_t lift;
            Offset off;
        };
        auto search = [&](const std::vector<Colour>& candidates, std::uint32_t lift) -> std::optional<Choice> {
            for (Colour c : candidates)
                for (const auto& off : offsets)
                    if (!is_forbidden(c + lift * K_ + edge_sum + off.value)) return Choice{c, lift, off};
            return std::nullopt;
        };

        auto admissible = admissible_base_colours(v, options_.literal_r_exclusion);
        rec.admissible = admissible.size();
        std::optional<Choice> choice = search(admissible, 0);
        if (!choice && options_.literal_r_exclusion) {
            admissible = admissible_base_colours(v, false);
            choice = search(admissible, 0);
            rec.fallback = true;
        }
        if (admissible.empty()) throw InternalError("no admissible base colour for vertex " + std::to_string(v + 1));
        if (!choice) {
            rec.fallback = true;
            // Raising the vertex colour by multiples of K keeps every residue; sums
            // eventually clear the finite forbidden set.
            for (std::uint32_t lift = 1; !choice; ++lift) choice = search(admissible, lift);
        }

        const Colour colour = choice->c_prime + choice->lift * K_;
        const Colour w = colour + edge_sum + choice->off.value;
        set_vertex_colour(v, colour);
        apply(v, prov.plus_K, choice->off.i > 0 ? choice->off.i : 0, K_, rec);
        apply(v, prov.minus_K, choice->off.i < 0 ? -choice->off.i : 0, -K_, rec);
        apply(v, prov.plus_k, choice->off.j > 0 ? choice->off.j : 0, k_, rec);
        apply(v, prov.minus_k, choice->off.j < 0 ? -choice->off.j : 0, -k_, rec);
        commit_vertex(v, choice->c_prime, choice->lift, w);
        if (rec.fallback) ++fallbacks_;

        rec.base_colour = choice->c_prime;
        rec.colour = colour;
        rec.target = w;
        rec.lift = choice->lift;
        return rec;
    }

    /// Every violated state invariant, as human-readable strings.
    std::vector<std::string> invariant_violations() const {
        std::vector<std::string> out;
        auto report = [&](const std::string& s) { out.push_back(s); };
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (!processed_[v]) continue;
            const std::string name = "vertex " + std::to_string(v + 1);
            if (weighted_degree(g_, current_, v) != target_[v]) report(name + ": weighted degree drifted from target");
            const Colour off = current_.vertex[v] - base_colour_[v] - lift_[v] * K_;
            if (base_colour_[v] < 1 || base_colour_[v] > K_) report(name + ": base colour outside [1,K]");
            if (off != 0 && off != k_ && off != K_ && off != K_ + k_) report(name + ": colour left its four-element set");
        }
        for (EdgeId e = 0; e < g_.size(); ++e) {
            const std::string name = "edge " + std::to_string(e + 1);
            const std::int64_t rel = residue(current_.edge[e] - anchor_[e], K_);
            if (rel != residue(-k_, K_) && rel != 0 && rel != residue(k_, K_) && rel != residue(2 * k_, K_))
                report(name + ": residue left {l-k, l, l+k, l+2k}");
            if (current_.edge[e] < 1 || current_.edge[e] > palette_max_) report(name + ": colour outside palette");
            if (alterations_[e] > 2) report(name + ": altered more than twice");
        }
        for (const auto& ed : g_.edges()) {
            if (processed_[ed.u] && processed_[ed.v] &&
                residue(current_.vertex[ed.u], K_) == residue(current_.vertex[ed.v], K_))
                report("vertices " + std::to_string(ed.u + 1) + "," + std::to_string(ed.v + 1) + ": equal mod K");
        }
        for (Vertex v = 0; v < g_.order(); ++v) {
            const auto& inc = g_.incidences(v);
            for (std::size_t a = 0; a < inc.size(); ++a) {
                const std::int64_t ra = residue(current_.edge[inc[a].edge], K_);
                if (processed_[v] && ra == residue(current_.vertex[v], K_))
                    report("vertex " + std::to_string(v + 1) + " and an incident edge equal mod K");
                for (std::size_t b = a + 1; b < inc.size(); ++b)
                    if (ra == residue(current_.edge[inc[b].edge], K_))
                        report("edges at vertex " + std::to_string(v + 1) + ": equal mod K");
            }
        }
        return out;
    }

    std::size_t fallback_count() const { return fallbacks_; }

private:
    struct Offset {
        std::int64_t i, j;
        Colour value;
    };

    // Offsets of the provider rectangle by fewest alterations, then value, then i.
    std::vector<Offset> ordered_offsets(const Providers& p) const {
        std::vector<Offset> offs;
        const auto i_lo = -static_cast<std::int64_t>(p.minus_K.size());
        const auto i_hi = static_cast<std::int64_t>(p.plus_K.size());
        const auto j_lo = -static_cast<std::int64_t>(p.minus_k.size());
        const auto j_hi = static_cast<std::int64_t>(p.plus_k.size());
        for (auto i = i_lo; i <= i_hi; ++i)
            for (auto j = j_lo; j <= j_hi; ++j) offs.push_back({i, j, i * K_ + j * k_});
        std::sort(offs.begin(), offs.end(), [](const Offset& a, const Offset& b) {
            const auto ca = std::llabs(a.i) + std::llabs(a.j);
            const auto cb = std::llabs(b.i) + std::llabs(b.j);
            if (ca != cb) return ca < cb;
            if (a.value != b.value) return a.value < b.value;
            return a.i < b.i;
        });
        return offs;
    }

    // Signed edge change offered by the backward edge to processed neighbour u.
    Colour backward_delta(Vertex u) const {
        const Colour off = current_.vertex[u] - base_colour_[u] - lift_[u] * K_;
        if (stats_.is_big(u)) return off < K_ ? -K_ : K_;  // u moves +K or -K
        return (off == 0 || off == K_) ? -k_ : k_;          // u moves +k or -k
    }

    void apply(Vertex v, const std::vector<Vertex>& from, std::int64_t count, Colour delta, StepRecord& rec) {
        for (std::int64_t t = 0; t < count; ++t) {
            const Vertex u = from[static_cast<std::size_t>(t)];
            const auto e = static_cast<EdgeId>(g_.find_edge(v, u));
            current_.edge[e] += delta;
            ++alterations_[e];
            rec.edge_deltas.push_back({e, delta});
            if (processed_[u]) {
                current_.vertex[u] -= delta;
                rec.compensations.push_back({u, -delta});
            }
        }
    }

    void set_vertex_colour(Vertex v, Colour c) { current_.vertex[v] = c; }

    void commit_vertex(Vertex v, Colour c_prime, std::uint32_t lift, Colour target) {
        if (g_.degree(v) == 0) current_.vertex[v] = 1;
        base_colour_[v] = c_prime;
        lift_[v] = lift;
        target_[v] = target;
        processed_[v] = true;
    }

    const Graph& g_;
    std::uint32_t r_;
    RunOptions options_;
    DegreeStats stats_;
    std::vector<std::vector<Vertex>> neighbourhoods_;
    std::int64_t k_, K_, palette_max_;
    std::vector<Colour> anchor_;  ///< ℓ(e)
    TotalColouring current_;      ///< c_t
    std::vector<Colour> base_colour_;
    std::vector<std::int64_t> lift_;
    std::vector<Colour> target_;
    std::vector<bool> processed_;
    std::vector<std::uint8_t> alterations_;
    std::size_t fallbacks_ = 0;
};

/// Replays a trace from its base colouring.
inline TotalColouring replay(const RunTrace& trace) {
    TotalColouring c = trace.base;
    for (const auto& s : trace.steps) {
        c.vertex[s.v] = s.colour;
        for (const auto& d : s.edge_deltas) c.edge[d.edge] += d.delta;
        for (const auto& d : s.compensations) c.vertex[d.vertex] += d.delta;
    }
    return c;
}

/// Palette → base colouring → ordering → sequential recolouring.
/// Graphs with Δ < 2 use the Δ = 2 palette; r = 1 uses r = 2 arithmetic.
inline RunResult run(const Graph& g, std::uint32_t r, std::uint64_t seed, const RunOptions& options = {}) {
    if (r < 1) throw std::invalid_argument("radius must be at least 1");
    RunResult out;
    out.trace.r = r;
    out.trace.param_r = std::max<std::uint32_t>(r, 2);
    out.trace.param_delta = std::max<std::uint32_t>(g.max_degree(), 2);
    if (options.params_override) {
        validate_palette(*options.params_override, g.max_degree());
        out.params = *options.params_override;
    } else {
        out.params = compute_params(out.trace.param_delta, out.trace.param_r);
    }
    out.trace.base = base_colouring(g, out.params);
    out.certificate = resample_until_valid(g, out.trace.param_r, seed, options.max_rounds);

    Distinguisher state(g, r, out.params, out.trace.base, options);
    for (Vertex v : out.certificate.ordering) {
        out.trace.steps.push_back(state.process_vertex(v));
        if (options.check_invariants) {
            for (auto& msg : state.invariant_violations())
                out.trace.invariant_violations.push_back("after vertex " + std::to_string(v + 1) + ": " + msg);
        }
    }
    out.colouring = state.colouring();
    out.trace.fallback_count = state.fallback_count();
    return out;
}

}  // namespace distsum
