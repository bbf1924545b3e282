#pragma once

#include "graph.hpp"
#include "ordering.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distsum {

enum class GraphKind { Path, Cycle, Complete, Star, Gnp, RegularIsh };

inline GraphKind parse_kind(const std::string& s) {
    if (s == "path") return GraphKind::Path;
    if (s == "cycle") return GraphKind::Cycle;
    if (s == "complete") return GraphKind::Complete;
    if (s == "star") return GraphKind::Star;
    if (s == "gnp") return GraphKind::Gnp;
    if (s == "regular-ish" || s == "regular") return GraphKind::RegularIsh;
    throw std::invalid_argument("unknown graph kind '" + s + "'");
}

inline const char* to_string(GraphKind k) {
    switch (k) {
        case GraphKind::Path: return "path";
        case GraphKind::Cycle: return "cycle";
        case GraphKind::Complete: return "complete";
        case GraphKind::Star: return "star";
        case GraphKind::Gnp: return "gnp";
        case GraphKind::RegularIsh: return "regular-ish";
    }
    return "?";
}

/// `param` is the edge probability for gnp and the target degree for regular-ish; ignored otherwise.
/// Stars have vertex 1 as centre and n-1 leaves.
inline Graph generate(GraphKind kind, std::size_t n, double param, std::uint64_t seed) {
    using EdgeList = std::vector<std::pair<std::int64_t, std::int64_t>>;
    EdgeList edges;
    const auto N = static_cast<std::int64_t>(n);
    switch (kind) {
        case GraphKind::Path:
            for (std::int64_t i = 1; i < N; ++i) edges.emplace_back(i, i + 1);
            break;
        case GraphKind::Cycle:
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (std::int64_t i = 1; i < N; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(N, 1);
            break;
        case GraphKind::Complete:
            for (std::int64_t i = 1; i <= N; ++i)
                for (std::int64_t j = i + 1; j <= N; ++j) edges.emplace_back(i, j);
            break;
        case GraphKind::Star:
            if (n < 1) throw std::invalid_argument("star needs n >= 1");
            for (std::int64_t i = 2; i <= N; ++i) edges.emplace_back(1, i);
            break;
        case GraphKind::Gnp: {
            if (!(param >= 0.0 && param <= 1.0)) throw std::invalid_argument("gnp needs 0 <= p <= 1");
            std::mt19937_64 rng(seed);
            for (std::int64_t i = 1; i <= N; ++i)
                for (std::int64_t j = i + 1; j <= N; ++j)
                    if (uniform_unit(rng) < param) edges.emplace_back(i, j);
            break;
        }
        case GraphKind::RegularIsh: {
            // Random pairing of d stubs per vertex; loops and repeated pairs are dropped.
            const auto d = static_cast<std::int64_t>(param);
            if (d < 0 || static_cast<double>(d) != param || (n > 0 && d >= N))
                throw std::invalid_argument("regular-ish needs an integer degree 0 <= d < n");
            std::mt19937_64 rng(seed);
            std::vector<std::int64_t> stubs;
            for (std::int64_t v = 1; v <= N; ++v)
                for (std::int64_t t = 0; t < d; ++t) stubs.push_back(v);
            for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rng() % i]);
            std::vector<std::vector<bool>> used(n + 1, std::vector<bool>(n + 1, false));
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                auto a = stubs[i], b = stubs[i + 1];
                if (a == b || used[a][b]) continue;
                used[a][b] = used[b][a] = true;
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            break;
        }
    }
    return build_graph(n, edges);
}

}  // namespace distsum
