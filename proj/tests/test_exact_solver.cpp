#include <distsum/exact_solver.hpp>
#include <distsum/generators.hpp>
#include <distsum/verifier.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace distsum;

namespace {

std::vector<Graph> tiny_graphs() {
    return {build_graph(1, {}),
            build_graph(2, {{1, 2}}),
            build_graph(3, {{1, 2}, {2, 3}}),
            build_graph(3, {{1, 2}, {2, 3}, {1, 3}}),
            build_graph(4, {{1, 2}, {1, 3}, {1, 4}}),
            build_graph(4, {{1, 2}, {2, 3}, {3, 4}}),
            build_graph(4, {{1, 2}, {3, 4}})};
}

}  // namespace

TEST(ExactChi, SingleEdgeNeedsThree) {
    auto g = build_graph(2, {{1, 2}});
    for (std::uint32_t r = 1; r <= 3; ++r) {
        auto res = exact_chi(g, r, 10);
        ASSERT_TRUE(res.solved);
        EXPECT_EQ(res.chi, 3u);
    }
    EXPECT_FALSE(is_feasible(g, 1, 2).feasible);
    EXPECT_TRUE(is_feasible(g, 1, 3).feasible);
}

TEST(ExactChi, PathOfThree) {
    auto g = build_graph(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(exact_chi(g, 1, 10).chi, 3u);
    EXPECT_EQ(exact_chi(g, 2, 10).chi, 4u);
}

TEST(ExactChi, EdgelessGraphUsesOneColour) {
    auto res = exact_chi(build_graph(3, {}), 2, 5);
    ASSERT_TRUE(res.solved);
    EXPECT_EQ(res.chi, 1u);
    EXPECT_EQ(res.witness.vertex, (std::vector<Colour>{1, 1, 1}));
}

TEST(ExactChi, LimitTooSmallIsUnsolved) {
    auto res = exact_chi(generate(GraphKind::Cycle, 5, 0, 0), 2, 3);
    EXPECT_FALSE(res.solved);
}

TEST(ExactChi, WitnessesVerifyWithinPalette) {
    for (const auto& g : tiny_graphs())
        for (std::uint32_t r = 1; r <= 3; ++r) {
            auto res = exact_chi(g, r, 8);
            ASSERT_TRUE(res.solved);
            auto rep = verify(g, res.witness, r, res.chi);
            EXPECT_TRUE(rep.pass());
            EXPECT_GE(res.chi, g.max_degree() + 1);
        }
}

TEST(ExactChi, AgreesWithExhaustiveEnumeration) {
    for (const auto& g : tiny_graphs())
        for (std::uint32_t r = 1; r <= 3; ++r) EXPECT_EQ(exact_chi(g, r, 8).chi, oracle::exhaustive_chi(g, r, 8));
}

TEST(ExactChi, MonotoneInRadius) {
    for (std::size_t n = 4; n <= 6; ++n) {
        auto g = generate(GraphKind::Path, n, 0, 0);
        std::uint32_t prev = 0;
        for (std::uint32_t r = 1; r <= n; ++r) {
            auto res = exact_chi(g, r, 12);
            ASSERT_TRUE(res.solved);
            EXPECT_GE(res.chi, prev);
            prev = res.chi;
        }
    }
}

TEST(IsFeasible, MonotoneInPalette) {
    auto g = generate(GraphKind::Cycle, 4, 0, 0);
    bool seen = false;
    for (std::uint32_t p = 1; p <= 7; ++p) {
        const bool f = is_feasible(g, 2, p).feasible;
        if (seen) { EXPECT_TRUE(f); }
        seen = seen || f;
    }
    EXPECT_TRUE(seen);
}
