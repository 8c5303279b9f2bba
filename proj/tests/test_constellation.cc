#include <pwind/constellation.hh>
#include <pwind/generators.hh>

#include "fixtures.hh"
#include "oracles.hh"

#include <gtest/gtest.h>

#include <numeric>

using namespace pwind;

namespace
{
    auto identity(int s) -> std::vector<int>
    {
        std::vector<int> o(s);
        std::iota(o.begin(), o.end(), 0);
        return o;
    }

    // Routes by brute force: induced paths with distinct ends in S and interior off S.
    auto oracle_routes(const Constellation & c) -> std::set<std::vector<int>>
    {
        std::vector<bool> is_s(c.host.order(), false);
        for (int x : c.s_vertices)
            is_s[x] = true;
        std::set<std::vector<int>> out;
        for (auto & p : oracle::induced_paths(c.host, std::vector<bool>(c.host.order(), true))) {
            if (p.size() < 2 || ! is_s[p.front()] || ! is_s[p.back()])
                continue;
            bool inner = true;
            for (std::size_t i = 1; i + 1 < p.size(); ++i)
                inner = inner && ! is_s[p[i]];
            if (inner && p.front() < p.back())
                out.insert(p);
        }
        return out;
    }
}

TEST(Build, SmallestConstellation)
{
    auto c = build_constellation({1, {0}, {{{0}}}});
    EXPECT_EQ(c.host, make_complete(2));
    EXPECT_TRUE(is_d_ample(c, 100));
}

TEST(Build, RejectsBadSpecs)
{
    EXPECT_THROW(build_constellation({1, {2}, {{{}}}}), GraphError);
    EXPECT_THROW(build_constellation({1, {2}, {{{3}}}}), GraphError);
    EXPECT_THROW(build_constellation({2, {2}, {{{0}}}}), GraphError);
}

TEST(Build, InvariantsAndRoundTrip)
{
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        auto spec = fixtures::random_spec(rng);
        auto c = build_constellation(spec);
        EXPECT_EQ(constellation_problem(c), "");
        EXPECT_TRUE(is_stable(c.host, c.s_set()));
        EXPECT_EQ(components_within(c.host, c.host.all() - c.s_set()).size(), spec.lengths.size());
        auto text = serialize_constellation_spec(spec);
        auto again = build_constellation(parse_constellation_spec(text));
        EXPECT_EQ(again.host, c.host);
        EXPECT_EQ(serialize_constellation_spec(spec_of(again)), text);
        auto read = constellation_from(c.host, c.s_set());
        EXPECT_EQ(read.paths.size(), c.paths.size());
    }
}

TEST(Build, ConstellationFromRejectsNonPaths)
{
    auto k4 = make_complete(4);
    EXPECT_THROW(constellation_from(k4, k4.set({0})), GraphError);
}

TEST(Routes, CommonNeighbour)
{
    auto c = build_constellation({2, {0}, {{{0}}, {{0}}}});
    auto routes = enumerate_routes(c);
    ASSERT_EQ(routes.size(), 1u);
    EXPECT_EQ(routes[0].length(), 2);
    EXPECT_FALSE(is_d_ample(c, 1));
    EXPECT_FALSE(no_common_neighbours(c));
}

TEST(Routes, OppositeEndsOfLongPath)
{
    auto c = build_constellation({2, {4}, {{{0}}, {{4}}}});
    auto routes = enumerate_routes(c);
    ASSERT_EQ(routes.size(), 1u);
    EXPECT_EQ(routes[0].length(), 6);
    for (int d = 1; d <= 4; ++d)
        EXPECT_TRUE(is_d_ample(c, d));
    EXPECT_FALSE(is_d_ample(c, 5));
}

TEST(Routes, MatchInducedPathOracle)
{
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        auto c = build_constellation(fixtures::random_spec(rng));
        ASSERT_LE(c.host.order(), 16);
        std::set<std::vector<int>> ours;
        for (auto & r : enumerate_routes(c)) {
            auto p = route_path(c, r);
            EXPECT_TRUE(is_induced_path(c.host, p));
            EXPECT_GE(p.length(), 2);
            EXPECT_EQ(p.length(), r.length());
            ours.insert(p.vertices);
        }
        EXPECT_EQ(ours, oracle_routes(c)) << serialize_constellation_spec(spec_of(c));
    }
}

TEST(Ample, CharacterisationsAgreeAndAreMonotone)
{
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        auto c = build_constellation(fixtures::random_spec(rng));
        EXPECT_EQ(is_d_ample(c, 1), no_common_neighbours(c));
        for (int d = 1; d < 8; ++d)
            if (is_d_ample(c, d + 1))
                EXPECT_TRUE(is_d_ample(c, d));
    }
}

TEST(Interrupted, Fixtures)
{
    auto nested = build_constellation(fixtures::nested_four());
    EXPECT_TRUE(is_d_ample(nested, 1));
    EXPECT_TRUE(is_interrupted_with(nested, identity(4)));
    auto found = find_interrupted_ordering(nested);
    ASSERT_TRUE(found);
    EXPECT_TRUE(is_interrupted_with(nested, *found));

    auto never = build_constellation(fixtures::never_interrupted());
    EXPECT_FALSE(find_interrupted_ordering(never));
    auto o = identity(3);
    do
        EXPECT_FALSE(is_interrupted_with(never, o));
    while (std::next_permutation(o.begin(), o.end()));

    auto pair = build_constellation({2, {3}, {{{0}}, {{3}}}});
    EXPECT_TRUE(find_interrupted_ordering(pair));
    EXPECT_TRUE(is_interrupted_with(pair, {1, 0}));
}

TEST(Zigzag, Fixtures)
{
    auto stairs = build_constellation(fixtures::staircase_four());
    EXPECT_TRUE(is_d_ample(stairs, 1));
    EXPECT_TRUE(is_zigzagged_with(stairs, 1, identity(4)));
    EXPECT_FALSE(is_zigzagged_with(stairs, 1, {0, 2, 1, 3}));
    EXPECT_TRUE(find_zigzagged_ordering(stairs, 1));
    for (int q = 4; q <= 6; ++q)
        EXPECT_TRUE(is_zigzagged_with(stairs, q, {3, 0, 2, 1}));
}

TEST(Zigzag, MonotoneInQ)
{
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        auto c = build_constellation(fixtures::random_spec(rng));
        auto o = identity(c.s());
        for (int q = 1; q < 4; ++q)
            if (is_zigzagged_with(c, q, o))
                EXPECT_TRUE(is_zigzagged_with(c, q + 1, o));
    }
}

TEST(Zigzag, InterruptedDoesNotForceOneZigzagged)
{
    // x_0 and x_2 are joined by a short route that the middle vertex x_1 never touches
    auto c = build_constellation(fixtures::interrupted_not_zigzagged());
    EXPECT_TRUE(is_interrupted_with(c, {0, 1, 2}));
    EXPECT_FALSE(is_zigzagged_with(c, 1, {0, 1, 2}));
    EXPECT_TRUE(is_zigzagged_with(c, 2, {0, 1, 2}));
}

TEST(Finders, MatchExhaustiveOrderings)
{
    Rng rng(14);
    for (int i = 0; i < 100; ++i) {
        auto c = build_constellation(fixtures::random_spec(rng));
        auto o = identity(c.s());
        std::optional<std::vector<int>> first_int, first_zz;
        do {
            if (! first_int && is_interrupted_with(c, o))
                first_int = o;
            if (! first_zz && is_zigzagged_with(c, 1, o))
                first_zz = o;
        } while (std::next_permutation(o.begin(), o.end()));
        EXPECT_EQ(find_interrupted_ordering(c), first_int);
        EXPECT_EQ(find_zigzagged_ordering(c, 1), first_zz);
    }
}
