#pragma once

// Hand-built constellation specs shared by unit and acceptance tests.

#include <pwind/constellation.hh>
#include <pwind/rng.hh>

namespace fixtures
{
    using pwind::ConstellationSpec;

    /// One path 0..4; x_0 at 0, x_1 at 4, x_2 at 2, x_3 at 1 and 3. Ample, and interrupted in index order.
    inline auto nested_four() -> ConstellationSpec
    {
        return {4, {4}, {{{0}}, {{4}}, {{2}}, {{1, 3}}}};
    }

    /// One path 0..3 with x_i at position i. Ample and 1-zigzagged in index order.
    inline auto staircase_four() -> ConstellationSpec
    {
        return {4, {3}, {{{0}}, {{1}}, {{2}}, {{3}}}};
    }

    /// Three S-vertices on one path, every pair joined by a route avoiding the third.
    inline auto never_interrupted() -> ConstellationSpec
    {
        return {3, {8}, {{{0, 8}}, {{2}}, {{6}}}};
    }

    /// Interrupted in index order but not 1-zigzagged in it: the route x_0..x_2 misses x_1.
    inline auto interrupted_not_zigzagged() -> ConstellationSpec
    {
        return {3, {10}, {{{0}}, {{10}}, {{2}}}};
    }

    /// Random spec with host at most 16 vertices.
    inline auto random_spec(pwind::Rng & rng) -> ConstellationSpec
    {
        ConstellationSpec spec;
        spec.s = 2 + static_cast<int>(rng.below(3));
        int l = 1 + static_cast<int>(rng.below(2));
        int budget = 16 - spec.s;
        for (int j = 0; j < l; ++j) {
            int len = static_cast<int>(rng.below(std::min(6, budget / l)));
            spec.lengths.push_back(len);
        }
        spec.attach.assign(spec.s, {});
        for (int i = 0; i < spec.s; ++i)
            for (int j = 0; j < l; ++j) {
                std::vector<int> pos;
                for (int p = 0; p <= spec.lengths[j]; ++p)
                    if (rng.chance(0.3))
                        pos.push_back(p);
                if (pos.empty())
                    pos.push_back(static_cast<int>(rng.below(spec.lengths[j] + 1)));
                spec.attach[i].push_back(pos);
            }
        return spec;
    }
}
