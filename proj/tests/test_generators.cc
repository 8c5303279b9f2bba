#include <pwind/generators.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

using namespace pwind;

TEST(Tree, Counts)
{
    EXPECT_EQ(make_tree(2, 0).graph.order(), 1);
    EXPECT_EQ(make_tree(3, 2).graph.order(), 13);
    for (int d = 1; d <= 5; ++d)
        for (int r = 0; r <= 5; ++r) {
            auto t = make_tree(d, r);
            long long bound = 1;
            for (int i = 0; i < r; ++i)
                bound *= d;
            EXPECT_LE(t.graph.order(), r * bound + 1);
            EXPECT_TRUE(is_tree(t.graph));
        }
}

TEST(Tree, ShapeAndLeaves)
{
    for (int d = 1; d <= 4; ++d)
        for (int r = 1; r <= 4; ++r) {
            auto t = make_tree(d, r);
            int leaves = 0, max_depth = 0;
            for (int v = 0; v < t.graph.order(); ++v) {
                max_depth = std::max(max_depth, t.depth[v]);
                if (v == t.root)
                    EXPECT_EQ(t.graph.degree(v), d);
                else if (t.depth[v] == r) {
                    ++leaves;
                    EXPECT_EQ(t.graph.degree(v), 1);
                }
                else
                    EXPECT_EQ(t.graph.degree(v), d + 1);
            }
            int expected = 1;
            for (int i = 0; i < r; ++i)
                expected *= d;
            EXPECT_EQ(leaves, expected);
            EXPECT_EQ(max_depth, r);
        }
}

TEST(Wall, SmallWall)
{
    auto w = make_wall(2);
    EXPECT_EQ(w.graph.order(), 6);
    for (int v = 0; v < w.graph.order(); ++v)
        EXPECT_LE(w.graph.degree(v), 3);
}

TEST(Wall, MatchesBrickConstruction)
{
    for (int r = 2; r <= 8; ++r) {
        auto w = make_wall(r);
        auto bricks = oracle::brick_wall(r);
        EXPECT_EQ(static_cast<std::size_t>(w.graph.order()), bricks.vertices.size());
        EXPECT_EQ(static_cast<std::size_t>(w.graph.size()), bricks.edges.size());
        std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> ours;
        for (auto [u, v] : w.graph.edges())
            ours.insert({std::min(w.coordinate[u], w.coordinate[v]), std::max(w.coordinate[u], w.coordinate[v])});
        EXPECT_EQ(ours, bricks.edges);
    }
    auto w8 = make_wall(8);
    EXPECT_EQ(w8.graph.order(), 126);
    EXPECT_EQ(w8.graph.size(), 174);
}

TEST(Wall, DegreesAndBipartite)
{
    for (int r = 2; r <= 8; ++r) {
        auto w = make_wall(r);
        for (int v = 0; v < w.graph.order(); ++v)
            EXPECT_TRUE(w.graph.degree(v) == 2 || w.graph.degree(v) == 3);
        EXPECT_TRUE(oracle::two_colourable(w.graph));
        EXPECT_TRUE(is_connected_set(w.graph, w.graph.all()));
        for (int i = 0; i < r; ++i) {
            std::vector<int> row;
            for (int c = 0; c < 2 * r; ++c)
                if (w.at(i, c) >= 0)
                    row.push_back(w.at(i, c));
            EXPECT_TRUE(is_induced_path(w.graph, Path{row}));
        }
    }
}

TEST(Complete, Counts)
{
    EXPECT_EQ(make_complete(1).order(), 1);
    auto k23 = make_complete_bipartite(2, 3);
    EXPECT_EQ(k23.order(), 5);
    EXPECT_EQ(k23.size(), 6);
    for (int n = 1; n <= 10; ++n)
        EXPECT_EQ(make_complete(n).size(), n * (n - 1) / 2);
}

TEST(CrossingPaths, Properties)
{
    for (int n : {2, 10, 100}) {
        auto fam = crossing_paths_family(n);
        EXPECT_LE(fam.graph.order(), n * (n + 1));
        EXPECT_FALSE(oracle::has_triangle(fam.graph));
        ASSERT_EQ(static_cast<int>(fam.paths.size()), n);
        for (int i = 0; i < n; ++i) {
            EXPECT_TRUE(is_induced_path(fam.graph, fam.paths[i]));
            for (int j = i + 1; j < n; ++j) {
                auto a = fam.paths[i].vertex_set(fam.graph.order()), b = fam.paths[j].vertex_set(fam.graph.order());
                EXPECT_FALSE(a.intersects(b));
                EXPECT_FALSE(anticomplete(fam.graph, a, b));
            }
        }
    }
    EXPECT_EQ(crossing_paths_family(2).graph.size(), 5);
}

TEST(CrossingPaths, SeededRelabelIsDeterministic)
{
    auto a = crossing_paths_family(12, 7), b = crossing_paths_family(12, 7);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.paths, b.paths);
    // the seeded family is the plain one pushed through the vertex map read off the paths
    auto plain = crossing_paths_family(4), mixed = crossing_paths_family(4, 3);
    std::vector<int> perm(plain.graph.order());
    for (int i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < plain.paths[i].vertices.size(); ++k)
            perm[plain.paths[i].vertices[k]] = mixed.paths[i].vertices[k];
    EXPECT_EQ(relabel(plain.graph, perm), mixed.graph);
    EXPECT_NE(plain.graph, mixed.graph);
}

TEST(Random, Extremes)
{
    EXPECT_EQ(random_graph(9, 0.0, 4).size(), 0);
    EXPECT_EQ(random_graph(9, 1.0, 4), make_complete(9));
    EXPECT_EQ(random_graph(20, 0.3, 99), random_graph(20, 0.3, 99));
    EXPECT_EQ(random_digraph(20, 0.3, 99), random_digraph(20, 0.3, 99));
}

TEST(Random, SubdivisionLengths)
{
    auto t = make_tree(2, 3).graph;
    auto s = random_subdivision(t, 4, 11);
    for (auto & [e, path] : s.edge_paths) {
        EXPECT_GE(path.size(), 2u);
        EXPECT_LE(path.size(), 5u);
    }
    EXPECT_TRUE(is_tree(s.graph));
    EXPECT_EQ(random_subdivision(t, 4, 11).graph, s.graph);
}

TEST(Random, Trees)
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
        EXPECT_TRUE(is_tree(random_tree(1 + seed % 20, seed)));
}
