#include <pwind/generators.hh>
#include <pwind/graph.hh>
#include <pwind/rng.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

using namespace pwind;

namespace
{
    auto random_subset(int n, std::uint64_t seed, int size) -> VertexSet
    {
        Rng rng(seed);
        std::vector<int> vs(n);
        std::iota(vs.begin(), vs.end(), 0);
        for (int k = n - 1; k > 0; --k)
            std::swap(vs[k], vs[rng.below(k + 1)]);
        vs.resize(size);
        return VertexSet::of(n, vs);
    }
}

TEST(InducedSubgraph, CliqueSubset)
{
    auto sub = induced_subgraph(make_complete(3), VertexSet::of(3, {0, 1}));
    EXPECT_EQ(sub.graph, make_complete(2));
}

TEST(InducedSubgraph, PathSubset)
{
    auto sub = induced_subgraph(make_path(4), VertexSet::of(4, {0, 2, 3}));
    EXPECT_EQ(sub.graph.order(), 3);
    EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{1, 2}}));
    EXPECT_EQ(sub.new_to_old, (std::vector<int>{0, 2, 3}));
}

TEST(InducedSubgraph, WallSubsetsMatchEdgeFilter)
{
    auto w = make_wall(4);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto x = random_subset(w.graph.order(), seed, 6);
        auto sub = induced_subgraph(w.graph, x);
        auto got = sub.graph.edges();
        auto expected = oracle::filtered_edges(w.graph, x.to_vector());
        EXPECT_EQ(std::set<Edge>(got.begin(), got.end()), expected);
    }
}

TEST(InducedSubgraph, RejectsOutOfRange)
{
    EXPECT_THROW(VertexSet::of(3, {5}), std::out_of_range);
}

TEST(Anticomplete, Basics)
{
    auto p3 = make_path(3);
    EXPECT_TRUE(anticomplete(p3, p3.none(), p3.all()));
    EXPECT_TRUE(anticomplete(p3, p3.set({0}), p3.set({2})));
    EXPECT_FALSE(anticomplete(p3, p3.set({0}), p3.set({1, 2})));
    EXPECT_FALSE(anticomplete(p3, p3.set({0, 2}), p3.set({2})));
}

TEST(Anticomplete, Symmetric)
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto g = random_graph(10, 0.3, seed);
        auto x = random_subset(10, seed * 7, 3), y = random_subset(10, seed * 11, 4);
        EXPECT_EQ(anticomplete(g, x, y), anticomplete(g, y, x));
    }
}

TEST(Neighborhood, Basics)
{
    auto star = make_complete_bipartite(1, 3);
    EXPECT_EQ(neighborhood(star, star.set({0})), star.set({1, 2, 3}));
    auto p5 = make_path(5);
    EXPECT_EQ(neighborhood(p5, p5.set({2})), p5.set({1, 3}));
}

TEST(Neighborhood, WallDegreeThreeVertex)
{
    auto w = make_wall(4);
    auto a = oracle::adj_matrix(w.graph);
    for (int v = 0; v < w.graph.order(); ++v) {
        if (w.graph.degree(v) != 3)
            continue;
        auto nb = neighborhood(w.graph, w.graph.set({v}));
        EXPECT_EQ(nb.size(), 3);
        for (int u = 0; u < w.graph.order(); ++u)
            EXPECT_EQ(nb.contains(u), static_cast<bool>(a[u][v]));
    }
}

TEST(LineGraph, SmallCases)
{
    EXPECT_EQ(line_graph(make_path(4)).graph, make_path(3));
    EXPECT_EQ(line_graph(make_complete(3)).graph, make_complete(3));
    EXPECT_EQ(line_graph(make_complete_bipartite(1, 3)).graph, make_complete(3));
}

TEST(LineGraph, DegreeLaw)
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = random_graph(12, 0.3, seed);
        auto lg = line_graph(g);
        for (int i = 0; i < lg.graph.order(); ++i) {
            auto [u, v] = lg.edge_of_vertex[i];
            EXPECT_EQ(lg.graph.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }
}

TEST(Subdivide, Basics)
{
    auto k2 = make_complete(2);
    EXPECT_EQ(subdivide(k2, {{{0, 1}, 1}}).graph, k2);
    EXPECT_TRUE(oracle::isomorphic(subdivide(k2, {{{0, 1}, 3}}).graph, make_path(4)));
    EXPECT_THROW(subdivide(k2, {{{0, 1}, 0}}), GraphError);
}

TEST(Subdivide, BinaryTreeCounts)
{
    auto t = make_tree(2, 2);
    std::map<Edge, int> lengths;
    for (auto e : t.graph.edges())
        lengths[e] = 2;
    auto s = subdivide(t.graph, lengths).graph;
    EXPECT_EQ(s.order(), 13);
    std::multiset<int> degrees;
    for (int v = 0; v < s.order(); ++v)
        degrees.insert(s.degree(v));
    EXPECT_EQ(degrees, (std::multiset<int>{1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3}));
}

TEST(Subdivide, AllOnesIsIdentity)
{
    auto g = random_graph(9, 0.4, 3);
    std::map<Edge, int> ones;
    for (auto e : g.edges())
        ones[e] = 1;
    EXPECT_EQ(subdivide(g, ones).graph, g);
}

TEST(ContractEdge, SmallCases)
{
    EXPECT_EQ(contract_edge(make_path(3), {0, 1}), make_path(2));
    EXPECT_EQ(contract_edge(make_path(3), {1, 2}), make_path(2));
    EXPECT_TRUE(oracle::isomorphic(contract_edge(make_cycle(4), {0, 1}), make_complete(3)));
    EXPECT_EQ(contract_edge(make_complete(3), {0, 2}), make_complete(2));
    EXPECT_THROW(contract_edge(make_path(3), {0, 2}), GraphError);
}

TEST(ContractEdge, UndoesSingleSubdivision)
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = random_graph(8, 0.4, seed);
        auto edges = g.edges();
        if (edges.empty())
            continue;
        auto e = edges[seed % edges.size()];
        auto s = subdivide(g, {{e, 2}});
        auto & path = s.edge_paths.at(e);
        auto back = contract_edge(s.graph, {std::min(path[0], path[1]), std::max(path[0], path[1])});
        EXPECT_TRUE(oracle::isomorphic(back, g));
    }
}

TEST(XYPath, ZeroLengthWhenSetsMeet)
{
    auto g = random_graph(8, 0.3, 5);
    auto p = find_xy_path(g, g.set({1, 4, 6}), g.set({6, 4}));
    ASSERT_TRUE(p);
    EXPECT_EQ(p->vertices, (std::vector<int>{4}));
}

TEST(XYPath, UniquePath)
{
    auto p5 = make_path(5);
    auto p = find_xy_path(p5, p5.set({0}), p5.set({4}));
    ASSERT_TRUE(p);
    EXPECT_EQ(p->vertices, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(XYPath, RandomAgainstReachability)
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto g = random_graph(12, 0.18, seed);
        auto x = random_subset(12, seed * 3, 2), y = random_subset(12, seed * 5, 2);
        auto p = find_xy_path(g, x, y);

        // reachability from X to Y
        std::vector<bool> seen(12, false), xs(12), ys(12);
        std::vector<int> queue;
        for (int v = 0; v < 12; ++v) {
            xs[v] = x.contains(v);
            ys[v] = y.contains(v);
            if (xs[v]) {
                seen[v] = true;
                queue.push_back(v);
            }
        }
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int u : g.neighbors(queue[h]))
                if (! seen[u]) {
                    seen[u] = true;
                    queue.push_back(u);
                }
        bool reachable = false;
        for (int v = 0; v < 12; ++v)
            reachable = reachable || (seen[v] && ys[v]);

        EXPECT_EQ(p.has_value(), reachable) << "seed " << seed;
        if (p) {
            EXPECT_TRUE(oracle::xy_path(g, xs, ys, p->vertices)) << "seed " << seed;
            EXPECT_TRUE(is_xy_path(g, x, y, *p));
        }
    }
}

TEST(Predicates, StableAndClique)
{
    auto k3 = make_complete(3);
    EXPECT_FALSE(is_stable(k3, k3.set({0, 1})));
    EXPECT_TRUE(is_clique(k3, k3.all()));
    EXPECT_TRUE(is_stable(make_path(3), VertexSet::of(3, {0, 2})));
}

TEST(Components, ListedBySmallestVertex)
{
    std::vector<Edge> e{{0, 3}, {1, 2}};
    Graph g(5, e);
    EXPECT_EQ(components(g), (std::vector<std::vector<int>>{{0, 3}, {1, 2}, {4}}));
}

TEST(Serialization, RoundTrip)
{
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        auto g = random_graph(1 + seed % 17, 0.3, seed);
        EXPECT_EQ(parse_graph(serialize_graph(g)), g);
    }
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto d = random_digraph(1 + seed % 11, 0.3, seed);
        EXPECT_EQ(parse_digraph(serialize_digraph(d)), d);
    }
}

TEST(Serialization, ExactText)
{
    EXPECT_EQ(serialize_graph(make_path(3)), "3 2\n0 1\n1 2\n");
    EXPECT_EQ(parse_graph("# comment\n3 1\n1 2\n"), Graph(3, std::vector<Edge>{{1, 2}}));
    EXPECT_THROW(parse_graph("3 1\n1 1\n"), GraphError);
    EXPECT_THROW(parse_graph("3 2\n0 1\n"), GraphError);
}
