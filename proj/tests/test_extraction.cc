#include <pwind/extraction.hh>
#include <pwind/generators.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

using namespace pwind;

namespace
{
    // Singleton A-sets 0..n-1 and singleton family members after them.
    struct Planted
    {
        Graph g;
        std::vector<VertexSet> a_sets;
        std::vector<std::vector<VertexSet>> families;
    };

    auto planted(int n, int family_size, const std::vector<std::pair<int, int>> & extra) -> Planted
    {
        int total = n + n * family_size;
        std::vector<Edge> edges;
        for (auto [u, v] : extra)
            edges.emplace_back(std::min(u, v), std::max(u, v));
        Planted p{Graph(total, edges), {}, {}};
        for (int i = 0; i < n; ++i) {
            p.a_sets.push_back(VertexSet::of(total, {i}));
            std::vector<VertexSet> fam;
            for (int k = 0; k < family_size; ++k)
                fam.push_back(VertexSet::of(total, {n + i * family_size + k}));
            p.families.push_back(fam);
        }
        return p;
    }

    auto member(int n, int family_size, int i, int k) -> int { return n + i * family_size + k; }

    auto disjoint_paths_seedling(int count) -> Seedling
    {
        std::vector<Edge> edges;
        Seedling sd;
        int next = 1;
        std::vector<Path> paths;
        for (int i = 0; i < count; ++i) {
            Path p{{next, next + 1}};
            edges.emplace_back(0, next);
            edges.emplace_back(next, next + 1);
            next += 2;
            paths.push_back(p);
        }
        Graph g(next, edges);
        sd = Seedling{g, Path{{0}}, paths, g.none()};
        for (auto & p : paths)
            sd.y.insert(p.back());
        return sd;
    }
}

TEST(BigRamsey, AllAnticompleteSucceedsImmediately)
{
    auto p = planted(4, 2, {});
    Budget b;
    auto res = bigramsey_extract(p.g, p.a_sets, p.families, 1, 1, 2, b);
    ASSERT_TRUE(res.is_found());
    EXPECT_TRUE(verify_bigramsey(p.g, p.a_sets, p.families, 1, 1, *res.witness).valid);
}

TEST(BigRamsey, PlantedInteractionIsAvoided)
{
    int n = 4, f = 3;
    // Member 0 of family 0 touches member 0 of family 1, and A_2 touches member 1 of family 3.
    auto p = planted(n, f, {{member(n, f, 0, 0), member(n, f, 1, 0)}, {2, member(n, f, 3, 1)}});
    Budget b;
    auto res = bigramsey_extract(p.g, p.a_sets, p.families, 1, 1, 2, b);
    ASSERT_TRUE(res.is_found());
    EXPECT_TRUE(verify_bigramsey(p.g, p.a_sets, p.families, 1, 1, *res.witness).valid);
}

TEST(BigRamsey, TwoGroupsWithTEqualOne)
{
    int n = 4, f = 2;
    // Family 0 touches A_1 at every member, so 0 and 1 cannot both be chosen.
    auto p = planted(n, f, {{member(n, f, 0, 0), 1}, {member(n, f, 0, 1), 1}});
    Budget b;
    auto res = bigramsey_extract(p.g, p.a_sets, p.families, 2, 1, 1, b);
    ASSERT_TRUE(res.is_found());
    auto c = verify_bigramsey(p.g, p.a_sets, p.families, 2, 1, *res.witness);
    EXPECT_TRUE(c.valid) << c.reason;
}

TEST(BigRamsey, TouchingASetsThrow)
{
    auto p = planted(4, 2, {{0, 1}});
    Budget b;
    EXPECT_THROW(bigramsey_extract(p.g, p.a_sets, p.families, 1, 1, 2, b), GraphError);
    auto q = planted(4, 2, {{member(4, 2, 0, 0), member(4, 2, 0, 1)}});
    EXPECT_THROW(bigramsey_extract(q.g, q.a_sets, q.families, 1, 1, 2, b), GraphError);
}

TEST(Magic, CrossingFamilyAtTheStatedBound)
{
    auto cp = crossing_paths_family(100);
    Budget b;
    auto res = magic_extract(cp.graph, cp.paths, 2, 1, 1, b);
    ASSERT_TRUE(res.is_found());
    auto c = verify_magic(cp.graph, cp.paths, 1, 1, *res.witness);
    EXPECT_TRUE(c.valid) << c.reason;
}

TEST(Magic, SeededCrossingFamiliesLargerTargets)
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto cp = crossing_paths_family(30, seed);
        Budget b;
        auto res = magic_extract(cp.graph, cp.paths, 2, 2, 1, b);
        if (res.is_found())
            EXPECT_TRUE(verify_magic(cp.graph, cp.paths, 2, 1, *res.witness).valid);
        else
            EXPECT_TRUE(res.is_absent());
    }
}

TEST(Magic, FirstBranchOnTwoEdges)
{
    // L = 0-1, L' = 2-3, and x_L = 0 sees y_L' = 3.
    std::vector<Edge> e{{0, 1}, {2, 3}, {0, 3}};
    Graph g(4, e);
    std::vector<Path> l0{Path{{0, 1}}, Path{{2, 3}}};
    Budget b;
    auto res = magic_extract(g, l0, 2, 1, 1, b);
    ASSERT_TRUE(res.is_found());
    EXPECT_EQ(res.witness->branch, 1);
    EXPECT_EQ(res.witness->chosen, std::vector<int>{0});
    EXPECT_EQ(res.witness->w[0], std::vector<int>{3});
    EXPECT_TRUE(verify_magic(g, l0, 1, 1, *res.witness).valid);
}

TEST(Magic, SingleVertexPathsCannotCarryAMarker)
{
    std::vector<Edge> e{{0, 1}};
    Graph g(2, e);
    std::vector<Path> l0{Path{{0}}, Path{{1}}};
    Budget b;
    EXPECT_TRUE(magic_extract(g, l0, 2, 1, 1, b).is_absent());
}

TEST(Magic, AnticompletePathsThrow)
{
    std::vector<Edge> e{{0, 1}, {2, 3}};
    Graph g(4, e);
    std::vector<Path> l0{Path{{0, 1}}, Path{{2, 3}}};
    Budget b;
    EXPECT_THROW(magic_extract(g, l0, 2, 1, 1, b), GraphError);
}

TEST(Grow, BroomGivesTwoChildren)
{
    auto sd = broom_seedling(14);
    Budget b;
    auto res = grow_seedling(sd, 2, 2, 1, 10, b);
    ASSERT_EQ(res.outcome, Outcome::Found);
    ASSERT_EQ(res.children.size(), 2u);
    auto c = verify_children(sd, res.children, 1);
    EXPECT_TRUE(c.valid) << c.reason;
    auto a = sd.a_set();
    for (auto & child : res.children) {
        EXPECT_FALSE(anticomplete(sd.host, a, child.a_set()));
        EXPECT_TRUE(anticomplete(sd.host, a, child.path_vertices()));
        EXPECT_TRUE(check_seedling_avoiding(child, a).valid);
    }
    EXPECT_TRUE(anticomplete(sd.host, res.children[0].a_set(), res.children[1].a_set()));
}

TEST(Grow, SingleChild)
{
    auto sd = broom_seedling(10);
    Budget b;
    auto res = grow_seedling(sd, 2, 1, 1, 10, b);
    ASSERT_EQ(res.outcome, Outcome::Found);
    ASSERT_EQ(res.children.size(), 1u);
    EXPECT_TRUE(check_seedling_avoiding(res.children[0], sd.a_set()).valid);
}

TEST(Grow, AnticompleteMembersReportWitness)
{
    auto sd = disjoint_paths_seedling(3);
    Budget b;
    auto res = grow_seedling(sd, 2, 1, 1, 2, b);
    EXPECT_EQ(res.outcome, Outcome::Absent);
    ASSERT_EQ(res.non_rigid_witness.size(), 2u);
    EXPECT_TRUE(anticomplete(sd.host, res.non_rigid_witness[0].vertex_set(sd.host.order()),
        res.non_rigid_witness[1].vertex_set(sd.host.order())));
    Budget b2;
    EXPECT_EQ(is_rigid(sd, 2, b2).verdict, Rigidity::NotRigid);
}

TEST(Grow, RigidityFilterDiscardsChildren)
{
    auto sd = broom_seedling(14);
    Budget b;
    // Every child has exactly one path, so no child is rigid at level one.
    auto res = grow_seedling(sd, 2, 2, 1, 10, b, GrowOptions{1});
    EXPECT_EQ(res.outcome, Outcome::Absent);
}

TEST(Tree, BaseCaseOnRandomSeedlings)
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto sd = random_seedling(2, 4, 4, 0.3, seed);
        Budget b;
        auto res = seedling_to_tree(sd, 2, 1, 2, 5, b);
        ASSERT_TRUE(res.is_found()) << seed;
        EXPECT_EQ(res.witness->branch[0], sd.a_set());
        EXPECT_TRUE(verify_tree_model(sd, *res.witness).valid);
    }
}

TEST(Tree, BaseCaseWithAdjacentEndsIsAbsent)
{
    std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}};
    Graph g(3, e);
    Seedling sd{g, Path{{0}}, {Path{{1}}, Path{{2}}}, g.set({1, 2})};
    ASSERT_TRUE(check_seedling(sd).valid);
    Budget b;
    EXPECT_TRUE(seedling_to_tree(sd, 2, 1, 2, 5, b).is_absent());
}

TEST(Tree, TwoLevelBroomGivesT22)
{
    auto sd = two_level_broom();
    Budget b;
    auto res = seedling_to_tree(sd, 2, 2, 2, 2, b);
    ASSERT_TRUE(res.is_found());
    auto c = verify_tree_model(sd, *res.witness);
    EXPECT_TRUE(c.valid) << c.reason;
    EXPECT_EQ(res.witness->pattern.order(), 7);
}

TEST(Forest, ShapeAndEmbedding)
{
    std::vector<Edge> e{{0, 1}, {2, 3}};
    Graph h(4, e);
    EXPECT_EQ(forest_shape(h), (std::pair<int, int>{2, 2}));
    auto emb = embed_forest_in_tree(h, 2, 2);
    ASSERT_TRUE(emb);
    EXPECT_TRUE(verify_embedding(make_tree(2, 2).graph, h, *emb));
    EXPECT_FALSE(embed_forest_in_tree(h, 1, 2));
    EXPECT_THROW(embed_forest_in_tree(make_cycle(4), 4, 4), GraphError);
}

TEST(Forest, RandomForestsFitTheirOrder)
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int h = 1 + static_cast<int>(seed % 5);
        auto t = random_tree(h, seed);
        std::vector<Edge> kept;
        for (auto & edge : t.edges())
            if ((edge.first + edge.second + seed) % 3 != 0)
                kept.push_back(edge);
        Graph forest(h, kept);
        auto emb = embed_forest_in_tree(forest, h, h);
        ASSERT_TRUE(emb);
        EXPECT_TRUE(verify_embedding(make_tree(h, h).graph, forest, *emb));
    }
}

TEST(Driver, CompleteGraphGivesClique)
{
    auto cert = main_driver(make_complete(5), 4, make_path(3));
    EXPECT_EQ(cert.kind, DriverCertificate::Kind::Clique);
    EXPECT_EQ(cert.clique.size(), 5u);
}

TEST(Driver, BinaryTreeContainsBranchingTreeMinusLeaf)
{
    auto t42 = make_tree(4, 2);
    int leaf = t42.graph.order() - 1;
    std::vector<Edge> kept;
    for (auto & e : t42.graph.edges())
        if (e.second != leaf)
            kept.push_back(e);
    Graph h(leaf, kept);
    auto cert = main_driver(make_tree(2, 4).graph, 2, h);
    ASSERT_EQ(cert.kind, DriverCertificate::Kind::HModel);
    EXPECT_TRUE(verify_model(*cert.model).valid);
}

TEST(Driver, SixCycleContainsP4)
{
    auto cert = main_driver(make_cycle(6), 2, make_path(4));
    ASSERT_EQ(cert.kind, DriverCertificate::Kind::HModel);
    EXPECT_TRUE(verify_model(*cert.model).valid);
}

TEST(Driver, SeedlingRoute)
{
    auto sd = two_level_broom();
    std::vector<Edge> e{{0, 1}, {2, 3}};
    DriverBudgets budgets;
    budgets.direct = 0;
    auto cert = main_driver(sd.host, 2, Graph(4, e), budgets, sd);
    ASSERT_EQ(cert.kind, DriverCertificate::Kind::HModel);
    EXPECT_EQ(cert.route, "seedling-to-tree");
    EXPECT_TRUE(verify_model(*cert.model).valid);
}

TEST(Driver, CyclicPatternThrows)
{
    EXPECT_THROW(main_driver(make_path(3), 2, make_cycle(3)), GraphError);
}
