#pragma once

#include <pwind/graph.hh>

#include <cstdint>
#include <vector>

namespace pwind
{
    /// T_{d,r}: vertices numbered in breadth-first order, root 0.
    struct RootedTree
    {
        Graph graph;
        int root = 0;
        std::vector<int> depth;
        std::vector<int> parent; // -1 at the root
        std::vector<std::vector<int>> children;
    };

    auto make_tree(int d, int r) -> RootedTree;

    /// The r-by-r wall with its row/column coordinates.
    ///
    /// Rows 0..r-1 are horizontal paths over columns 0..2r-1. Between rows i and i+1
    /// there is a rung at every column c with c = i (mod 2). The two vertices left with
    /// degree one by this rule, (0, 2r-1) and the matching corner of the last row, are
    /// dropped, so every degree is 2 or 3.
    struct Wall
    {
        Graph graph;
        int rows = 0;
        std::vector<std::pair<int, int>> coordinate; // vertex -> (row, column)
        std::vector<std::vector<int>> vertex_at;     // [row][column] -> vertex or -1

        auto at(int row, int column) const -> int;
    };

    auto make_wall(int r) -> Wall;

    auto make_complete(int n) -> Graph;
    auto make_complete_bipartite(int s, int t) -> Graph;
    auto make_path(int n) -> Graph;
    auto make_cycle(int n) -> Graph;

    auto random_graph(int n, double p, std::uint64_t seed) -> Graph;
    auto random_digraph(int n, double p, std::uint64_t seed) -> Digraph;
    /// Each edge gets a length drawn uniformly from 1..max_len.
    auto random_subdivision(const Graph & g, int max_len, std::uint64_t seed) -> Subdivision;
    /// Uniform random labelled tree on n vertices (random Pruefer sequence).
    auto random_tree(int n, std::uint64_t seed) -> Graph;

    /// n pairwise disjoint induced paths in a triangle-free host, every two joined by exactly one edge.
    ///
    /// Path i is x_i, slot(i, j) for j != i in increasing j, y_i; slot(i, j) is adjacent to
    /// slot(j, i). A non-zero seed applies a seeded relabelling of the host.
    struct CrossingPaths
    {
        Graph graph;
        std::vector<Path> paths; // each read from x_L to y_L
    };

    auto crossing_paths_family(int n, std::uint64_t seed = 0) -> CrossingPaths;

    /// Relabels g by a permutation (new index of vertex v is perm[v]).
    auto relabel(const Graph & g, const std::vector<int> & perm) -> Graph;
}
