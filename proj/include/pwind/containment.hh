#pragma once

#include <pwind/graph.hh>
#include <pwind/search.hh>

#include <string>
#include <vector>

namespace pwind
{
    /// Branch sets for the vertices of a pattern inside a host.
    struct ModelAssignment
    {
        Graph host;
        Graph pattern;
        std::vector<VertexSet> branch; // indexed by pattern vertex
        bool induced = true;
    };

    struct ModelCheck
    {
        bool valid = false;
        std::string reason;
    };

    auto verify_model(const ModelAssignment & m) -> ModelCheck;

    /// Injective map pattern -> host.
    struct Embedding
    {
        std::vector<int> image;
    };

    /// Checks the embedding is injective and preserves adjacency and non-adjacency.
    auto verify_embedding(const Graph & host, const Graph & pattern, const Embedding & e) -> bool;

    auto find_induced_minor(const Graph & g, const Graph & h, Budget & budget) -> SearchResult<ModelAssignment>;
    auto find_induced_subgraph(const Graph & g, const Graph & h, Budget & budget) -> SearchResult<Embedding>;

    struct TreeInWall
    {
        Graph host;    // the wall, or its line graph
        Graph pattern; // the subdivided tree, or its line graph
        Embedding witness;
    };

    /// A proper subdivision of T_{2,r} as an induced subgraph of W_{2^r x 2^r}, built from wall coordinates.
    auto obs_trees_a(int r) -> TreeInWall;
    /// The line graph of a proper subdivision of T_{2,r} as an induced subgraph of W_{2^r x 2^r}.
    auto obs_trees_a_line(int r) -> TreeInWall;

    /// Induced T_{2^d,r}-model in T_{2,dr}: every branch set is a depth-d slab of the binary tree.
    auto obs_trees_b(int d, int r) -> ModelAssignment;

    /// k pairwise disjoint (X,Y)-paths by unit vertex-capacity flow, each trimmed; nullopt when fewer exist.
    auto disjoint_xy_paths(const Graph & g, const VertexSet & x, const VertexSet & y, int k) -> std::optional<std::vector<Path>>;

    /// All (X,Y)-paths using only vertices of `universe`, each read from its X end.
    auto enumerate_xy_paths(const Graph & g, const VertexSet & x, const VertexSet & y, const VertexSet & universe,
        Budget & budget) -> SearchResult<std::vector<Path>>;

    /// k pairwise anticomplete (X,Y)-paths inside `universe`.
    auto anticomplete_path_packing(const Graph & g, const VertexSet & x, const VertexSet & y, int k,
        const VertexSet & universe, Budget & budget) -> SearchResult<std::vector<Path>>;

    /// Witness format: one line `v: u1 u2 ...` per pattern vertex.
    auto serialize_model(const ModelAssignment & m) -> std::string;
    auto parse_model_branches(const std::string & text, int pattern_order, int host_order) -> std::vector<VertexSet>;
    auto serialize_embedding(const Embedding & e) -> std::string;
    auto parse_embedding(const std::string & text, int pattern_order) -> Embedding;
}
