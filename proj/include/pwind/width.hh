#pragma once

#include <pwind/graph.hh>
#include <pwind/search.hh>

#include <string>
#include <vector>

namespace pwind
{
    struct PathDecomposition
    {
        std::vector<VertexSet> bags;

        /// Largest bag size minus one; -1 for no bags.
        auto width() const -> int;
    };

    struct DecompositionCheck
    {
        bool valid = false;
        int width = -1;
        std::string reason; // empty when valid
    };

    auto verify_path_decomposition(const Graph & g, const PathDecomposition & d) -> DecompositionCheck;

    /// Decomposition from a vertex ordering: bag i is the boundary of the first i vertices plus v_i.
    auto decomposition_from_ordering(const Graph & g, const std::vector<int> & order) -> PathDecomposition;

    struct WidthResult
    {
        int width = -1;
        PathDecomposition certificate;
    };

    /// Exact pathwidth through the vertex separation number, by dynamic programming over
    /// vertex subsets. Budget counts subset states. Needs n <= 26.
    auto pathwidth_exact(const Graph & g, Budget & budget) -> SearchResult<WidthResult>;

    /// Decides pw(g) <= k by depth-first search over prefix sets whose boundary stays within k.
    /// Found carries a certificate; Absent is an exhaustive refutation.
    auto pathwidth_at_most(const Graph & g, int k, Budget & budget) -> SearchResult<PathDecomposition>;

    /// Exact pathwidth of a tree, with certificate. Throws GraphError on a non-tree.
    auto tree_pathwidth(const Graph & t) -> WidthResult;

    auto parse_bags(const std::string & text, int universe) -> PathDecomposition;
    auto serialize_bags(const PathDecomposition & d) -> std::string;
}
