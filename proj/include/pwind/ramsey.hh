#pragma once

#include <pwind/graph.hh>
#include <pwind/search.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace pwind
{
    struct RamseyResult
    {
        enum class Kind
        {
            Stable,
            Clique,
            Fail
        };

        Kind kind = Kind::Fail;
        std::vector<int> vertices; // sorted
    };

    /// A stable set of size s or a clique of size t+1 among `candidates`, by majority descent.
    /// Never fails when there are at least s^t candidates.
    auto ramsey_stable_or_clique(const Graph & g, const std::vector<int> & candidates, int s, int t) -> RamseyResult;
    auto ramsey_stable_or_clique(const Graph & g, int s, int t) -> RamseyResult;

    /// Largest s with s^t <= n.
    auto ramsey_guaranteed_size(int n, int t) -> int;

    /// Stable set of exactly `size` vertices inside `candidates` (lexicographically first), exhaustive.
    auto find_stable_subset(const Graph & g, const std::vector<int> & candidates, int size, Budget & budget)
        -> SearchResult<std::vector<int>>;

    /// A maximum clique of g, Bron-Kerbosch with pivoting.
    auto maximum_clique(const Graph & g, Budget & budget) -> SearchResult<std::vector<int>>;

    /// Greedy minimum-degree stable set in the underlying graph of D restricted to vertices
    /// of out-degree at most r. Every such subgraph has a vertex of underlying degree at most
    /// 2r, so the result has at least |low| / (2r+1) vertices.
    auto digraph_stable_set_max(const Digraph & d, int r) -> std::vector<int>;

    /// An s-subset of digraph_stable_set_max, or nullopt when it is smaller than s.
    auto digraph_stable_set(const Digraph & d, int r, int s) -> std::optional<std::vector<int>>;

    struct FanExtraction
    {
        int q = 0;
        int r = 0;
        std::vector<int> s;                    // sorted
        std::vector<std::vector<int>> targets; // targets[v] = Q_v for v in s, otherwise empty

        /// Pairwise disjoint r-sets R_1..R_q with R_i inside the out-neighbours of vs[i],
        /// carved greedily in the given order.
        auto select(const std::vector<int> & vs) const -> std::vector<std::vector<int>>;
    };

    /// Fan extraction on the thinned digraph: every high out-degree vertex keeps its qr
    /// smallest out-neighbours, then a stable set of those vertices is taken.
    auto digraph_fan_extraction(const Digraph & d, int q, int r, int s) -> std::optional<FanExtraction>;
    /// As above but keeps the whole greedy stable set.
    auto digraph_fan_extraction_max(const Digraph & d, int q, int r) -> FanExtraction;

    /// Checks that `sel` are q pairwise disjoint r-sets of out-neighbours of vs, avoiding S.
    auto verify_fan_selection(const Digraph & d, const FanExtraction & fan, const std::vector<int> & vs,
        const std::vector<std::vector<int>> & sel) -> bool;

    using Colour = std::vector<std::uint64_t>;
    using ColourMap = std::function<Colour(const std::vector<int> &)>;

    struct ProductGrid
    {
        Colour colour;
        std::vector<std::vector<int>> z; // z[j] is a sorted q-subset of 0..sizes[j]-1
    };

    /// A q-subset of each coordinate whose whole product has one colour. Backtracking: a seed
    /// tuple fixes the colour, then coordinates grow round-robin. `accept` filters colours.
    auto product_ramsey_search(const std::vector<int> & sizes, const ColourMap & phi, int q, Budget & budget,
        const std::function<bool(const Colour &)> & accept = nullptr) -> SearchResult<ProductGrid>;

    auto verify_product_grid(const std::vector<int> & sizes, const ColourMap & phi, int q, const ProductGrid & grid)
        -> bool;
}
