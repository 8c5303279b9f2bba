#pragma once

#include <pwind/containment.hh>
#include <pwind/seedling.hh>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pwind
{
    struct BigRamseyResult
    {
        std::vector<int> chosen;                // r indices into the A-list
        std::vector<std::vector<int>> families; // for each chosen A, s indices into its family
    };

    /// `a_sets` holds 2rt pairwise anticomplete sets, `families[i]` a family of pairwise
    /// anticomplete sets for a_sets[i]. Throws GraphError when a hypothesis fails.
    auto bigramsey_extract(const Graph & g, const std::vector<VertexSet> & a_sets,
        const std::vector<std::vector<VertexSet>> & families, int r, int s, int t, Budget & budget)
        -> SearchResult<BigRamseyResult>;

    /// The sets A_i plus the union of their chosen families are pairwise anticomplete.
    auto verify_bigramsey(const Graph & g, const std::vector<VertexSet> & a_sets,
        const std::vector<std::vector<VertexSet>> & families, int r, int s, const BigRamseyResult & res) -> Check;

    struct MagicResult
    {
        int branch = 0;                         // 1: z = x, 2: split at z
        std::vector<int> chosen;                // delta indices into L0
        std::vector<int> z;                     // z vertex of each chosen path
        std::vector<std::vector<int>> families; // lambda indices into L0 per chosen path
        std::vector<std::vector<int>> w;        // marker vertex per family member
    };

    /// Paths in `l0` are read from x_L to y_L. Throws GraphError unless they are pairwise
    /// disjoint and no two are anticomplete.
    auto magic_extract(const Graph & g, const std::vector<Path> & l0, int t, int delta, int lambda, Budget & budget)
        -> SearchResult<MagicResult>;

    auto verify_magic(const Graph & g, const std::vector<Path> & l0, int delta, int lambda, const MagicResult & res)
        -> Check;

    struct GrowOptions
    {
        /// Children that are not rigid at this level are discarded; 0 keeps every child.
        int child_kappa = 0;
    };

    struct GrowResult
    {
        Outcome outcome = Outcome::Absent;
        std::vector<Seedling> children;
        /// Set when the parent is visibly not kappa-rigid: kappa pairwise anticomplete members.
        std::vector<Path> non_rigid_witness;
        int magic_targets = 0;
    };

    auto grow_seedling(const Seedling & sd, int t, int delta, int lambda, int kappa, Budget & budget,
        const GrowOptions & options = {}) -> GrowResult;

    /// Children are valid seedlings in host minus A, their A_i pairwise anticomplete, each A_i
    /// touching A, A anticomplete to V(L_i), and the children pairwise disjoint.
    auto verify_children(const Seedling & parent, const std::vector<Seedling> & children, int lambda) -> Check;

    struct TreeOptions
    {
        int branching = 0;    // branching of the recursive models; 0 means max(d, t)
        int children = 0;     // children grown per level; 0 means 2dt
        int child_lambda = 0; // paths per child; 0 means the branching
        int child_kappa = 0;  // rigidity filter for children, see GrowOptions
    };

    /// Induced T_{d,r}-model inside host[A + V(L)] whose root branch set is exactly A.
    auto seedling_to_tree(const Seedling & sd, int d, int r, int t, int kappa, Budget & budget,
        const TreeOptions & options = {}) -> SearchResult<ModelAssignment>;

    /// Induced model check plus root branch equal to A and every branch inside A + V(L).
    auto verify_tree_model(const Seedling & sd, const ModelAssignment & m) -> Check;

    /// Smallest (d, r) with H^+ (H plus an apex joined to one vertex per component)
    /// an induced subgraph of T_{d,r} rooted at the apex.
    auto forest_shape(const Graph & h) -> std::pair<int, int>;

    /// Embedding of the forest h into make_tree(d, r) through H^+; nullopt when it does not fit.
    /// Throws GraphError when h has a cycle.
    auto embed_forest_in_tree(const Graph & h, int d, int r) -> std::optional<Embedding>;

    struct DriverBudgets
    {
        std::uint64_t clique = 1'000'000;
        std::uint64_t direct = 5'000'000;
        std::uint64_t seedling = 5'000'000;
        std::uint64_t ktt = 5'000'000;
        int seedling_kappa = 2; // rigidity level passed to seedling_to_tree
    };

    struct DriverCertificate
    {
        enum class Kind
        {
            Clique,
            KttModel,
            HModel,
            NoneFound,
            Exhausted
        };

        Kind kind = Kind::NoneFound;
        std::vector<int> clique;
        std::optional<ModelAssignment> model;
        std::string route; // which search produced the certificate
    };

    auto driver_kind_name(DriverCertificate::Kind k) -> std::string_view;

    /// K_{t+1}, then H directly by induced-minor search, then H through seedling_to_tree when a
    /// seedling is given, then an induced K_{t,t}-model. Every certificate is re-verified.
    auto main_driver(const Graph & g, int t, const Graph & h, const DriverBudgets & budgets = {},
        const std::optional<Seedling> & seedling = std::nullopt) -> DriverCertificate;
}
