#pragma once

#include <pwind/containment.hh>
#include <pwind/graph.hh>
#include <pwind/search.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pwind
{
    /// (A, L, Y): an induced path A and pairwise disjoint (N(A),Y)-paths in host minus A.
    /// Each member of `paths` is read from its N(A)-end x_L to its Y-end y_L.
    struct Seedling
    {
        Graph host;
        Path a;
        std::vector<Path> paths;
        VertexSet y;

        auto lambda() const -> int { return static_cast<int>(paths.size()); }
        auto a_set() const -> VertexSet { return a.vertex_set(host.order()); }
        auto path_vertices() const -> VertexSet;
    };

    struct Check
    {
        bool valid = false;
        std::string reason;
    };

    auto check_seedling(const Seedling & sd) -> Check;
    /// Validity in host minus `removed`: additionally every part of sd avoids `removed`.
    auto check_seedling_avoiding(const Seedling & sd, const VertexSet & removed) -> Check;

    enum class Rigidity
    {
        Rigid,
        NotRigid,
        Exhausted
    };

    struct RigidityResult
    {
        Rigidity verdict = Rigidity::Exhausted;
        std::vector<Path> witness; // kappa pairwise anticomplete (N(A),Y)-paths inside V(L)
    };

    /// Throws GraphError on an invalid seedling.
    auto is_rigid(const Seedling & sd, int kappa, Budget & budget) -> RigidityResult;

    /// Every x in B is joined to every y in B by a family of paths listed from x to y (x < y).
    struct StrongBlock
    {
        Graph host;
        std::vector<int> b; // sorted
        std::map<Edge, std::vector<Path>> families;
    };

    /// Checks the (|B|, l)-block conditions and strongness.
    auto verify_block(const StrongBlock & blk, int l) -> Check;

    struct AnticompletePaths
    {
        std::vector<int> s; // stable subset of B
        std::map<Edge, std::vector<Path>> families;
    };

    /// Stable S inside B by Ramsey, then per pair {x,y} the seedling ({x}, trimmed interiors, N(y))
    /// must be non-rigid at level g; its witness gives g paths with pairwise anticomplete interiors.
    auto block_to_anticomplete_paths(const StrongBlock & blk, int t, int g, Budget & budget)
        -> SearchResult<AnticompletePaths>;

    auto verify_anticomplete_paths(const StrongBlock & blk, const AnticompletePaths & out, int g) -> Check;

    /// K_{t+1} and induced K_{t,t}-model searches, each with its own outcome.
    struct TidyReport
    {
        int t = 0;
        Outcome clique_outcome = Outcome::Exhausted;
        std::optional<std::vector<int>> clique;
        Outcome ktt_outcome = Outcome::Exhausted;
        std::optional<ModelAssignment> ktt_model;

        auto tidy() const -> bool { return clique_outcome == Outcome::Absent && ktt_outcome == Outcome::Absent; }
    };

    auto find_clique(const Graph & g, int size, Budget & budget) -> SearchResult<std::vector<int>>;
    auto check_tidy(const Graph & g, int t, Budget & budget) -> TidyReport;

    /// Text form: `a: ...`, one `L: ...` line per path, `Y: ...`.
    auto serialize_seedling(const Seedling & sd) -> std::string;
    auto parse_seedling(const Graph & host, const std::string & text) -> Seedling;

    /// Root `a` adjacent to every x-end of crossing_paths_family(n); Y is the set of y-ends.
    auto broom_seedling(int n) -> Seedling;

    /// Two-level broom for d = 2, t = 2: eight hub paths whose x-ends each see all sixteen
    /// leaf paths at a private contact vertex, every two paths touching.
    auto two_level_broom() -> Seedling;

    /// Random valid seedling: A a path, `lambda` paths starting next to A, random triangle-free
    /// cross edges that keep every member induced and every non-end vertex away from A.
    auto random_seedling(int a_len, int lambda, int max_len, double p, std::uint64_t seed) -> Seedling;

    /// Triangle-free host with B of size k and `l` parallel paths of length 2..3 per pair.
    auto planted_block(int k, int l, std::uint64_t seed) -> StrongBlock;
}
