#pragma once

#include <pwind/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace pwind
{
    /// How to build an (s,l)-constellation: path lengths (in edges) and, for each
    /// S-vertex i and path j, the sorted positions on path j adjacent to x_i.
    struct ConstellationSpec
    {
        int s = 0;
        std::vector<int> lengths;
        std::vector<std::vector<std::vector<int>>> attach; // [i][j] -> positions
    };

    /// A stable set S whose removal leaves exactly the listed induced paths, each touched by every S-vertex.
    struct Constellation
    {
        Graph host;
        std::vector<int> s_vertices; // x_0, x_1, ... in increasing host order
        std::vector<Path> paths;

        auto s() const -> int { return static_cast<int>(s_vertices.size()); }
        auto l() const -> int { return static_cast<int>(paths.size()); }
        auto s_set() const -> VertexSet { return VertexSet::of(host.order(), s_vertices); }
    };

    /// Host numbering: x_0..x_{s-1}, then the vertices of each path in order. Throws GraphError on a bad spec.
    auto build_constellation(const ConstellationSpec & spec) -> Constellation;

    /// Reads a constellation off a host and a stable set. Paths are listed by smallest vertex and
    /// oriented to start at their smaller end. Throws GraphError if the invariants fail.
    auto constellation_from(const Graph & host, const VertexSet & s) -> Constellation;

    /// Empty when the invariants hold, otherwise the first violation.
    auto constellation_problem(const Constellation & c) -> std::string;

    auto parse_constellation_spec(const std::string & text) -> ConstellationSpec;
    auto serialize_constellation_spec(const ConstellationSpec & spec) -> std::string;
    /// The spec that rebuilds c up to the host numbering of build_constellation.
    auto spec_of(const Constellation & c) -> ConstellationSpec;

    /// x_a, then positions lo..hi of one path (walked from x_a's side), then x_b.
    struct Route
    {
        int a = 0, b = 0;   // indices into s_vertices, a < b
        int path = 0;
        int lo = 0, hi = 0; // segment positions, lo <= hi
        bool a_at_lo = true;
        VertexSet touched;  // S indices with a neighbour on the route

        auto length() const -> int { return hi - lo + 2; }
    };

    auto enumerate_routes(const Constellation & c) -> std::vector<Route>;
    /// The route as a host path from x_a to x_b.
    auto route_path(const Constellation & c, const Route & r) -> Path;

    /// No route of length at most d + 1.
    auto is_d_ample(const Constellation & c, int d) -> bool;
    /// No two S-vertices share a neighbour on the paths.
    auto no_common_neighbours(const Constellation & c) -> bool;

    /// ordering[k] is the S index placed at position k.
    auto is_interrupted_with(const Constellation & c, const std::vector<int> & ordering) -> bool;
    auto find_interrupted_ordering(const Constellation & c) -> std::optional<std::vector<int>>;
    auto is_zigzagged_with(const Constellation & c, int q, const std::vector<int> & ordering) -> bool;
    auto find_zigzagged_ordering(const Constellation & c, int q) -> std::optional<std::vector<int>>;
}
