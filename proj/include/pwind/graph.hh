#pragma once

#include <pwind/vertex_set.hh>

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pwind
{
    using Edge = std::pair<int, int>;

    /// Thrown on malformed input: out-of-range vertices, loops, parse errors.
    class GraphError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Immutable simple undirected graph on vertices 0..n-1.
    class Graph
    {
    public:
        Graph() : Graph(0) {}
        explicit Graph(int n);
        Graph(int n, std::span<const Edge> edges);

        auto order() const -> int { return _n; }
        auto size() const -> int { return _m; }

        auto adjacent(int u, int v) const -> bool { return _adj[u].contains(v); }
        auto neighbor_set(int v) const -> const VertexSet & { return _adj[v]; }
        auto neighbors(int v) const -> const std::vector<int> & { return _nbrs[v]; }
        auto degree(int v) const -> int { return static_cast<int>(_nbrs[v].size()); }

        /// Edges (u, v) with u < v, sorted.
        auto edges() const -> std::vector<Edge>;

        auto all() const -> VertexSet { return VertexSet::full(_n); }
        auto none() const -> VertexSet { return VertexSet(_n); }
        auto set(std::initializer_list<int> vs) const -> VertexSet { return VertexSet::of(_n, vs); }
        auto set(std::span<const int> vs) const -> VertexSet { return VertexSet::of(_n, vs); }

        auto operator==(const Graph & other) const -> bool { return _n == other._n && _adj == other._adj; }

    private:
        int _n;
        int _m = 0;
        std::vector<VertexSet> _adj;
        std::vector<std::vector<int>> _nbrs;
    };

    /// Loopless digraph, at most one arc per ordered pair.
    class Digraph
    {
    public:
        Digraph() : Digraph(0) {}
        explicit Digraph(int n);
        Digraph(int n, std::span<const Edge> arcs);

        auto order() const -> int { return _n; }
        auto size() const -> int { return _m; }
        auto has_arc(int u, int v) const -> bool { return _out[u].contains(v); }
        auto out_set(int v) const -> const VertexSet & { return _out[v]; }
        auto in_set(int v) const -> const VertexSet & { return _in[v]; }
        auto out_degree(int v) const -> int { return _out[v].size(); }
        auto in_degree(int v) const -> int { return _in[v].size(); }
        auto arcs() const -> std::vector<Edge>;

        auto underlying() const -> Graph;
        /// D[X], relabelled to 0..|X|-1 in increasing order of X.
        auto restricted(const VertexSet & x) const -> Digraph;

        auto operator==(const Digraph & other) const -> bool { return _n == other._n && _out == other._out; }

    private:
        int _n;
        int _m = 0;
        std::vector<VertexSet> _out;
        std::vector<VertexSet> _in;
    };

    /// An ordered vertex sequence; meaningful as a path when it is induced in its host.
    struct Path
    {
        std::vector<int> vertices;

        auto length() const -> int { return static_cast<int>(vertices.size()) - 1; }
        auto front() const -> int { return vertices.front(); }
        auto back() const -> int { return vertices.back(); }
        auto vertex_set(int universe) const -> VertexSet { return VertexSet::of(universe, vertices); }
        auto interior(int universe) const -> VertexSet;
        /// Subpath between positions i and j inclusive, in the order i..j.
        auto segment(int i, int j) const -> Path;
        auto reversed() const -> Path;
        auto position_of(int v) const -> int;

        auto operator==(const Path &) const -> bool = default;
    };

    struct InducedSubgraph
    {
        Graph graph;
        std::vector<int> old_to_new; // -1 for vertices outside X
        std::vector<int> new_to_old;
    };

    auto induced_subgraph(const Graph & g, const VertexSet & x) -> InducedSubgraph;

    auto anticomplete(const Graph & g, const VertexSet & x, const VertexSet & y) -> bool;
    auto neighborhood(const Graph & g, const VertexSet & x) -> VertexSet;
    auto is_stable(const Graph & g, const VertexSet & x) -> bool;
    auto is_clique(const Graph & g, const VertexSet & x) -> bool;

    /// Connected components, each sorted, listed by smallest vertex.
    auto components(const Graph & g) -> std::vector<std::vector<int>>;
    /// Components of g[x].
    auto components_within(const Graph & g, const VertexSet & x) -> std::vector<VertexSet>;
    auto is_connected_set(const Graph & g, const VertexSet & x) -> bool;
    auto is_tree(const Graph & g) -> bool;

    struct LineGraph
    {
        Graph graph;
        std::vector<Edge> edge_of_vertex; // line-graph vertex i is edge edge_of_vertex[i]
    };

    auto line_graph(const Graph & g) -> LineGraph;

    struct Subdivision
    {
        Graph graph;
        /// For each original edge (u < v), the full vertex sequence u, s_1, .., v in the new graph.
        std::map<Edge, std::vector<int>> edge_paths;
    };

    /// Replaces each edge e by a path with lengths[e] edges; missing entries keep the edge.
    auto subdivide(const Graph & g, const std::map<Edge, int> & lengths) -> Subdivision;

    /// Contracts uv; the merged vertex takes index min(u, v), later vertices shift down by one.
    auto contract_edge(const Graph & g, Edge e) -> Graph;

    auto is_induced_path(const Graph & g, const Path & p) -> bool;

    /// (X,Y)-path predicate in its two-case form. The path is read from its X-end.
    auto is_xy_path(const Graph & g, const VertexSet & x, const VertexSet & y, const Path & p) -> bool;

    /// Shortest (X,Y)-path, BFS with smallest-vertex preference; nullopt when none exists.
    auto find_xy_path(const Graph & g, const VertexSet & x, const VertexSet & y) -> std::optional<Path>;
    /// As above but restricted to vertices of `within`.
    auto find_xy_path(const Graph & g, const VertexSet & x, const VertexSet & y, const VertexSet & within)
        -> std::optional<Path>;

    /// Shrinks a walk from X to Y to an (X,Y)-path on a subset of its vertices.
    auto trim_to_xy_path(const Graph & g, const VertexSet & x, const VertexSet & y, const Path & walk) -> Path;

    auto parse_graph(const std::string & text) -> Graph;
    auto serialize_graph(const Graph & g) -> std::string;
    auto parse_digraph(const std::string & text) -> Digraph;
    auto serialize_digraph(const Digraph & d) -> std::string;
}
