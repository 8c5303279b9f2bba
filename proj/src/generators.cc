#include <pwind/generators.hh>
#include <pwind/rng.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

using namespace pwind;

using std::vector;

auto pwind::make_tree(int d, int r) -> RootedTree
{
    if (d < 1 || r < 0)
        throw std::invalid_argument("make_tree needs d >= 1 and r >= 0");
    RootedTree t;
    t.depth = {0};
    t.parent = {-1};
    t.children = {{}};
    vector<Edge> edges;
    vector<int> frontier{0};
    for (int level = 1; level <= r; ++level) {
        vector<int> next;
        for (int p : frontier)
            for (int k = 0; k < d; ++k) {
                int v = static_cast<int>(t.depth.size());
                t.depth.push_back(level);
                t.parent.push_back(p);
                t.children.emplace_back();
                t.children[p].push_back(v);
                edges.emplace_back(p, v);
                next.push_back(v);
            }
        frontier = std::move(next);
    }
    t.graph = Graph(static_cast<int>(t.depth.size()), edges);
    return t;
}

auto Wall::at(int row, int column) const -> int
{
    if (row < 0 || row >= rows || column < 0 || column >= 2 * rows)
        return -1;
    return vertex_at[row][column];
}

auto pwind::make_wall(int r) -> Wall
{
    if (r < 2)
        throw std::invalid_argument("make_wall needs r >= 2");
    Wall w;
    w.rows = r;
    int columns = 2 * r;
    // rungs into the last row sit at columns = r-2 (mod 2); the unreached end is dropped
    int dropped_last = (r - 2) % 2 == 0 ? columns - 1 : 0;
    w.vertex_at.assign(r, vector<int>(columns, -1));
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < columns; ++c) {
            if ((i == 0 && c == columns - 1) || (i == r - 1 && c == dropped_last))
                continue;
            w.vertex_at[i][c] = static_cast<int>(w.coordinate.size());
            w.coordinate.emplace_back(i, c);
        }
    vector<Edge> edges;
    auto link = [&](int a, int b) {
        if (a >= 0 && b >= 0)
            edges.emplace_back(std::min(a, b), std::max(a, b));
    };
    for (int i = 0; i < r; ++i)
        for (int c = 0; c + 1 < columns; ++c)
            link(w.vertex_at[i][c], w.vertex_at[i][c + 1]);
    for (int i = 0; i + 1 < r; ++i)
        for (int c = i % 2; c < columns; c += 2)
            link(w.vertex_at[i][c], w.vertex_at[i + 1][c]);
    std::sort(edges.begin(), edges.end());
    w.graph = Graph(static_cast<int>(w.coordinate.size()), edges);
    return w;
}

auto pwind::make_complete(int n) -> Graph
{
    vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

auto pwind::make_complete_bipartite(int s, int t) -> Graph
{
    vector<Edge> edges;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v)
            edges.emplace_back(u, s + v);
    return Graph(s + t, edges);
}

auto pwind::make_path(int n) -> Graph
{
    vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

auto pwind::make_cycle(int n) -> Graph
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

auto pwind::random_graph(int n, double p, std::uint64_t seed) -> Graph
{
    Rng rng(seed);
    vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

auto pwind::random_digraph(int n, double p, std::uint64_t seed) -> Digraph
{
    Rng rng(seed);
    vector<Edge> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.chance(p))
                arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

auto pwind::random_subdivision(const Graph & g, int max_len, std::uint64_t seed) -> Subdivision
{
    if (max_len < 1)
        throw std::invalid_argument("max_len must be positive");
    Rng rng(seed);
    std::map<Edge, int> lengths;
    for (auto e : g.edges())
        lengths[e] = rng.between(1, max_len);
    return subdivide(g, lengths);
}

auto pwind::random_tree(int n, std::uint64_t seed) -> Graph
{
    if (n <= 1)
        return Graph(std::max(n, 0));
    if (n == 2) {
        vector<Edge> e{{0, 1}};
        return Graph(2, e);
    }
    Rng rng(seed);
    vector<int> code(n - 2);
    for (auto & c : code)
        c = static_cast<int>(rng.below(n));
    vector<int> degree(n, 1);
    for (int c : code)
        ++degree[c];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);
    vector<Edge> edges;
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        if (--degree[c] == 1)
            leaves.insert(c);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    std::sort(edges.begin(), edges.end());
    return Graph(n, edges);
}

auto pwind::relabel(const Graph & g, const vector<int> & perm) -> Graph
{
    vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    std::sort(edges.begin(), edges.end());
    return Graph(g.order(), edges);
}

auto pwind::crossing_paths_family(int n, std::uint64_t seed) -> CrossingPaths
{
    if (n < 2)
        throw std::invalid_argument("crossing_paths_family needs n >= 2");
    int per_path = n + 1;
    auto x_of = [&](int i) { return i * per_path; };
    auto slot_of = [&](int i, int j) { return i * per_path + 1 + (j < i ? j : j - 1); };
    auto y_of = [&](int i) { return i * per_path + n; };

    vector<Edge> edges;
    CrossingPaths result;
    for (int i = 0; i < n; ++i) {
        Path p;
        p.vertices.push_back(x_of(i));
        for (int j = 0; j < n; ++j)
            if (j != i)
                p.vertices.push_back(slot_of(i, j));
        p.vertices.push_back(y_of(i));
        for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k)
            edges.emplace_back(p.vertices[k], p.vertices[k + 1]);
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(slot_of(i, j), slot_of(j, i));
        result.paths.push_back(std::move(p));
    }
    int total = n * per_path;
    vector<int> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    if (seed != 0) {
        Rng rng(seed);
        for (int k = total - 1; k > 0; --k)
            std::swap(perm[k], perm[rng.below(static_cast<std::uint64_t>(k) + 1)]);
    }
    for (auto & e : edges)
        e = {std::min(perm[e.first], perm[e.second]), std::max(perm[e.first], perm[e.second])};
    std::sort(edges.begin(), edges.end());
    result.graph = Graph(total, edges);
    for (auto & p : result.paths)
        for (auto & v : p.vertices)
            v = perm[v];
    return result;
}
