#include <pwind/graph.hh>

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

using namespace pwind;

using std::optional;
using std::string;
using std::vector;

namespace
{
    auto check_vertex(int n, int v) -> void
    {
        if (v < 0 || v >= n)
            throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
    }

    auto meaningful_lines(const string & text) -> vector<string>
    {
        vector<string> result;
        std::istringstream in(text);
        string line;
        while (std::getline(in, line)) {
            auto start = line.find_first_not_of(" \t\r");
            if (start == string::npos || line[start] == '#')
                continue;
            result.push_back(line);
        }
        return result;
    }

    auto parse_pairs(const string & text, const char * what) -> std::pair<int, vector<Edge>>
    {
        auto lines = meaningful_lines(text);
        if (lines.empty())
            throw GraphError(string("empty ") + what + " text");
        std::istringstream header(lines[0]);
        long n = -1, m = -1;
        if (! (header >> n >> m) || n < 0 || m < 0)
            throw GraphError(string("bad ") + what + " header: '" + lines[0] + "'");
        if (static_cast<long>(lines.size()) - 1 != m)
            throw GraphError(string(what) + " header announces " + std::to_string(m) + " pairs, found "
                + std::to_string(lines.size() - 1));
        vector<Edge> pairs;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            std::istringstream row(lines[i]);
            long u, v;
            string rest;
            if (! (row >> u >> v) || (row >> rest))
                throw GraphError(string("bad ") + what + " line: '" + lines[i] + "'");
            pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        return {static_cast<int>(n), pairs};
    }
}

Graph::Graph(int n) :
    _n(n),
    _adj(n, VertexSet(n)),
    _nbrs(n)
{
    if (n < 0)
        throw GraphError("negative order");
}

Graph::Graph(int n, std::span<const Edge> edges) :
    Graph(n)
{
    for (auto [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v)
            throw GraphError("loop at vertex " + std::to_string(u));
        if (_adj[u].contains(v))
            throw GraphError("parallel edge " + std::to_string(u) + " " + std::to_string(v));
        _adj[u].insert(v);
        _adj[v].insert(u);
        ++_m;
    }
    for (int v = 0; v < n; ++v)
        _nbrs[v] = _adj[v].to_vector();
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    result.reserve(_m);
    for (int u = 0; u < _n; ++u)
        for (int v : _nbrs[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

Digraph::Digraph(int n) :
    _n(n),
    _out(n, VertexSet(n)),
    _in(n, VertexSet(n))
{
    if (n < 0)
        throw GraphError("negative order");
}

Digraph::Digraph(int n, std::span<const Edge> arcs) :
    Digraph(n)
{
    for (auto [u, v] : arcs) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v)
            throw GraphError("loop arc at vertex " + std::to_string(u));
        if (_out[u].contains(v))
            throw GraphError("repeated arc " + std::to_string(u) + " " + std::to_string(v));
        _out[u].insert(v);
        _in[v].insert(u);
        ++_m;
    }
}

auto Digraph::arcs() const -> vector<Edge>
{
    vector<Edge> result;
    for (int u = 0; u < _n; ++u)
        _out[u].for_each([&](int v) { result.emplace_back(u, v); });
    return result;
}

auto Digraph::underlying() const -> Graph
{
    std::set<Edge> edges;
    for (auto [u, v] : arcs())
        edges.emplace(std::min(u, v), std::max(u, v));
    vector<Edge> list(edges.begin(), edges.end());
    return Graph(_n, list);
}

auto Digraph::restricted(const VertexSet & x) const -> Digraph
{
    auto members = x.to_vector();
    vector<int> index(_n, -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        index[members[i]] = static_cast<int>(i);
    vector<Edge> kept;
    for (int u : members)
        _out[u].for_each([&](int v) {
            if (index[v] >= 0)
                kept.emplace_back(index[u], index[v]);
        });
    return Digraph(static_cast<int>(members.size()), kept);
}

auto Path::interior(int universe) const -> VertexSet
{
    VertexSet result(universe);
    for (std::size_t i = 1; i + 1 < vertices.size(); ++i)
        result.insert(vertices[i]);
    return result;
}

auto Path::segment(int i, int j) const -> Path
{
    Path result;
    if (i <= j)
        result.vertices.assign(vertices.begin() + i, vertices.begin() + j + 1);
    else
        for (int k = i; k >= j; --k)
            result.vertices.push_back(vertices[k]);
    return result;
}

auto Path::reversed() const -> Path
{
    return Path{vector<int>(vertices.rbegin(), vertices.rend())};
}

auto Path::position_of(int v) const -> int
{
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

auto pwind::induced_subgraph(const Graph & g, const VertexSet & x) -> InducedSubgraph
{
    InducedSubgraph result;
    result.old_to_new.assign(g.order(), -1);
    x.for_each([&](int v) {
        check_vertex(g.order(), v);
        result.old_to_new[v] = static_cast<int>(result.new_to_old.size());
        result.new_to_old.push_back(v);
    });
    vector<Edge> edges;
    for (int u : result.new_to_old)
        for (int v : g.neighbors(u))
            if (u < v && result.old_to_new[v] >= 0)
                edges.emplace_back(result.old_to_new[u], result.old_to_new[v]);
    result.graph = Graph(static_cast<int>(result.new_to_old.size()), edges);
    return result;
}

auto pwind::anticomplete(const Graph & g, const VertexSet & x, const VertexSet & y) -> bool
{
    if (x.intersects(y))
        return false;
    const VertexSet & small = x.size() <= y.size() ? x : y;
    const VertexSet & large = x.size() <= y.size() ? y : x;
    bool touching = false;
    small.for_each([&](int v) {
        if (! touching && g.neighbor_set(v).intersects(large))
            touching = true;
    });
    return ! touching;
}

auto pwind::neighborhood(const Graph & g, const VertexSet & x) -> VertexSet
{
    VertexSet result(g.order());
    x.for_each([&](int v) { result |= g.neighbor_set(v); });
    return result - x;
}

auto pwind::is_stable(const Graph & g, const VertexSet & x) -> bool
{
    bool ok = true;
    x.for_each([&](int v) {
        if (ok && g.neighbor_set(v).intersects(x))
            ok = false;
    });
    return ok;
}

auto pwind::is_clique(const Graph & g, const VertexSet & x) -> bool
{
    int k = x.size();
    bool ok = true;
    x.for_each([&](int v) {
        if (ok && (g.neighbor_set(v) & x).size() != k - 1)
            ok = false;
    });
    return ok;
}

auto pwind::components_within(const Graph & g, const VertexSet & x) -> vector<VertexSet>
{
    vector<VertexSet> result;
    VertexSet unseen = x;
    for (int start = unseen.first(); start != -1; start = unseen.first()) {
        VertexSet comp(g.order());
        vector<int> stack{start};
        unseen.erase(start);
        comp.insert(start);
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (unseen.contains(w)) {
                    unseen.erase(w);
                    comp.insert(w);
                    stack.push_back(w);
                }
        }
        result.push_back(std::move(comp));
    }
    return result;
}

auto pwind::components(const Graph & g) -> vector<vector<int>>
{
    vector<vector<int>> result;
    for (auto & c : components_within(g, g.all()))
        result.push_back(c.to_vector());
    return result;
}

auto pwind::is_connected_set(const Graph & g, const VertexSet & x) -> bool
{
    return ! x.empty() && components_within(g, x).size() == 1;
}

auto pwind::is_tree(const Graph & g) -> bool
{
    return g.order() > 0 && g.size() == g.order() - 1 && components(g).size() == 1;
}

auto pwind::line_graph(const Graph & g) -> LineGraph
{
    LineGraph result;
    result.edge_of_vertex = g.edges();
    std::map<Edge, int> index;
    for (std::size_t i = 0; i < result.edge_of_vertex.size(); ++i)
        index[result.edge_of_vertex[i]] = static_cast<int>(i);
    vector<Edge> edges;
    for (int v = 0; v < g.order(); ++v) {
        auto & nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                int e = index[{std::min(v, nb[a]), std::max(v, nb[a])}];
                int f = index[{std::min(v, nb[b]), std::max(v, nb[b])}];
                edges.emplace_back(std::min(e, f), std::max(e, f));
            }
    }
    std::sort(edges.begin(), edges.end());
    result.graph = Graph(static_cast<int>(result.edge_of_vertex.size()), edges);
    return result;
}

auto pwind::subdivide(const Graph & g, const std::map<Edge, int> & lengths) -> Subdivision
{
    for (auto & [e, len] : lengths) {
        if (e.first > e.second || ! g.adjacent(e.first, e.second))
            throw GraphError("subdivision length given for non-edge " + std::to_string(e.first) + " "
                + std::to_string(e.second));
        if (len < 1)
            throw GraphError("subdivision length must be positive");
    }
    Subdivision result;
    int next = g.order();
    vector<Edge> edges;
    for (auto e : g.edges()) {
        auto it = lengths.find(e);
        int len = it == lengths.end() ? 1 : it->second;
        vector<int> seq{e.first};
        for (int i = 1; i < len; ++i)
            seq.push_back(next++);
        seq.push_back(e.second);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            edges.emplace_back(std::min(seq[i], seq[i + 1]), std::max(seq[i], seq[i + 1]));
        result.edge_paths[e] = std::move(seq);
    }
    result.graph = Graph(next, edges);
    return result;
}

auto pwind::contract_edge(const Graph & g, Edge e) -> Graph
{
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || ! g.adjacent(u, v))
        throw GraphError("cannot contract non-edge " + std::to_string(u) + " " + std::to_string(v));
    int keep = std::min(u, v), gone = std::max(u, v);
    auto relabel = [&](int w) { return w == gone ? keep : (w > gone ? w - 1 : w); };
    std::set<Edge> edges;
    for (auto [a, b] : g.edges()) {
        int x = relabel(a), y = relabel(b);
        if (x != y)
            edges.emplace(std::min(x, y), std::max(x, y));
    }
    vector<Edge> list(edges.begin(), edges.end());
    return Graph(g.order() - 1, list);
}

auto pwind::is_induced_path(const Graph & g, const Path & p) -> bool
{
    auto & vs = p.vertices;
    if (vs.empty())
        return false;
    VertexSet seen(g.order());
    for (int v : vs) {
        if (v < 0 || v >= g.order() || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int inside = (g.neighbor_set(vs[i]) & seen).size();
        int expected = (i > 0) + (i + 1 < vs.size());
        if (inside != expected)
            return false;
        if (i + 1 < vs.size() && ! g.adjacent(vs[i], vs[i + 1]))
            return false;
    }
    return true;
}

auto pwind::is_xy_path(const Graph & g, const VertexSet & x, const VertexSet & y, const Path & p) -> bool
{
    if (! is_induced_path(g, p))
        return false;
    if (p.length() == 0)
        return x.contains(p.front()) && y.contains(p.front());
    if (! x.contains(p.front()) || y.contains(p.front()))
        return false;
    if (! y.contains(p.back()) || x.contains(p.back()))
        return false;
    return ! p.interior(g.order()).intersects(x | y);
}

auto pwind::find_xy_path(const Graph & g, const VertexSet & x, const VertexSet & y) -> optional<Path>
{
    return find_xy_path(g, x, y, g.all());
}

auto pwind::find_xy_path(const Graph & g, const VertexSet & x, const VertexSet & y, const VertexSet & within)
    -> optional<Path>
{
    VertexSet xs = x & within, ys = y & within;
    VertexSet both = xs & ys;
    if (! both.empty())
        return Path{{both.first()}};

    // Multi-source BFS from X; only vertices outside X and Y are expanded.
    VertexSet blocked = xs | ys;
    vector<int> parent(g.order(), -2);
    std::deque<int> queue;
    xs.for_each([&](int v) {
        parent[v] = -1;
        queue.push_back(v);
    });
    while (! queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (! within.contains(w) || parent[w] != -2)
                continue;
            parent[w] = v;
            if (ys.contains(w)) {
                Path p;
                for (int c = w; c != -1; c = parent[c])
                    p.vertices.push_back(c);
                std::reverse(p.vertices.begin(), p.vertices.end());
                return p;
            }
            if (! blocked.contains(w))
                queue.push_back(w);
        }
    }
    return std::nullopt;
}

auto pwind::trim_to_xy_path(const Graph & g, const VertexSet & x, const VertexSet & y, const Path & walk) -> Path
{
    auto & vs = walk.vertices;
    for (int v : vs)
        if (x.contains(v) && y.contains(v))
            return Path{{v}};
    std::size_t j = 0;
    while (j < vs.size() && ! y.contains(vs[j]))
        ++j;
    if (j == vs.size())
        throw GraphError("walk does not reach Y");
    std::size_t i = j;
    while (i > 0 && ! x.contains(vs[i]))
        --i;
    if (! x.contains(vs[i]))
        throw GraphError("walk does not start in X");
    VertexSet span(g.order());
    for (std::size_t k = i; k <= j; ++k)
        span.insert(vs[k]);
    auto shortest = find_xy_path(g, VertexSet::of(g.order(), {vs[i]}), VertexSet::of(g.order(), {vs[j]}), span);
    return *shortest;
}

auto pwind::parse_graph(const string & text) -> Graph
{
    auto [n, pairs] = parse_pairs(text, "graph");
    for (auto & [u, v] : pairs)
        if (u > v)
            std::swap(u, v);
    return Graph(n, pairs);
}

auto pwind::serialize_graph(const Graph & g) -> string
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto pwind::parse_digraph(const string & text) -> Digraph
{
    auto [n, pairs] = parse_pairs(text, "digraph");
    return Digraph(n, pairs);
}

auto pwind::serialize_digraph(const Digraph & d) -> string
{
    std::ostringstream out;
    out << d.order() << ' ' << d.size() << '\n';
    for (auto [u, v] : d.arcs())
        out << u << ' ' << v << '\n';
    return out.str();
}
