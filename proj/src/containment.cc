#include <pwind/containment.hh>
#include <pwind/generators.hh>

#include <algorithm>
#include <functional>
#include <sstream>

using namespace pwind;

using std::optional;
using std::vector;

auto pwind::verify_model(const ModelAssignment & m) -> ModelCheck
{
    ModelCheck c;
    int h = m.pattern.order(), n = m.host.order();
    if (static_cast<int>(m.branch.size()) != h) {
        c.reason = "wrong number of branch sets";
        return c;
    }
    VertexSet used(n);
    for (int p = 0; p < h; ++p) {
        auto & b = m.branch[p];
        if (b.universe() != n) {
            c.reason = "branch set " + std::to_string(p) + " has the wrong universe";
            return c;
        }
        if (b.empty() || ! is_connected_set(m.host, b)) {
            c.reason = "branch set " + std::to_string(p) + " is empty or disconnected";
            return c;
        }
        if (b.intersects(used)) {
            c.reason = "branch set " + std::to_string(p) + " overlaps an earlier one";
            return c;
        }
        used |= b;
    }
    for (int p = 0; p < h; ++p)
        for (int q = p + 1; q < h; ++q) {
            bool apart = anticomplete(m.host, m.branch[p], m.branch[q]);
            if (m.pattern.adjacent(p, q) && apart) {
                c.reason = "branch sets " + std::to_string(p) + " and " + std::to_string(q) + " should touch";
                return c;
            }
            if (m.induced && ! m.pattern.adjacent(p, q) && ! apart) {
                c.reason = "branch sets " + std::to_string(p) + " and " + std::to_string(q) + " should be anticomplete";
                return c;
            }
        }
    c.valid = true;
    return c;
}

auto pwind::verify_embedding(const Graph & host, const Graph & pattern, const Embedding & e) -> bool
{
    int h = pattern.order();
    if (static_cast<int>(e.image.size()) != h)
        return false;
    VertexSet seen(host.order());
    for (int v : e.image) {
        if (v < 0 || v >= host.order() || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (int p = 0; p < h; ++p)
        for (int q = p + 1; q < h; ++q)
            if (pattern.adjacent(p, q) != host.adjacent(e.image[p], e.image[q]))
                return false;
    return true;
}

namespace
{
    // Max degree first, then the vertex with the most already ordered neighbours.
    auto pattern_order(const Graph & h) -> vector<int>
    {
        int n = h.order();
        vector<int> order;
        vector<bool> placed(n, false);
        vector<int> links(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (best < 0 || links[v] > links[best] || (links[v] == links[best] && h.degree(v) > h.degree(best)))
                    best = v;
            }
            placed[best] = true;
            order.push_back(best);
            for (int w : h.neighbors(best))
                ++links[w];
        }
        return order;
    }

    // Connected vertex sets of an exact size inside `avail`, each listed once with its
    // smallest vertex as root (extension-set enumeration). The visitor returns true to stop.
    class ConnectedSets
    {
    public:
        ConnectedSets(const Graph & g, const VertexSet & avail) : _g(g), _avail(avail) {}

        auto each(int size, const std::function<bool(const VertexSet &)> & visit) -> bool
        {
            bool stop = false;
            _avail.for_each([&](int root) {
                if (stop)
                    return;
                VertexSet s(_g.order());
                s.insert(root);
                VertexSet ext(_g.order()), closed = _g.neighbor_set(root);
                closed.insert(root);
                for (int w : _g.neighbors(root))
                    if (w > root && _avail.contains(w))
                        ext.insert(w);
                stop = extend(s, ext, closed, root, size, visit);
            });
            return stop;
        }

    private:
        auto extend(const VertexSet & s, VertexSet ext, const VertexSet & closed, int root, int size,
            const std::function<bool(const VertexSet &)> & visit) -> bool
        {
            if (s.size() == size)
                return visit(s);
            while (! ext.empty()) {
                int w = ext.first();
                ext.erase(w);
                auto next_ext = ext;
                for (int u : _g.neighbors(w))
                    if (u > root && _avail.contains(u) && ! closed.contains(u))
                        next_ext.insert(u);
                auto s2 = s;
                s2.insert(w);
                auto closed2 = closed | _g.neighbor_set(w);
                if (extend(s2, next_ext, closed2, root, size, visit))
                    return true;
            }
            return false;
        }

        const Graph & _g;
        const VertexSet & _avail;
    };

    class InducedMinorSearch
    {
    public:
        InducedMinorSearch(const Graph & g, const Graph & h, Budget & budget) :
            _g(g), _h(h), _budget(budget), _order(pattern_order(h)), _branch(h.order(), VertexSet(g.order())),
            _assigned(h.order(), false)
        {
        }

        auto run() -> SearchResult<ModelAssignment>
        {
            if (_h.order() == 0)
                return SearchResult<ModelAssignment>::found({_g, _h, {}, true});
            if (search(0, VertexSet(_g.order())))
                return SearchResult<ModelAssignment>::found({_g, _h, _branch, true});
            if (_out_of_budget)
                return SearchResult<ModelAssignment>::exhausted();
            return SearchResult<ModelAssignment>::absent();
        }

    private:
        auto available_for(int q, const VertexSet & used) const -> VertexSet
        {
            auto avail = _g.all() - used;
            for (int p = 0; p < _h.order(); ++p)
                if (_assigned[p] && ! _h.adjacent(p, q))
                    avail -= neighborhood(_g, _branch[p]);
            return avail;
        }

        // Necessary conditions for completing the current partial model.
        auto feasible(const VertexSet & used) const -> bool
        {
            auto free = _g.all() - used;
            int remaining = 0;
            for (int q = 0; q < _h.order(); ++q)
                remaining += ! _assigned[q];
            if (free.size() < remaining)
                return false;

            for (int p = 0; p < _h.order(); ++p) {
                if (! _assigned[p])
                    continue;
                int waiting = 0;
                for (int q : _h.neighbors(p))
                    waiting += ! _assigned[q];
                if (waiting > 0 && (neighborhood(_g, _branch[p]) & free).size() < waiting)
                    return false;
            }

            for (int q = 0; q < _h.order(); ++q) {
                if (_assigned[q])
                    continue;
                auto avail = available_for(q, used);
                if (avail.empty())
                    return false;
                vector<VertexSet> targets;
                for (int p : _h.neighbors(q))
                    if (_assigned[p])
                        targets.push_back(neighborhood(_g, _branch[p]));
                if (targets.empty())
                    continue;
                bool ok = false;
                for (auto & comp : components_within(_g, avail)) {
                    bool all = true;
                    for (auto & t : targets)
                        all = all && comp.intersects(t);
                    if (all) {
                        ok = true;
                        break;
                    }
                }
                if (! ok)
                    return false;
            }
            return true;
        }

        auto search(std::size_t depth, const VertexSet & used) -> bool
        {
            if (depth == _order.size())
                return true;
            int q = _order[depth];
            auto avail = available_for(q, used);
            vector<VertexSet> targets;
            for (int p : _h.neighbors(q))
                if (_assigned[p])
                    targets.push_back(neighborhood(_g, _branch[p]));

            int later = static_cast<int>(_order.size() - depth - 1);
            int max_size = (_g.all() - used).size() - later;
            ConnectedSets sets(_g, avail);
            for (int size = 1; size <= max_size; ++size) {
                bool done = sets.each(size, [&](const VertexSet & b) -> bool {
                    if (! _budget.spend()) {
                        _out_of_budget = true;
                        return true;
                    }
                    for (auto & t : targets)
                        if (! b.intersects(t))
                            return false;
                    _branch[q] = b;
                    _assigned[q] = true;
                    auto used2 = used | b;
                    if (feasible(used2) && search(depth + 1, used2))
                        return true;
                    _assigned[q] = false;
                    return _out_of_budget;
                });
                if (done)
                    return ! _out_of_budget;
            }
            return false;
        }

        const Graph & _g;
        const Graph & _h;
        Budget & _budget;
        vector<int> _order;
        vector<VertexSet> _branch;
        vector<bool> _assigned;
        bool _out_of_budget = false;
    };
}

auto pwind::find_induced_minor(const Graph & g, const Graph & h, Budget & budget) -> SearchResult<ModelAssignment>
{
    return InducedMinorSearch(g, h, budget).run();
}

auto pwind::find_induced_subgraph(const Graph & g, const Graph & h, Budget & budget) -> SearchResult<Embedding>
{
    int n = h.order();
    auto order = pattern_order(h);
    vector<int> image(n, -1);
    bool out_of_budget = false;

    std::function<bool(int, const VertexSet &)> search = [&](int depth, const VertexSet & used) -> bool {
        if (depth == n)
            return true;
        int p = order[depth];
        auto cand = g.all() - used;
        for (int i = 0; i < depth; ++i) {
            int q = order[i];
            if (h.adjacent(p, q))
                cand &= g.neighbor_set(image[q]);
            else
                cand -= g.neighbor_set(image[q]);
        }
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            if (g.degree(v) < h.degree(p))
                continue;
            if (! budget.spend()) {
                out_of_budget = true;
                return false;
            }
            image[p] = v;
            auto used2 = used;
            used2.insert(v);
            if (search(depth + 1, used2))
                return true;
            if (out_of_budget)
                return false;
        }
        image[p] = -1;
        return false;
    };

    if (search(0, VertexSet(g.order())))
        return SearchResult<Embedding>::found({image});
    if (out_of_budget)
        return SearchResult<Embedding>::exhausted();
    return SearchResult<Embedding>::absent();
}

namespace
{
    struct TreeLayout
    {
        Subdivision subdivision;
        Wall wall;
        vector<int> image; // subdivision vertex -> wall vertex
    };

    auto lay_out_tree(int r) -> TreeLayout
    {
        if (r < 1 || r > 4)
            throw std::invalid_argument("obs_trees_a supports 1 <= r <= 4");
        int big = 1 << r;
        auto tree = make_tree(2, r);
        auto wall = make_wall(big);

        // tree vertex -> (row, column) of its node and the wall route to each child
        int n = tree.graph.order();
        vector<std::pair<int, int>> node_at(n);
        vector<int> left(n, 0); // left end of the column interval
        std::map<Edge, vector<std::pair<int, int>>> route;
        node_at[0] = {0, big - 1};
        for (int v = 0; v < n; ++v) {
            int k = tree.depth[v];
            if (k == r)
                continue;
            int width = 1 << (r + 1 - k), a = left[v];
            auto [row, col] = node_at[v];
            auto & kids = tree.children[v];
            if (width == 4) {
                for (int j = 0; j < 2; ++j) {
                    int c = a + 2 * j;
                    node_at[kids[j]] = {row + 1, c};
                    route[{v, kids[j]}] = {{row, col}, {row, c}, {row + 1, c}};
                }
                continue;
            }
            int ends[2] = {a + width / 4 - 2, a + 3 * width / 4 - 2};
            for (int j = 0; j < 2; ++j) {
                int c = ends[j];
                vector<std::pair<int, int>> steps;
                int dir = c < col ? -1 : 1;
                for (int x = col; x != c; x += dir)
                    steps.emplace_back(row, x);
                steps.emplace_back(row, c);
                steps.emplace_back(row + 1, c);
                steps.emplace_back(row + 1, c + 1);
                steps.emplace_back(row + 2, c + 1);
                node_at[kids[j]] = {row + 2, c + 1};
                left[kids[j]] = a + j * width / 2;
                route[{v, kids[j]}] = steps;
            }
        }

        std::map<Edge, int> lengths;
        for (auto & [e, steps] : route)
            lengths[e] = static_cast<int>(steps.size()) - 1;
        TreeLayout out{subdivide(tree.graph, lengths), wall, {}};
        out.image.assign(out.subdivision.graph.order(), -1);
        for (auto & [e, steps] : route) {
            auto & verts = out.subdivision.edge_paths.at(e);
            for (std::size_t i = 0; i < steps.size(); ++i) {
                int w = wall.at(steps[i].first, steps[i].second);
                if (w < 0)
                    throw std::logic_error("tree layout left the wall");
                out.image[verts[i]] = w;
            }
        }
        return out;
    }
}

auto pwind::obs_trees_a(int r) -> TreeInWall
{
    auto layout = lay_out_tree(r);
    return {layout.wall.graph, layout.subdivision.graph, {layout.image}};
}

auto pwind::obs_trees_a_line(int r) -> TreeInWall
{
    auto layout = lay_out_tree(r);
    auto wall_line = line_graph(layout.wall.graph);
    auto tree_line = line_graph(layout.subdivision.graph);
    std::map<Edge, int> index;
    for (int i = 0; i < wall_line.graph.order(); ++i)
        index[wall_line.edge_of_vertex[i]] = i;
    Embedding e;
    for (auto [u, v] : tree_line.edge_of_vertex) {
        int a = layout.image[u], b = layout.image[v];
        e.image.push_back(index.at({std::min(a, b), std::max(a, b)}));
    }
    return {wall_line.graph, tree_line.graph, e};
}

auto pwind::obs_trees_b(int d, int r) -> ModelAssignment
{
    if (d < 1 || r < 0 || d * r > 12)
        throw std::invalid_argument("obs_trees_b needs d >= 1 and d * r <= 12");
    auto host = make_tree(2, d * r);
    auto pattern = make_tree(1 << d, r);
    ModelAssignment m{host.graph, pattern.graph, vector<VertexSet>(pattern.graph.order(), VertexSet(host.graph.order())), true};

    vector<int> image(pattern.graph.order(), -1);
    image[0] = 0;
    for (int p = 0; p < pattern.graph.order(); ++p) {
        int u = image[p];
        // the slab: u and its descendants less than d levels below
        vector<int> level{u};
        for (int step = 0; step < d; ++step) {
            vector<int> next;
            for (int x : level) {
                if (pattern.depth[p] < r)
                    m.branch[p].insert(x);
                else if (step == 0)
                    m.branch[p].insert(x);
                for (int c : host.children[x])
                    next.push_back(c);
            }
            level = std::move(next);
        }
        for (std::size_t j = 0; j < pattern.children[p].size(); ++j)
            image[pattern.children[p][j]] = level[j];
    }
    return m;
}

namespace
{
    // Unit-capacity max flow on the split graph: node 2v is v_in, 2v+1 is v_out.
    class SplitFlow
    {
    public:
        SplitFlow(const Graph & g, const VertexSet & x, const VertexSet & y) : _n(g.order())
        {
            _source = 2 * _n;
            _sink = 2 * _n + 1;
            _adj.resize(2 * _n + 2);
            for (int v = 0; v < _n; ++v)
                add(2 * v, 2 * v + 1);
            for (auto [u, v] : g.edges()) {
                add(2 * u + 1, 2 * v);
                add(2 * v + 1, 2 * u);
            }
            x.for_each([&](int v) { add(_source, 2 * v); });
            y.for_each([&](int v) { add(2 * v + 1, _sink); });
        }

        auto augment() -> bool
        {
            vector<int> via(_adj.size(), -1);
            vector<int> queue{_source};
            vector<bool> seen(_adj.size(), false);
            seen[_source] = true;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int a = queue[h];
                for (int e : _adj[a]) {
                    int b = _to[e];
                    if (_cap[e] > 0 && ! seen[b]) {
                        seen[b] = true;
                        via[b] = e;
                        queue.push_back(b);
                    }
                }
            }
            if (! seen[_sink])
                return false;
            for (int b = _sink; b != _source; b = _to[via[b] ^ 1]) {
                --_cap[via[b]];
                ++_cap[via[b] ^ 1];
            }
            return true;
        }

        // Walks from X to Y carried by the flow.
        auto walks() -> vector<Path>
        {
            vector<Path> out;
            vector<int> used(_to.size(), 0);
            for (int e0 : _adj[_source]) {
                if (! carries(e0, used))
                    continue;
                ++used[e0];
                Path p;
                int a = _to[e0];
                while (a != _sink) {
                    if (a % 2 == 0)
                        p.vertices.push_back(a / 2);
                    for (int e : _adj[a])
                        if (carries(e, used)) {
                            ++used[e];
                            a = _to[e];
                            break;
                        }
                }
                out.push_back(p);
            }
            return out;
        }

    private:
        auto add(int a, int b) -> void
        {
            _adj[a].push_back(static_cast<int>(_to.size()));
            _to.push_back(b);
            _cap.push_back(1);
            _adj[b].push_back(static_cast<int>(_to.size()));
            _to.push_back(a);
            _cap.push_back(0);
        }

        // forward arc with one unit of flow not yet consumed by walk extraction
        auto carries(int e, const vector<int> & used) const -> bool { return e % 2 == 0 && _cap[e] == 0 && used[e] == 0; }

        int _n, _source, _sink;
        vector<vector<int>> _adj;
        vector<int> _to, _cap;
    };
}

auto pwind::disjoint_xy_paths(const Graph & g, const VertexSet & x, const VertexSet & y, int k) -> optional<vector<Path>>
{
    if (k <= 0)
        return vector<Path>{};
    SplitFlow flow(g, x, y);
    int value = 0;
    while (value < k && flow.augment())
        ++value;
    if (value < k)
        return std::nullopt;
    vector<Path> paths;
    for (auto & w : flow.walks())
        paths.push_back(trim_to_xy_path(g, x, y, w));
    return paths;
}

auto pwind::enumerate_xy_paths(const Graph & g, const VertexSet & x, const VertexSet & y, const VertexSet & universe,
    Budget & budget) -> SearchResult<vector<Path>>
{
    vector<Path> out;
    bool out_of_budget = false;
    Path cur;
    VertexSet on_path(g.order()), near(g.order());

    std::function<void()> extend = [&]() {
        int last = cur.vertices.back();
        for (int w : g.neighbors(last)) {
            if (out_of_budget)
                return;
            if (! universe.contains(w) || x.contains(w) || on_path.contains(w))
                continue;
            // w may only touch the last vertex of the path
            auto earlier = near - g.neighbor_set(last);
            if (earlier.contains(w))
                continue;
            bool chord = false;
            for (std::size_t i = 0; i + 1 < cur.vertices.size() && ! chord; ++i)
                chord = g.adjacent(cur.vertices[i], w);
            if (chord)
                continue;
            if (! budget.spend()) {
                out_of_budget = true;
                return;
            }
            cur.vertices.push_back(w);
            if (y.contains(w))
                out.push_back(cur);
            else {
                on_path.insert(w);
                extend();
                on_path.erase(w);
            }
            cur.vertices.pop_back();
        }
    };

    (x & universe).for_each([&](int v) {
        if (out_of_budget)
            return;
        if (y.contains(v)) {
            out.push_back(Path{{v}});
            return;
        }
        cur.vertices = {v};
        on_path.insert(v);
        extend();
        on_path.erase(v);
    });
    if (out_of_budget)
        return SearchResult<vector<Path>>::exhausted();
    return SearchResult<vector<Path>>::found(std::move(out));
}

auto pwind::anticomplete_path_packing(const Graph & g, const VertexSet & x, const VertexSet & y, int k,
    const VertexSet & universe, Budget & budget) -> SearchResult<vector<Path>>
{
    if (k <= 0)
        return SearchResult<vector<Path>>::found({});
    if (k == 1) {
        // a single shortest path needs no packing search
        auto p = find_xy_path(g, x, y, universe);
        if (! p)
            return SearchResult<vector<Path>>::absent();
        return SearchResult<vector<Path>>::found({*p});
    }
    auto listed = enumerate_xy_paths(g, x, y, universe, budget);
    if (listed.is_exhausted())
        return SearchResult<vector<Path>>::exhausted();
    auto & paths = *listed.witness;
    int m = static_cast<int>(paths.size());
    if (m < k)
        return SearchResult<vector<Path>>::absent();

    // compatibility graph over paths: edge when anticomplete
    int n = g.order();
    vector<VertexSet> sets, closed;
    for (auto & p : paths) {
        sets.push_back(p.vertex_set(n));
        closed.push_back(sets.back() | neighborhood(g, sets.back()));
    }
    vector<VertexSet> compatible(m, VertexSet(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (! closed[i].intersects(sets[j])) {
                compatible[i].insert(j);
                compatible[j].insert(i);
            }

    vector<int> chosen;
    bool out_of_budget = false;
    std::function<bool(const VertexSet &)> pick = [&](const VertexSet & cand) -> bool {
        if (static_cast<int>(chosen.size()) == k)
            return true;
        if (static_cast<int>(chosen.size()) + cand.size() < k)
            return false;
        for (int i = cand.first(); i >= 0; i = cand.next(i)) {
            if (! budget.spend()) {
                out_of_budget = true;
                return false;
            }
            chosen.push_back(i);
            auto rest = cand & compatible[i];
            VertexSet later(m);
            rest.for_each([&](int j) {
                if (j > i)
                    later.insert(j);
            });
            if (pick(later))
                return true;
            chosen.pop_back();
            if (out_of_budget)
                return false;
        }
        return false;
    };
    if (pick(VertexSet::full(m))) {
        vector<Path> result;
        for (int i : chosen)
            result.push_back(paths[i]);
        return SearchResult<vector<Path>>::found(std::move(result));
    }
    if (out_of_budget)
        return SearchResult<vector<Path>>::exhausted();
    return SearchResult<vector<Path>>::absent();
}

auto pwind::serialize_model(const ModelAssignment & m) -> std::string
{
    std::ostringstream out;
    for (std::size_t p = 0; p < m.branch.size(); ++p) {
        out << p << ':';
        m.branch[p].for_each([&](int v) { out << ' ' << v; });
        out << '\n';
    }
    return out.str();
}

namespace
{
    auto parse_witness_lines(const std::string & text, int pattern_order) -> vector<vector<int>>
    {
        vector<vector<int>> rows(pattern_order);
        vector<bool> seen(pattern_order, false);
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw GraphError("witness line without ':': " + line);
            int p = std::stoi(line.substr(0, colon));
            if (p < 0 || p >= pattern_order || seen[p])
                throw GraphError("bad or repeated pattern vertex in witness: " + line);
            seen[p] = true;
            std::istringstream ls(line.substr(colon + 1));
            int v;
            while (ls >> v)
                rows[p].push_back(v);
            if (! ls.eof())
                throw GraphError("malformed witness line: " + line);
        }
        for (int p = 0; p < pattern_order; ++p)
            if (! seen[p])
                throw GraphError("witness misses pattern vertex " + std::to_string(p));
        return rows;
    }
}

auto pwind::parse_model_branches(const std::string & text, int pattern_order, int host_order) -> vector<VertexSet>
{
    vector<VertexSet> out;
    for (auto & row : parse_witness_lines(text, pattern_order)) {
        for (int v : row)
            if (v < 0 || v >= host_order)
                throw GraphError("witness vertex out of range: " + std::to_string(v));
        out.push_back(VertexSet::of(host_order, row));
    }
    return out;
}

auto pwind::serialize_embedding(const Embedding & e) -> std::string
{
    std::ostringstream out;
    for (std::size_t p = 0; p < e.image.size(); ++p)
        out << p << ": " << e.image[p] << '\n';
    return out.str();
}

auto pwind::parse_embedding(const std::string & text, int pattern_order) -> Embedding
{
    Embedding e;
    for (auto & row : parse_witness_lines(text, pattern_order)) {
        if (row.size() != 1)
            throw GraphError("embedding lines need exactly one host vertex");
        e.image.push_back(row[0]);
    }
    return e;
}
