#include <pwind/generators.hh>
#include <pwind/ramsey.hh>
#include <pwind/rng.hh>
#include <pwind/seedling.hh>

#include <algorithm>
#include <functional>
#include <sstream>

using namespace pwind;

using std::optional;
using std::string;
using std::vector;

auto Seedling::path_vertices() const -> VertexSet
{
    VertexSet v(host.order());
    for (auto & p : paths)
        v |= p.vertex_set(host.order());
    return v;
}

namespace
{
    auto fail(string reason) -> Check { return {false, std::move(reason)}; }

    auto in_range(const Graph & g, const Path & p) -> bool
    {
        return std::all_of(p.vertices.begin(), p.vertices.end(), [&](int v) { return v >= 0 && v < g.order(); });
    }

    // A walk with distinct vertices and consecutive adjacency; not necessarily induced.
    auto is_plain_path(const Graph & g, const Path & p) -> bool
    {
        if (p.vertices.empty() || ! in_range(g, p))
            return false;
        if (p.vertex_set(g.order()).size() != static_cast<int>(p.vertices.size()))
            return false;
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
            if (! g.adjacent(p.vertices[i], p.vertices[i + 1]))
                return false;
        return true;
    }

    auto line_of(const string & label, const vector<int> & vs) -> string
    {
        string s = label + ":";
        for (int v : vs)
            s += " " + std::to_string(v);
        return s + "\n";
    }
}

auto pwind::check_seedling_avoiding(const Seedling & sd, const VertexSet & removed) -> Check
{
    const Graph & g = sd.host;
    int n = g.order();
    if (sd.a.vertices.empty() || ! in_range(g, sd.a) || ! is_induced_path(g, sd.a))
        return fail("A is not an induced path");
    auto a = sd.a_set();
    if (a.intersects(removed))
        return fail("A meets the removed set");
    if (sd.y.universe() != n)
        return fail("Y has the wrong universe");
    if (sd.y.intersects(a))
        return fail("Y meets A");
    auto x = neighborhood(g, a);
    VertexSet used(n);
    for (std::size_t i = 0; i < sd.paths.size(); ++i) {
        auto & p = sd.paths[i];
        string tag = "path " + std::to_string(i);
        if (p.vertices.empty() || ! in_range(g, p))
            return fail(tag + " is empty or out of range");
        auto vs = p.vertex_set(n);
        if (vs.intersects(a) || vs.intersects(removed))
            return fail(tag + " meets A or the removed set");
        if (! is_xy_path(g, x, sd.y, p))
            return fail(tag + " is not an (N(A),Y)-path read from its N(A)-end");
        if (vs.intersects(used))
            return fail(tag + " meets an earlier path");
        used |= vs;
    }
    return {true, {}};
}

auto pwind::check_seedling(const Seedling & sd) -> Check
{
    return check_seedling_avoiding(sd, sd.host.none());
}

auto pwind::is_rigid(const Seedling & sd, int kappa, Budget & budget) -> RigidityResult
{
    auto c = check_seedling(sd);
    if (! c.valid)
        throw GraphError("invalid seedling: " + c.reason);
    auto packed =
        anticomplete_path_packing(sd.host, neighborhood(sd.host, sd.a_set()), sd.y, kappa, sd.path_vertices(), budget);
    if (packed.is_found())
        return {Rigidity::NotRigid, *packed.witness};
    if (packed.is_absent())
        return {Rigidity::Rigid, {}};
    return {Rigidity::Exhausted, {}};
}

auto pwind::verify_block(const StrongBlock & blk, int l) -> Check
{
    const Graph & g = blk.host;
    int n = g.order();
    if (! std::is_sorted(blk.b.begin(), blk.b.end()) || std::adjacent_find(blk.b.begin(), blk.b.end()) != blk.b.end())
        return fail("B is not a sorted set");
    for (int v : blk.b)
        if (v < 0 || v >= n)
            return fail("B vertex out of range");
    vector<std::pair<Edge, VertexSet>> covered;
    for (std::size_t i = 0; i < blk.b.size(); ++i)
        for (std::size_t j = i + 1; j < blk.b.size(); ++j) {
            Edge e{blk.b[i], blk.b[j]};
            string tag = std::to_string(e.first) + "-" + std::to_string(e.second);
            auto it = blk.families.find(e);
            if (it == blk.families.end() || static_cast<int>(it->second.size()) < l)
                return fail("pair " + tag + " has too few paths");
            VertexSet inner(n), all(n);
            for (auto & p : it->second) {
                if (! is_plain_path(g, p) || p.front() != e.first || p.back() != e.second)
                    return fail("pair " + tag + " has a malformed path");
                auto interior = p.interior(n);
                if (interior.intersects(inner))
                    return fail("pair " + tag + " paths are not internally disjoint");
                inner |= interior;
                all |= p.vertex_set(n);
            }
            covered.emplace_back(e, all);
        }
    for (std::size_t i = 0; i < covered.size(); ++i)
        for (std::size_t j = i + 1; j < covered.size(); ++j) {
            auto [e, s] = covered[i];
            auto [f, t] = covered[j];
            VertexSet shared(n);
            for (int v : {e.first, e.second})
                if (v == f.first || v == f.second)
                    shared.insert(v);
            if (! (s & t).subset_of(shared))
                return fail("families of two pairs meet outside a shared end");
        }
    return {true, {}};
}

auto pwind::block_to_anticomplete_paths(const StrongBlock & blk, int t, int g, Budget & budget)
    -> SearchResult<AnticompletePaths>
{
    using Result = SearchResult<AnticompletePaths>;
    auto c = verify_block(blk, 1);
    if (! c.valid)
        throw GraphError("malformed block: " + c.reason);
    const Graph & host = blk.host;
    int want = ramsey_guaranteed_size(static_cast<int>(blk.b.size()), t);
    auto r = ramsey_stable_or_clique(host, blk.b, want, t);
    if (r.kind != RamseyResult::Kind::Stable)
        return Result::absent();

    AnticompletePaths out;
    out.s = r.vertices;
    for (std::size_t i = 0; i < out.s.size(); ++i)
        for (std::size_t j = i + 1; j < out.s.size(); ++j) {
            int x = out.s[i], y = out.s[j];
            auto nx = host.neighbor_set(x), ny = host.neighbor_set(y);
            Seedling sd{host, Path{{x}}, {}, ny};
            for (auto & p : blk.families.at({x, y})) {
                auto inner = p.segment(1, p.length() - 1);
                sd.paths.push_back(trim_to_xy_path(host, nx, ny, inner));
            }
            if (! check_seedling(sd).valid)
                throw GraphError("block pair does not give a seedling");
            auto rigid = is_rigid(sd, g, budget);
            if (rigid.verdict == Rigidity::Exhausted)
                return Result::exhausted();
            if (rigid.verdict == Rigidity::Rigid)
                return Result::absent();
            auto & family = out.families[{x, y}];
            for (auto & k : rigid.witness) {
                Path q{{x}};
                q.vertices.insert(q.vertices.end(), k.vertices.begin(), k.vertices.end());
                q.vertices.push_back(y);
                family.push_back(std::move(q));
            }
        }
    return Result::found(std::move(out));
}

auto pwind::verify_anticomplete_paths(const StrongBlock & blk, const AnticompletePaths & out, int g) -> Check
{
    const Graph & host = blk.host;
    int n = host.order();
    for (int v : out.s)
        if (! std::binary_search(blk.b.begin(), blk.b.end(), v))
            return fail("S is not inside B");
    if (! is_stable(host, host.set(out.s)))
        return fail("S is not stable");
    for (std::size_t i = 0; i < out.s.size(); ++i)
        for (std::size_t j = i + 1; j < out.s.size(); ++j) {
            Edge e{out.s[i], out.s[j]};
            auto it = out.families.find(e);
            if (it == out.families.end() || static_cast<int>(it->second.size()) != g)
                return fail("pair family missing or wrong size");
            VertexSet allowed(n);
            for (auto & p : blk.families.at(e))
                allowed |= p.vertex_set(n);
            vector<VertexSet> interiors;
            for (auto & q : it->second) {
                if (! is_plain_path(host, q) || q.front() != e.first || q.back() != e.second || q.length() < 2)
                    return fail("malformed path");
                if (! q.vertex_set(n).subset_of(allowed))
                    return fail("path leaves the original family");
                interiors.push_back(q.interior(n));
            }
            for (std::size_t a = 0; a < interiors.size(); ++a)
                for (std::size_t b = a + 1; b < interiors.size(); ++b)
                    if (! anticomplete(host, interiors[a], interiors[b]))
                        return fail("two interiors are not anticomplete");
        }
    return {true, {}};
}

auto pwind::find_clique(const Graph & g, int size, Budget & budget) -> SearchResult<vector<int>>
{
    vector<int> chosen;
    bool out_of_budget = false;
    std::function<bool(VertexSet)> extend = [&](VertexSet cand) -> bool {
        if (static_cast<int>(chosen.size()) == size)
            return true;
        if (! budget.spend()) {
            out_of_budget = true;
            return false;
        }
        if (static_cast<int>(chosen.size()) + cand.size() < size)
            return false;
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            chosen.push_back(v);
            VertexSet later = cand & g.neighbor_set(v);
            for (int u = later.first(); u != -1 && u < v; u = later.next(u))
                later.erase(u);
            if (extend(later))
                return true;
            chosen.pop_back();
            if (out_of_budget)
                return false;
        }
        return false;
    };
    if (extend(g.all()))
        return SearchResult<vector<int>>::found(chosen);
    return out_of_budget ? SearchResult<vector<int>>::exhausted() : SearchResult<vector<int>>::absent();
}

auto pwind::check_tidy(const Graph & g, int t, Budget & budget) -> TidyReport
{
    TidyReport r;
    r.t = t;
    auto clique = find_clique(g, t + 1, budget);
    r.clique_outcome = clique.outcome;
    r.clique = clique.witness;
    auto ktt = find_induced_minor(g, make_complete_bipartite(t, t), budget);
    r.ktt_outcome = ktt.outcome;
    r.ktt_model = ktt.witness;
    return r;
}

auto pwind::serialize_seedling(const Seedling & sd) -> string
{
    string out = line_of("a", sd.a.vertices);
    for (auto & p : sd.paths)
        out += line_of("L", p.vertices);
    return out + line_of("Y", sd.y.to_vector());
}

auto pwind::parse_seedling(const Graph & host, const string & text) -> Seedling
{
    Seedling sd{host, {}, {}, host.none()};
    std::istringstream in(text);
    string line;
    bool saw_a = false, saw_y = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto colon = line.find(':');
        if (colon == string::npos)
            throw GraphError("seedling line without a label: " + line);
        string label = line.substr(0, colon);
        std::istringstream rest(line.substr(colon + 1));
        vector<int> vs;
        int v;
        while (rest >> v) {
            if (v < 0 || v >= host.order())
                throw GraphError("seedling vertex out of range");
            vs.push_back(v);
        }
        if (! rest.eof())
            throw GraphError("bad number in seedling line: " + line);
        if (label == "a")
            sd.a.vertices = vs, saw_a = true;
        else if (label == "L")
            sd.paths.push_back(Path{vs});
        else if (label == "Y")
            sd.y = host.set(vs), saw_y = true;
        else
            throw GraphError("unknown seedling label: " + label);
    }
    if (! saw_a || ! saw_y)
        throw GraphError("seedling needs an `a:` and a `Y:` line");
    return sd;
}

auto pwind::broom_seedling(int n) -> Seedling
{
    auto cp = crossing_paths_family(n);
    int root = cp.graph.order();
    auto edges = cp.graph.edges();
    for (auto & p : cp.paths)
        edges.emplace_back(p.front(), root);
    Graph host(root + 1, edges);
    VertexSet y(root + 1);
    for (auto & p : cp.paths)
        y.insert(p.back());
    return Seedling{host, Path{{root}}, cp.paths, y};
}

auto pwind::two_level_broom() -> Seedling
{
    constexpr int hubs = 8, leaves = 16;
    int next = 0;
    auto fresh = [&]() { return next++; };
    int root = fresh();

    vector<vector<int>> hub(hubs), leaf(leaves);
    vector<vector<int>> hub_slot(hubs, vector<int>(hubs, -1)), leaf_slot(leaves, vector<int>(leaves, -1));
    vector<vector<int>> contact(leaves, vector<int>(hubs, -1));
    for (int i = 0; i < hubs; ++i) {
        hub[i].push_back(fresh());
        for (int j = 0; j < hubs; ++j)
            if (j != i)
                hub[i].push_back(hub_slot[i][j] = fresh());
        hub[i].push_back(fresh());
    }
    for (int k = 0; k < leaves; ++k) {
        leaf[k].push_back(fresh());
        for (int l = 0; l < leaves; ++l)
            if (l != k)
                leaf[k].push_back(leaf_slot[k][l] = fresh());
        for (int i = 0; i < hubs; ++i)
            leaf[k].push_back(contact[k][i] = fresh());
        leaf[k].push_back(fresh());
    }

    vector<Edge> edges;
    auto along = [&](const vector<int> & p) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            edges.emplace_back(p[i], p[i + 1]);
    };
    for (int i = 0; i < hubs; ++i) {
        along(hub[i]);
        edges.emplace_back(root, hub[i].front());
        for (int j = i + 1; j < hubs; ++j)
            edges.emplace_back(hub_slot[i][j], hub_slot[j][i]);
        for (int k = 0; k < leaves; ++k)
            edges.emplace_back(hub[i].front(), contact[k][i]);
    }
    for (int k = 0; k < leaves; ++k) {
        along(leaf[k]);
        edges.emplace_back(root, leaf[k].front());
        for (int l = k + 1; l < leaves; ++l)
            edges.emplace_back(leaf_slot[k][l], leaf_slot[l][k]);
    }

    Graph host(next, edges);
    Seedling sd{host, Path{{root}}, {}, host.none()};
    for (auto & p : hub)
        sd.paths.push_back(Path{p});
    for (auto & p : leaf)
        sd.paths.push_back(Path{p});
    for (auto & p : sd.paths)
        sd.y.insert(p.back());
    return sd;
}

auto pwind::random_seedling(int a_len, int lambda, int max_len, double p, std::uint64_t seed) -> Seedling
{
    Rng rng(seed);
    int next = 0;
    vector<int> a;
    for (int i = 0; i < a_len; ++i)
        a.push_back(next++);
    vector<vector<int>> paths(lambda);
    vector<int> owner(a_len, -1);
    for (int i = 0; i < lambda; ++i) {
        int len = rng.between(1, max_len);
        for (int k = 0; k < len; ++k) {
            paths[i].push_back(next++);
            owner.push_back(i);
        }
    }
    int n = next;
    vector<VertexSet> adj(n, VertexSet(n));
    auto link = [&](int u, int v) {
        adj[u].insert(v);
        adj[v].insert(u);
    };
    for (int i = 0; i + 1 < a_len; ++i)
        link(a[i], a[i + 1]);
    for (auto & q : paths) {
        for (std::size_t k = 0; k + 1 < q.size(); ++k)
            link(q[k], q[k + 1]);
        link(q.front(), a[rng.between(0, a_len - 1)]);
    }
    for (int u = a_len; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (owner[u] != owner[v] && rng.chance(p) && ! adj[u].intersects(adj[v]))
                link(u, v);

    vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        adj[u].for_each([&](int v) {
            if (u < v)
                edges.emplace_back(u, v);
        });
    Graph host(n, edges);
    Seedling sd{host, Path{a}, {}, host.none()};
    for (auto & q : paths) {
        sd.paths.push_back(Path{q});
        sd.y.insert(q.back());
    }
    return sd;
}

auto pwind::planted_block(int k, int l, std::uint64_t seed) -> StrongBlock
{
    Rng rng(seed);
    int next = k;
    vector<Edge> edges;
    StrongBlock blk;
    for (int v = 0; v < k; ++v)
        blk.b.push_back(v);
    for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
            for (int i = 0; i < l; ++i) {
                Path p{{x}};
                int inner = rng.between(1, 2);
                for (int m = 0; m < inner; ++m)
                    p.vertices.push_back(next++);
                p.vertices.push_back(y);
                for (std::size_t m = 0; m + 1 < p.vertices.size(); ++m)
                    edges.emplace_back(std::min(p.vertices[m], p.vertices[m + 1]),
                        std::max(p.vertices[m], p.vertices[m + 1]));
                blk.families[{x, y}].push_back(std::move(p));
            }
    blk.host = Graph(next, edges);
    return blk;
}
