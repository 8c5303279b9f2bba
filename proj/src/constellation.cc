#include <pwind/constellation.hh>

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

using namespace pwind;

using std::optional;
using std::string;
using std::vector;

auto pwind::build_constellation(const ConstellationSpec & spec) -> Constellation
{
    int s = spec.s, l = static_cast<int>(spec.lengths.size());
    if (s < 0 || static_cast<int>(spec.attach.size()) != s)
        throw GraphError("constellation spec: attachment table does not match s");
    vector<int> start(l);
    int n = s;
    for (int j = 0; j < l; ++j) {
        if (spec.lengths[j] < 0)
            throw GraphError("constellation spec: negative path length");
        start[j] = n;
        n += spec.lengths[j] + 1;
    }
    vector<Edge> edges;
    Constellation c;
    for (int j = 0; j < l; ++j) {
        Path p;
        for (int k = 0; k <= spec.lengths[j]; ++k) {
            p.vertices.push_back(start[j] + k);
            if (k > 0)
                edges.emplace_back(start[j] + k - 1, start[j] + k);
        }
        c.paths.push_back(p);
    }
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(spec.attach[i].size()) != l)
            throw GraphError("constellation spec: S-vertex " + std::to_string(i) + " lacks a row for some path");
        for (int j = 0; j < l; ++j) {
            auto & pos = spec.attach[i][j];
            if (pos.empty())
                throw GraphError("constellation spec: x_" + std::to_string(i) + " misses path " + std::to_string(j));
            for (std::size_t k = 0; k < pos.size(); ++k) {
                if (pos[k] < 0 || pos[k] > spec.lengths[j] || (k > 0 && pos[k] <= pos[k - 1]))
                    throw GraphError("constellation spec: bad attachment positions");
                edges.emplace_back(i, start[j] + pos[k]);
            }
        }
        c.s_vertices.push_back(i);
    }
    std::sort(edges.begin(), edges.end());
    c.host = Graph(n, edges);
    if (auto problem = constellation_problem(c); ! problem.empty())
        throw GraphError("constellation spec: " + problem);
    return c;
}

auto pwind::constellation_problem(const Constellation & c) -> string
{
    int n = c.host.order();
    auto s = c.s_set();
    if (! is_stable(c.host, s))
        return "S is not stable";
    VertexSet covered(n);
    for (std::size_t j = 0; j < c.paths.size(); ++j) {
        auto & p = c.paths[j];
        if (p.vertices.empty() || ! is_induced_path(c.host, p))
            return "path " + std::to_string(j) + " is not an induced path";
        auto vs = p.vertex_set(n);
        if (vs.intersects(covered) || vs.intersects(s))
            return "path " + std::to_string(j) + " overlaps S or another path";
        covered |= vs;
        for (int x : c.s_vertices)
            if (! c.host.neighbor_set(x).intersects(vs))
                return "an S-vertex has no neighbour on path " + std::to_string(j);
    }
    if ((covered | s) != c.host.all())
        return "some vertex is neither in S nor on a path";
    // paths must be whole components of host - S
    for (std::size_t j = 0; j < c.paths.size(); ++j) {
        auto vs = c.paths[j].vertex_set(n);
        if (neighborhood(c.host, vs).intersects(covered))
            return "path " + std::to_string(j) + " touches another path";
    }
    return "";
}

auto pwind::constellation_from(const Graph & host, const VertexSet & s) -> Constellation
{
    Constellation c;
    c.host = host;
    c.s_vertices = s.to_vector();
    for (auto & comp : components_within(host, host.all() - s)) {
        // walk the component from its smaller end
        int start = -1;
        comp.for_each([&](int v) {
            if (start < 0 && (host.neighbor_set(v) & comp).size() <= 1)
                start = v;
        });
        if (start < 0)
            throw GraphError("component of host - S is not a path");
        Path p{{start}};
        int prev = -1, cur = start;
        while (true) {
            int next = -1;
            for (int w : host.neighbors(cur))
                if (w != prev && comp.contains(w)) {
                    next = w;
                    break;
                }
            if (next < 0)
                break;
            p.vertices.push_back(next);
            prev = cur;
            cur = next;
            if (static_cast<int>(p.vertices.size()) > comp.size())
                throw GraphError("component of host - S is not a path");
        }
        if (static_cast<int>(p.vertices.size()) != comp.size())
            throw GraphError("component of host - S is not a path");
        c.paths.push_back(p);
    }
    if (auto problem = constellation_problem(c); ! problem.empty())
        throw GraphError(problem);
    return c;
}

auto pwind::spec_of(const Constellation & c) -> ConstellationSpec
{
    ConstellationSpec spec;
    spec.s = c.s();
    for (auto & p : c.paths)
        spec.lengths.push_back(p.length());
    spec.attach.assign(c.s(), vector<vector<int>>(c.l()));
    for (int i = 0; i < c.s(); ++i)
        for (int j = 0; j < c.l(); ++j)
            for (std::size_t k = 0; k < c.paths[j].vertices.size(); ++k)
                if (c.host.adjacent(c.s_vertices[i], c.paths[j].vertices[k]))
                    spec.attach[i][j].push_back(static_cast<int>(k));
    return spec;
}

auto pwind::parse_constellation_spec(const string & text) -> ConstellationSpec
{
    std::istringstream in(text);
    string line;
    vector<string> lines;
    while (std::getline(in, line))
        if (! line.empty() && line[0] != '#' && line.find_first_not_of(" \t\r") != string::npos)
            lines.push_back(line);
    if (lines.size() < 2)
        throw GraphError("constellation file: missing header");
    ConstellationSpec spec;
    int l;
    {
        std::istringstream h(lines[0]);
        if (! (h >> spec.s >> l) || spec.s < 0 || l < 0)
            throw GraphError("constellation file: bad header");
    }
    {
        std::istringstream h(lines[1]);
        int len;
        while (h >> len)
            spec.lengths.push_back(len);
        if (static_cast<int>(spec.lengths.size()) != l)
            throw GraphError("constellation file: expected " + std::to_string(l) + " path lengths");
    }
    spec.attach.assign(spec.s, vector<vector<int>>(l));
    vector<vector<bool>> seen(spec.s, vector<bool>(l, false));
    for (std::size_t k = 2; k < lines.size(); ++k) {
        std::istringstream h(lines[k]);
        int i, j, count;
        if (! (h >> i >> j >> count) || i < 0 || i >= spec.s || j < 0 || j >= l || count < 0 || seen[i][j])
            throw GraphError("constellation file: bad attachment line: " + lines[k]);
        seen[i][j] = true;
        for (int t = 0; t < count; ++t) {
            int pos;
            if (! (h >> pos))
                throw GraphError("constellation file: short attachment line: " + lines[k]);
            spec.attach[i][j].push_back(pos);
        }
    }
    return spec;
}

auto pwind::serialize_constellation_spec(const ConstellationSpec & spec) -> string
{
    std::ostringstream out;
    out << spec.s << ' ' << spec.lengths.size() << '\n';
    for (std::size_t j = 0; j < spec.lengths.size(); ++j)
        out << (j ? " " : "") << spec.lengths[j];
    out << '\n';
    for (int i = 0; i < spec.s; ++i)
        for (std::size_t j = 0; j < spec.attach[i].size(); ++j) {
            out << i << ' ' << j << ' ' << spec.attach[i][j].size();
            for (int p : spec.attach[i][j])
                out << ' ' << p;
            out << '\n';
        }
    return out.str();
}

namespace
{
    // positions[i][j]: sorted positions on path j adjacent to x_i
    auto attachment_positions(const Constellation & c) -> vector<vector<vector<int>>>
    {
        return spec_of(c).attach;
    }
}

auto pwind::enumerate_routes(const Constellation & c) -> vector<Route>
{
    auto pos = attachment_positions(c);
    int s = c.s();
    vector<Route> routes;
    auto touched = [&](int j, int lo, int hi) {
        VertexSet t(s);
        for (int k = 0; k < s; ++k) {
            auto & ps = pos[k][j];
            auto it = std::lower_bound(ps.begin(), ps.end(), lo);
            if (it != ps.end() && *it <= hi)
                t.insert(k);
        }
        return t;
    };
    for (int j = 0; j < c.l(); ++j)
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b)
                for (int dir = 0; dir < 2; ++dir) {
                    // dir 0: x_a at the low end; dir 1: x_b at the low end
                    auto & low = dir == 0 ? pos[a][j] : pos[b][j];
                    auto & high = dir == 0 ? pos[b][j] : pos[a][j];
                    for (std::size_t k = 0; k < low.size(); ++k) {
                        int lo = low[k];
                        int next_low = k + 1 < low.size() ? low[k + 1] : c.paths[j].length() + 1;
                        auto it = std::lower_bound(high.begin(), high.end(), lo);
                        if (it == high.end() || *it >= next_low)
                            continue;
                        int hi = *it;
                        if (dir == 1 && hi == lo)
                            continue; // already listed with dir 0
                        routes.push_back({a, b, j, lo, hi, dir == 0, touched(j, lo, hi)});
                    }
                }
    return routes;
}

auto pwind::route_path(const Constellation & c, const Route & r) -> Path
{
    Path p;
    auto & line = c.paths[r.path].vertices;
    p.vertices.push_back(c.s_vertices[r.a]);
    if (r.a_at_lo)
        for (int k = r.lo; k <= r.hi; ++k)
            p.vertices.push_back(line[k]);
    else
        for (int k = r.hi; k >= r.lo; --k)
            p.vertices.push_back(line[k]);
    p.vertices.push_back(c.s_vertices[r.b]);
    return p;
}

auto pwind::is_d_ample(const Constellation & c, int d) -> bool
{
    for (auto & r : enumerate_routes(c))
        if (r.length() <= d + 1)
            return false;
    return true;
}

auto pwind::no_common_neighbours(const Constellation & c) -> bool
{
    VertexSet lines(c.host.order());
    for (auto & p : c.paths)
        lines |= p.vertex_set(c.host.order());
    for (int a = 0; a < c.s(); ++a)
        for (int b = a + 1; b < c.s(); ++b)
            if ((c.host.neighbor_set(c.s_vertices[a]) & c.host.neighbor_set(c.s_vertices[b]) & lines).size() > 0)
                return false;
    return true;
}

namespace
{
    // routes grouped by unordered S pair
    auto routes_by_pair(const Constellation & c) -> vector<vector<vector<Route>>>
    {
        vector<vector<vector<Route>>> out(c.s(), vector<vector<Route>>(c.s()));
        for (auto & r : enumerate_routes(c)) {
            out[r.a][r.b].push_back(r);
            out[r.b][r.a].push_back(r);
        }
        return out;
    }

    auto check_ordering(const Constellation & c, const vector<int> & ordering) -> void
    {
        vector<bool> seen(c.s(), false);
        if (static_cast<int>(ordering.size()) != c.s())
            throw std::invalid_argument("ordering has the wrong length");
        for (int v : ordering) {
            if (v < 0 || v >= c.s() || seen[v])
                throw std::invalid_argument("ordering is not a permutation of S");
            seen[v] = true;
        }
    }

    // Placing `x` after `prefix`: every route between two earlier vertices must meet x.
    auto interrupted_step(const vector<vector<vector<Route>>> & pairs, const vector<int> & prefix, int x) -> bool
    {
        for (std::size_t i = 0; i < prefix.size(); ++i)
            for (std::size_t j = i + 1; j < prefix.size(); ++j)
                for (auto & r : pairs[prefix[i]][prefix[j]])
                    if (! r.touched.contains(x))
                        return false;
        return true;
    }

    // Placing `x` after `prefix`: each route from an earlier vertex to x misses fewer than q vertices in between.
    auto zigzag_step(const vector<vector<vector<Route>>> & pairs, const vector<int> & prefix, int x, int q) -> bool
    {
        for (std::size_t i = 0; i < prefix.size(); ++i)
            for (auto & r : pairs[prefix[i]][x]) {
                int missed = 0;
                for (std::size_t k = i + 1; k < prefix.size(); ++k)
                    missed += ! r.touched.contains(prefix[k]);
                if (missed >= q)
                    return false;
            }
        return true;
    }
}

auto pwind::is_interrupted_with(const Constellation & c, const vector<int> & ordering) -> bool
{
    check_ordering(c, ordering);
    auto pairs = routes_by_pair(c);
    vector<int> prefix;
    for (int x : ordering) {
        if (! interrupted_step(pairs, prefix, x))
            return false;
        prefix.push_back(x);
    }
    return true;
}

auto pwind::is_zigzagged_with(const Constellation & c, int q, const vector<int> & ordering) -> bool
{
    check_ordering(c, ordering);
    auto pairs = routes_by_pair(c);
    vector<int> prefix;
    for (int x : ordering) {
        if (! zigzag_step(pairs, prefix, x, q))
            return false;
        prefix.push_back(x);
    }
    return true;
}

auto pwind::find_interrupted_ordering(const Constellation & c) -> optional<vector<int>>
{
    if (c.s() > 10)
        throw std::invalid_argument("ordering search supports at most 10 S-vertices");
    auto pairs = routes_by_pair(c);
    vector<int> prefix;
    // whether the remaining vertices can follow depends only on the placed set
    std::unordered_set<unsigned> dead;
    std::function<bool(unsigned)> place = [&](unsigned placed) -> bool {
        if (static_cast<int>(prefix.size()) == c.s())
            return true;
        if (dead.contains(placed))
            return false;
        for (int x = 0; x < c.s(); ++x) {
            if (placed >> x & 1 || ! interrupted_step(pairs, prefix, x))
                continue;
            prefix.push_back(x);
            if (place(placed | (1u << x)))
                return true;
            prefix.pop_back();
        }
        dead.insert(placed);
        return false;
    };
    if (place(0))
        return prefix;
    return std::nullopt;
}

auto pwind::find_zigzagged_ordering(const Constellation & c, int q) -> optional<vector<int>>
{
    if (c.s() > 10)
        throw std::invalid_argument("ordering search supports at most 10 S-vertices");
    auto pairs = routes_by_pair(c);
    vector<int> prefix;
    std::function<bool(unsigned)> place = [&](unsigned placed) -> bool {
        if (static_cast<int>(prefix.size()) == c.s())
            return true;
        for (int x = 0; x < c.s(); ++x) {
            if (placed >> x & 1 || ! zigzag_step(pairs, prefix, x, q))
                continue;
            prefix.push_back(x);
            if (place(placed | (1u << x)))
                return true;
            prefix.pop_back();
        }
        return false;
    };
    if (place(0))
        return prefix;
    return std::nullopt;
}
