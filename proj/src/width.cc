#include <pwind/width.hh>

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

using namespace pwind;

using std::vector;

auto PathDecomposition::width() const -> int
{
    int w = -1;
    for (auto & b : bags)
        w = std::max(w, b.size() - 1);
    return w;
}

auto pwind::verify_path_decomposition(const Graph & g, const PathDecomposition & d) -> DecompositionCheck
{
    DecompositionCheck result;
    int n = g.order();
    vector<int> first(n, -1), last(n, -1), count(n, 0);
    for (int i = 0; i < static_cast<int>(d.bags.size()); ++i) {
        if (d.bags[i].universe() != n) {
            result.reason = "bag universe does not match graph";
            return result;
        }
        d.bags[i].for_each([&](int v) {
            if (first[v] < 0)
                first[v] = i;
            last[v] = i;
            ++count[v];
        });
    }
    for (int v = 0; v < n; ++v) {
        if (first[v] < 0) {
            result.reason = "vertex " + std::to_string(v) + " is in no bag";
            return result;
        }
        if (last[v] - first[v] + 1 != count[v]) {
            result.reason = "bags containing vertex " + std::to_string(v) + " are not contiguous";
            return result;
        }
    }
    for (auto [u, v] : g.edges())
        if (last[u] < first[v] || last[v] < first[u]) {
            result.reason = "edge " + std::to_string(u) + " " + std::to_string(v) + " is in no bag";
            return result;
        }
    result.valid = true;
    result.width = d.width();
    return result;
}

namespace
{
    auto boundary(const Graph & g, const VertexSet & s) -> VertexSet
    {
        VertexSet result(g.order());
        s.for_each([&](int v) {
            if (! g.neighbor_set(v).subset_of(s))
                result.insert(v);
        });
        return result;
    }
}

auto pwind::decomposition_from_ordering(const Graph & g, const vector<int> & order) -> PathDecomposition
{
    PathDecomposition d;
    VertexSet placed(g.order());
    for (int v : order) {
        auto bag = boundary(g, placed);
        bag.insert(v);
        d.bags.push_back(bag);
        placed.insert(v);
    }
    return d;
}

auto pwind::pathwidth_exact(const Graph & g, Budget & budget) -> SearchResult<WidthResult>
{
    int n = g.order();
    if (n > 26)
        throw std::invalid_argument("pathwidth_exact supports at most 26 vertices");
    if (n == 0)
        return SearchResult<WidthResult>::found({-1, {}});

    vector<std::uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            nbr[v] |= std::uint32_t{1} << u;

    std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
    // f[S] = vertex separation of the best ordering of S placed first
    vector<std::uint8_t> f(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (! budget.spend())
            return SearchResult<WidthResult>::exhausted();
        int bd = 0;
        int best = 255;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (nbr[v] & ~s)
                ++bd;
            best = std::min<int>(best, f[s & ~(std::uint32_t{1} << v)]);
        }
        f[s] = static_cast<std::uint8_t>(std::max(bd, best));
    }

    vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        int pick = -1;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (pick < 0 || f[s & ~(std::uint32_t{1} << v)] < f[s & ~(std::uint32_t{1} << pick)])
                pick = v;
        }
        order[i] = pick;
        s &= ~(std::uint32_t{1} << pick);
    }
    WidthResult r{f[full], decomposition_from_ordering(g, order)};
    return SearchResult<WidthResult>::found(std::move(r));
}

auto pwind::pathwidth_at_most(const Graph & g, int k, Budget & budget) -> SearchResult<PathDecomposition>
{
    int n = g.order();
    if (n == 0)
        return SearchResult<PathDecomposition>::found({});
    if (k < 0)
        return SearchResult<PathDecomposition>::absent();

    std::unordered_set<VertexSet, VertexSetHash> failed;
    vector<int> order;
    bool out_of_budget = false;

    std::function<bool(VertexSet)> extend = [&](VertexSet s) -> bool {
        std::size_t mark = order.size();
        // a vertex whose neighbours are all placed never hurts
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 0; v < n; ++v)
                if (! s.contains(v) && g.neighbor_set(v).subset_of(s)) {
                    s.insert(v);
                    order.push_back(v);
                    changed = true;
                }
        }
        if (s.size() == n)
            return true;
        if (failed.contains(s)) {
            order.resize(mark);
            return false;
        }
        if (! budget.spend()) {
            out_of_budget = true;
            order.resize(mark);
            return false;
        }
        for (int v = 0; v < n; ++v) {
            if (s.contains(v))
                continue;
            auto next = s;
            next.insert(v);
            if (boundary(g, next).size() > k)
                continue;
            order.push_back(v);
            if (extend(next))
                return true;
            order.pop_back();
            if (out_of_budget)
                break;
        }
        if (! out_of_budget)
            failed.insert(s);
        order.resize(mark);
        return false;
    };

    if (extend(VertexSet(n)))
        return SearchResult<PathDecomposition>::found(decomposition_from_ordering(g, order));
    if (out_of_budget)
        return SearchResult<PathDecomposition>::exhausted();
    return SearchResult<PathDecomposition>::absent();
}

namespace
{
    struct KeyHash
    {
        auto operator()(const std::pair<VertexSet, int> & p) const -> std::size_t
        {
            return p.first.hash() * 31 + static_cast<std::size_t>(p.second);
        }
    };

    class TreeWidthSolver
    {
    public:
        explicit TreeWidthSolver(const Graph & t) : _t(t) {}

        // component of c - v containing w
        auto branch(const VertexSet & c, int v, int w) const -> VertexSet
        {
            VertexSet seen(_t.order());
            vector<int> stack{w};
            seen.insert(w);
            while (! stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : _t.neighbors(x))
                    if (y != v && c.contains(y) && ! seen.contains(y)) {
                        seen.insert(y);
                        stack.push_back(y);
                    }
            }
            return seen;
        }

        auto at_least(const VertexSet & c, int k) -> bool
        {
            if (k <= 0)
                return ! c.empty();
            if (k == 1)
                return c.size() >= 2;
            if (c.size() < min_order(k))
                return false;
            if (k == 2)
                return at_least_two(c);
            auto key = std::make_pair(c, k);
            if (auto it = _memo.find(key); it != _memo.end())
                return it->second;
            bool result = false;
            c.for_each([&](int v) {
                if (result)
                    return;
                int heavy = 0, candidates = 0;
                for (int w : _t.neighbors(v))
                    if (c.contains(w))
                        ++candidates;
                if (candidates < 3)
                    return;
                for (int w : _t.neighbors(v)) {
                    if (! c.contains(w))
                        continue;
                    if (at_least(branch(c, v, w), k - 1))
                        ++heavy;
                    else if (--candidates < 3)
                        break;
                    if (heavy >= 3)
                        break;
                }
                if (heavy >= 3)
                    result = true;
            });
            _memo.emplace(key, result);
            return result;
        }

        auto exact(const VertexSet & c) -> int
        {
            int k = 0;
            while (at_least(c, k + 1))
                ++k;
            return k;
        }

        auto decompose(const VertexSet & c) -> vector<VertexSet>
        {
            int k = exact(c);
            int v0 = c.first();
            if (k == 0)
                return {c};

            auto heavy_dirs = [&](int v, int avoid) {
                vector<int> dirs;
                for (int w : _t.neighbors(v))
                    if (w != avoid && c.contains(w) && at_least(branch(c, v, w), k))
                        dirs.push_back(w);
                return dirs;
            };

            // pick a start: a light vertex, else one with two heavy branches, else walk to a mutual pair
            vector<int> spine;
            int start = -1;
            c.for_each([&](int v) {
                if (start < 0 && heavy_dirs(v, -1).empty())
                    start = v;
            });
            if (start >= 0)
                spine = {start};
            else {
                c.for_each([&](int v) {
                    if (start < 0 && heavy_dirs(v, -1).size() >= 2)
                        start = v;
                });
                if (start >= 0) {
                    auto dirs = heavy_dirs(start, -1);
                    vector<int> left = walk(start, dirs[0], heavy_dirs);
                    vector<int> right = walk(start, dirs[1], heavy_dirs);
                    std::reverse(left.begin(), left.end());
                    spine = left;
                    spine.push_back(start);
                    spine.insert(spine.end(), right.begin(), right.end());
                }
                else {
                    int a = v0, b = heavy_dirs(v0, -1).front();
                    while (heavy_dirs(b, -1).front() != a) {
                        a = b;
                        b = heavy_dirs(b, -1).front();
                    }
                    spine = {a, b};
                }
            }

            VertexSet on_spine(_t.order());
            for (int p : spine)
                on_spine.insert(p);
            vector<VertexSet> bags;
            for (std::size_t i = 0; i < spine.size(); ++i) {
                int p = spine[i];
                for (int w : _t.neighbors(p)) {
                    if (! c.contains(w) || on_spine.contains(w))
                        continue;
                    for (auto bag : decompose(branch(c, p, w))) {
                        bag.insert(p);
                        bags.push_back(bag);
                    }
                }
                VertexSet link(_t.order());
                link.insert(p);
                if (i + 1 < spine.size())
                    link.insert(spine[i + 1]);
                bags.push_back(link);
            }
            return bags;
        }

    private:
        template <typename Dirs>
        auto walk(int from, int to, Dirs & heavy_dirs) -> vector<int>
        {
            vector<int> path;
            int prev = from, cur = to;
            while (true) {
                path.push_back(cur);
                auto next = heavy_dirs(cur, prev);
                if (next.empty())
                    break;
                prev = cur;
                cur = next.front();
            }
            return path;
        }

        static auto min_order(int k) -> int
        {
            // smallest trees of pathwidth k: 2, 7, 22, ...
            long long m = 2;
            for (int i = 1; i < k; ++i)
                m = 3 * m + 1;
            return m > (1 << 30) ? (1 << 30) : static_cast<int>(m);
        }

        auto at_least_two(const VertexSet & c) const -> bool
        {
            bool result = false;
            c.for_each([&](int v) {
                if (result)
                    return;
                int good = 0;
                for (int w : _t.neighbors(v)) {
                    if (! c.contains(w))
                        continue;
                    for (int x : _t.neighbors(w))
                        if (x != v && c.contains(x)) {
                            ++good;
                            break;
                        }
                }
                if (good >= 3)
                    result = true;
            });
            return result;
        }

        const Graph & _t;
        std::unordered_map<std::pair<VertexSet, int>, bool, KeyHash> _memo;
    };
}

auto pwind::tree_pathwidth(const Graph & t) -> WidthResult
{
    if (! is_tree(t))
        throw GraphError("tree_pathwidth needs a tree");
    if (t.order() == 0)
        return {-1, {}};
    TreeWidthSolver solver(t);
    auto all = t.all();
    WidthResult r;
    r.width = solver.exact(all);
    r.certificate.bags = solver.decompose(all);
    return r;
}

auto pwind::parse_bags(const std::string & text, int universe) -> PathDecomposition
{
    PathDecomposition d;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (! line.empty() && line[0] == '#')
            continue;
        std::istringstream ls(line);
        VertexSet bag(universe);
        int v;
        bool any = false;
        while (ls >> v) {
            if (v < 0 || v >= universe)
                throw GraphError("bag vertex out of range: " + std::to_string(v));
            bag.insert(v);
            any = true;
        }
        if (! ls.eof())
            throw GraphError("malformed bag line: " + line);
        if (any)
            d.bags.push_back(bag);
    }
    return d;
}

auto pwind::serialize_bags(const PathDecomposition & d) -> std::string
{
    std::string out;
    for (auto & bag : d.bags) {
        bool first = true;
        bag.for_each([&](int v) {
            if (! first)
                out += ' ';
            out += std::to_string(v);
            first = false;
        });
        out += '\n';
    }
    return out;
}
