#include <pwind/ramsey.hh>

#include <algorithm>
#include <limits>
#include <numeric>

using namespace pwind;

using std::optional;
using std::vector;

namespace
{
    // s^e, saturating at INT_MAX.
    auto saturating_pow(int s, int e) -> long long
    {
        long long r = 1;
        for (int i = 0; i < e; ++i) {
            r *= s;
            if (r > std::numeric_limits<int>::max())
                return std::numeric_limits<int>::max();
        }
        return r;
    }

    using Kind = RamseyResult::Kind;

    auto descend(const Graph & g, const vector<int> & x, int s, int t) -> RamseyResult
    {
        if (s <= 0)
            return {Kind::Stable, {}};
        if (x.empty())
            return {};
        if (t <= 0)
            return {Kind::Clique, {x.front()}};
        if (s == 1)
            return {Kind::Stable, {x.front()}};

        int v = x.front();
        vector<int> in, out;
        for (std::size_t i = 1; i < x.size(); ++i)
            (g.adjacent(v, x[i]) ? in : out).push_back(x[i]);

        auto via_in = [&]() -> RamseyResult {
            auto r = descend(g, in, s, t - 1);
            if (r.kind == Kind::Clique)
                r.vertices.push_back(v);
            return r;
        };
        auto via_out = [&]() -> RamseyResult {
            auto r = descend(g, out, s - 1, t);
            if (r.kind == Kind::Stable)
                r.vertices.push_back(v);
            return r;
        };

        bool majority_in = static_cast<long long>(in.size()) >= saturating_pow(s, t - 1);
        auto first = majority_in ? via_in() : via_out();
        if (first.kind != Kind::Fail)
            return first;
        return majority_in ? via_out() : via_in();
    }
}

auto pwind::ramsey_stable_or_clique(const Graph & g, const vector<int> & candidates, int s, int t) -> RamseyResult
{
    auto r = descend(g, candidates, s, t);
    std::sort(r.vertices.begin(), r.vertices.end());
    return r;
}

auto pwind::ramsey_stable_or_clique(const Graph & g, int s, int t) -> RamseyResult
{
    return ramsey_stable_or_clique(g, g.all().to_vector(), s, t);
}

auto pwind::ramsey_guaranteed_size(int n, int t) -> int
{
    if (t <= 0)
        return n >= 1 ? std::numeric_limits<int>::max() : 0;
    int s = 0;
    while (saturating_pow(s + 1, t) <= n)
        ++s;
    return s;
}

auto pwind::find_stable_subset(const Graph & g, const vector<int> & candidates, int size, Budget & budget)
    -> SearchResult<vector<int>>
{
    vector<int> chosen;
    bool out_of_budget = false;
    std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == size)
            return true;
        if (! budget.spend()) {
            out_of_budget = true;
            return false;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            if (candidates.size() - i < static_cast<std::size_t>(size) - chosen.size())
                break;
            int v = candidates[i];
            if (std::any_of(chosen.begin(), chosen.end(), [&](int u) { return g.adjacent(u, v); }))
                continue;
            chosen.push_back(v);
            if (extend(i + 1))
                return true;
            chosen.pop_back();
            if (out_of_budget)
                return false;
        }
        return false;
    };
    if (extend(0)) {
        std::sort(chosen.begin(), chosen.end());
        return SearchResult<vector<int>>::found(chosen);
    }
    return out_of_budget ? SearchResult<vector<int>>::exhausted() : SearchResult<vector<int>>::absent();
}

auto pwind::maximum_clique(const Graph & g, Budget & budget) -> SearchResult<vector<int>>
{
    vector<int> best, current;
    bool out_of_budget = false;
    std::function<void(VertexSet, VertexSet)> expand = [&](VertexSet p, VertexSet x) {
        if (out_of_budget)
            return;
        if (! budget.spend()) {
            out_of_budget = true;
            return;
        }
        if (p.empty()) {
            if (x.empty() && current.size() > best.size())
                best = current;
            return;
        }
        if (current.size() + p.size() <= best.size())
            return;
        int pivot = -1, pivot_hits = -1;
        (p | x).for_each([&](int u) {
            int hits = (p & g.neighbor_set(u)).size();
            if (hits > pivot_hits)
                pivot = u, pivot_hits = hits;
        });
        for (int v : (p - g.neighbor_set(pivot)).to_vector()) {
            current.push_back(v);
            expand(p & g.neighbor_set(v), x & g.neighbor_set(v));
            current.pop_back();
            p.erase(v);
            x.insert(v);
        }
    };
    expand(g.all(), g.none());
    if (out_of_budget)
        return SearchResult<vector<int>>::exhausted();
    std::sort(best.begin(), best.end());
    return SearchResult<vector<int>>::found(best);
}

auto pwind::digraph_stable_set_max(const Digraph & d, int r) -> vector<int>
{
    int n = d.order();
    VertexSet alive(n);
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) <= r)
            alive.insert(v);
    vector<VertexSet> adj(n, VertexSet(n));
    for (int v = 0; v < n; ++v)
        adj[v] = (d.out_set(v) | d.in_set(v)) & alive;

    vector<int> picked;
    while (! alive.empty()) {
        int best = -1, best_degree = std::numeric_limits<int>::max();
        alive.for_each([&](int v) {
            int deg = (adj[v] & alive).size();
            if (deg < best_degree)
                best = v, best_degree = deg;
        });
        picked.push_back(best);
        alive -= adj[best];
        alive.erase(best);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

auto pwind::digraph_stable_set(const Digraph & d, int r, int s) -> optional<vector<int>>
{
    auto all = digraph_stable_set_max(d, r);
    if (static_cast<int>(all.size()) < s)
        return std::nullopt;
    all.resize(std::max(s, 0));
    return all;
}

auto FanExtraction::select(const vector<int> & vs) const -> vector<vector<int>>
{
    vector<vector<int>> out;
    vector<int> used;
    for (int v : vs) {
        vector<int> part;
        for (int u : targets.at(v)) {
            if (static_cast<int>(part.size()) == r)
                break;
            if (std::find(used.begin(), used.end(), u) == used.end())
                part.push_back(u);
        }
        if (static_cast<int>(part.size()) < r)
            return {};
        used.insert(used.end(), part.begin(), part.end());
        out.push_back(std::move(part));
    }
    return out;
}

auto pwind::digraph_fan_extraction_max(const Digraph & d, int q, int r) -> FanExtraction
{
    int n = d.order(), want = q * r;
    FanExtraction fan;
    fan.q = q;
    fan.r = r;
    fan.targets.assign(n, {});

    VertexSet y(n);
    vector<Edge> thin;
    for (int v = 0; v < n; ++v) {
        if (d.out_degree(v) < want)
            continue;
        y.insert(v);
        auto nbrs = d.out_set(v).to_vector();
        nbrs.resize(want);
        fan.targets[v] = nbrs;
        for (int u : nbrs)
            thin.emplace_back(v, u);
    }
    Digraph thinned(n, thin);
    auto local = digraph_stable_set_max(thinned.restricted(y), want);
    auto y_list = y.to_vector();
    for (int i : local)
        fan.s.push_back(y_list[i]);
    for (int v = 0; v < n; ++v)
        if (! std::binary_search(fan.s.begin(), fan.s.end(), v))
            fan.targets[v].clear();
    return fan;
}

auto pwind::digraph_fan_extraction(const Digraph & d, int q, int r, int s) -> optional<FanExtraction>
{
    auto fan = digraph_fan_extraction_max(d, q, r);
    if (static_cast<int>(fan.s.size()) < s)
        return std::nullopt;
    for (std::size_t i = s; i < fan.s.size(); ++i)
        fan.targets[fan.s[i]].clear();
    fan.s.resize(s);
    return fan;
}

auto pwind::verify_fan_selection(const Digraph & d, const FanExtraction & fan, const vector<int> & vs,
    const vector<vector<int>> & sel) -> bool
{
    if (sel.size() != vs.size())
        return false;
    vector<int> seen;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (static_cast<int>(sel[i].size()) != fan.r)
            return false;
        for (int u : sel[i]) {
            if (! d.has_arc(vs[i], u) || std::binary_search(fan.s.begin(), fan.s.end(), u))
                return false;
            if (std::find(seen.begin(), seen.end(), u) != seen.end())
                return false;
            seen.push_back(u);
        }
    }
    return true;
}

namespace
{
    class GridSearch
    {
    public:
        GridSearch(const vector<int> & sizes, const ColourMap & phi, int q, Budget & budget,
            const std::function<bool(const Colour &)> & accept) :
            _sizes(sizes),
            _phi(phi),
            _q(q),
            _budget(budget),
            _accept(accept),
            _z(sizes.size())
        {
        }

        auto run() -> SearchResult<ProductGrid>
        {
            int n = static_cast<int>(_sizes.size());
            if (n == 0 || _q <= 0)
                return SearchResult<ProductGrid>::absent();
            for (int s : _sizes)
                if (s < _q)
                    return SearchResult<ProductGrid>::absent();
            if (step(0))
                return SearchResult<ProductGrid>::found(ProductGrid{_colour, _z});
            return _out_of_budget ? SearchResult<ProductGrid>::exhausted() : SearchResult<ProductGrid>::absent();
        }

    private:
        // Every tuple through the new element z[j].back() has the fixed colour.
        auto consistent(int j) -> bool
        {
            int n = static_cast<int>(_sizes.size());
            vector<int> digit(n, 0), tuple(n);
            while (true) {
                for (int k = 0; k < n; ++k)
                    tuple[k] = k == j ? _z[j].back() : _z[k][digit[k]];
                if (_phi(tuple) != _colour)
                    return false;
                int k = 0;
                for (; k < n; ++k) {
                    if (k == j)
                        continue;
                    if (++digit[k] < static_cast<int>(_z[k].size()))
                        break;
                    digit[k] = 0;
                }
                if (k == n)
                    return true;
            }
        }

        auto step(int k) -> bool
        {
            int n = static_cast<int>(_sizes.size());
            if (k == n * _q)
                return true;
            int j = k % n;
            int from = _z[j].empty() ? 0 : _z[j].back() + 1;
            int need_after = _q - static_cast<int>(_z[j].size()) - 1;
            for (int u = from; u + need_after < _sizes[j]; ++u) {
                if (! _budget.spend()) {
                    _out_of_budget = true;
                    return false;
                }
                _z[j].push_back(u);
                bool ok = true;
                if (k == n - 1) {
                    vector<int> seed(n);
                    for (int c = 0; c < n; ++c)
                        seed[c] = _z[c][0];
                    _colour = _phi(seed);
                    ok = ! _accept || _accept(_colour);
                }
                else if (k > n - 1)
                    ok = consistent(j);
                if (ok && step(k + 1))
                    return true;
                _z[j].pop_back();
                if (_out_of_budget)
                    return false;
            }
            return false;
        }

        const vector<int> & _sizes;
        const ColourMap & _phi;
        int _q;
        Budget & _budget;
        const std::function<bool(const Colour &)> & _accept;
        vector<vector<int>> _z;
        Colour _colour;
        bool _out_of_budget = false;
    };
}

auto pwind::product_ramsey_search(const vector<int> & sizes, const ColourMap & phi, int q, Budget & budget,
    const std::function<bool(const Colour &)> & accept) -> SearchResult<ProductGrid>
{
    return GridSearch(sizes, phi, q, budget, accept).run();
}

auto pwind::verify_product_grid(const vector<int> & sizes, const ColourMap & phi, int q, const ProductGrid & grid)
    -> bool
{
    int n = static_cast<int>(sizes.size());
    if (static_cast<int>(grid.z.size()) != n)
        return false;
    for (int j = 0; j < n; ++j) {
        auto & z = grid.z[j];
        if (static_cast<int>(z.size()) != q || ! std::is_sorted(z.begin(), z.end()))
            return false;
        if (std::adjacent_find(z.begin(), z.end()) != z.end() || z.front() < 0 || z.back() >= sizes[j])
            return false;
    }
    vector<int> digit(n, 0), tuple(n);
    while (true) {
        for (int k = 0; k < n; ++k)
            tuple[k] = grid.z[k][digit[k]];
        if (phi(tuple) != grid.colour)
            return false;
        int k = 0;
        for (; k < n; ++k) {
            if (++digit[k] < q)
                break;
            digit[k] = 0;
        }
        if (k == n)
            return true;
    }
}
