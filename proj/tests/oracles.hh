#pragma once

// Independent brute-force reference implementations used by the tests.
// They deliberately avoid the library's search code and only touch Graph accessors.

#include <pwind/graph.hh>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle
{
    using pwind::Graph;
    using pwind::Edge;

    inline auto adj_matrix(const Graph & g) -> std::vector<std::vector<bool>>
    {
        std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
        for (auto [u, v] : g.edges())
            a[u][v] = a[v][u] = true;
        return a;
    }

    /// Edges of g[xs] relabelled by position in xs, by testing every pair.
    inline auto filtered_edges(const Graph & g, const std::vector<int> & xs) -> std::set<Edge>
    {
        auto a = adj_matrix(g);
        std::set<Edge> out;
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                if (a[xs[i]][xs[j]])
                    out.emplace(static_cast<int>(i), static_cast<int>(j));
        return out;
    }

    inline auto two_colourable(const Graph & g) -> bool
    {
        std::vector<int> colour(g.order(), -1);
        auto a = adj_matrix(g);
        for (int s = 0; s < g.order(); ++s) {
            if (colour[s] >= 0)
                continue;
            colour[s] = 0;
            std::vector<int> queue{s};
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int u = queue[h];
                for (int v = 0; v < g.order(); ++v)
                    if (a[u][v]) {
                        if (colour[v] < 0) {
                            colour[v] = 1 - colour[u];
                            queue.push_back(v);
                        }
                        else if (colour[v] == colour[u])
                            return false;
                    }
            }
        }
        return true;
    }

    inline auto has_triangle(const Graph & g) -> bool
    {
        auto a = adj_matrix(g);
        int n = g.order();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (a[u][v])
                    for (int w = v + 1; w < n; ++w)
                        if (a[u][w] && a[v][w])
                            return true;
        return false;
    }

    /// Wall assembled brick by brick: the hexagons of band i sit at columns c = i (mod 2).
    struct BrickWall
    {
        std::set<std::pair<int, int>> vertices;
        std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
    };

    inline auto brick_wall(int r) -> BrickWall
    {
        BrickWall w;
        for (int i = 0; i + 1 < r; ++i)
            for (int c = i % 2; c <= 2 * r - 3; c += 2) {
                std::array<std::pair<int, int>, 6> hex{{{i, c}, {i, c + 1}, {i, c + 2}, {i + 1, c + 2}, {i + 1, c + 1}, {i + 1, c}}};
                for (int k = 0; k < 6; ++k) {
                    auto a = hex[k], b = hex[(k + 1) % 6];
                    w.vertices.insert(a);
                    w.edges.insert({std::min(a, b), std::max(a, b)});
                }
            }
        return w;
    }

    /// Canonical adjacency code: minimum over vertex orders that sort by degree.
    inline auto canonical_code(const Graph & g) -> std::vector<bool>
    {
        int n = g.order();
        auto a = adj_matrix(g);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return g.degree(x) > g.degree(y); });
        std::vector<std::pair<int, int>> classes;
        for (int i = 0; i < n;) {
            int j = i;
            while (j < n && g.degree(order[j]) == g.degree(order[i]))
                ++j;
            classes.emplace_back(i, j);
            i = j;
        }
        std::vector<bool> best;
        std::function<void(std::size_t)> rec = [&](std::size_t ci) {
            if (ci == classes.size()) {
                std::vector<bool> code;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        code.push_back(a[order[i]][order[j]]);
                if (best.empty() || code < best)
                    best = code;
                return;
            }
            auto [lo, hi] = classes[ci];
            std::sort(order.begin() + lo, order.begin() + hi);
            do
                rec(ci + 1);
            while (std::next_permutation(order.begin() + lo, order.begin() + hi));
        };
        rec(0);
        // prefix the order so graphs of different sizes never collide
        std::vector<bool> size_tag(8);
        for (int b = 0; b < 8; ++b)
            size_tag[b] = (n >> b) & 1;
        size_tag.insert(size_tag.end(), best.begin(), best.end());
        return size_tag;
    }

    inline auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
    }

    /// One representative of every isomorphism class on exactly n vertices, by one-vertex extension.
    inline auto all_graphs(int n) -> std::vector<Graph>
    {
        std::vector<Graph> level{Graph(0)};
        for (int k = 1; k <= n; ++k) {
            std::set<std::vector<bool>> seen;
            std::vector<Graph> next;
            for (auto & g : level) {
                for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
                    auto edges = g.edges();
                    for (int u = 0; u < k - 1; ++u)
                        if (mask >> u & 1)
                            edges.emplace_back(u, k - 1);
                    Graph h(k, edges);
                    if (seen.insert(canonical_code(h)).second)
                        next.push_back(h);
                }
            }
            level = std::move(next);
        }
        return level;
    }

    inline auto connected_within(const std::vector<std::vector<bool>> & a, const std::vector<int> & part) -> bool
    {
        if (part.empty())
            return false;
        std::vector<bool> seen(part.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (! stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < part.size(); ++j)
                if (! seen[j] && a[part[i]][part[j]]) {
                    seen[j] = true;
                    ++count;
                    stack.push_back(j);
                }
        }
        return count == part.size();
    }

    /// Canonical codes of every induced minor of g with at most max_parts vertices,
    /// from all partitions of all vertex subsets into connected parts.
    inline auto induced_minor_codes(const Graph & g, int max_parts) -> std::set<std::vector<bool>>
    {
        int n = g.order();
        auto a = adj_matrix(g);
        std::set<std::vector<bool>> codes;
        std::vector<int> label(n, -1); // -1 deleted, otherwise part index (restricted growth)
        std::function<void(int, int)> rec = [&](int v, int parts) {
            if (v == n) {
                std::vector<std::vector<int>> part(parts);
                for (int u = 0; u < n; ++u)
                    if (label[u] >= 0)
                        part[label[u]].push_back(u);
                for (auto & p : part)
                    if (! connected_within(a, p))
                        return;
                std::vector<Edge> edges;
                for (int i = 0; i < parts; ++i)
                    for (int j = i + 1; j < parts; ++j) {
                        bool touch = false;
                        for (int x : part[i])
                            for (int y : part[j])
                                touch = touch || a[x][y];
                        if (touch)
                            edges.emplace_back(i, j);
                    }
                codes.insert(canonical_code(Graph(parts, edges)));
                return;
            }
            label[v] = -1;
            rec(v + 1, parts);
            for (int p = 0; p < parts; ++p) {
                label[v] = p;
                rec(v + 1, parts);
            }
            if (parts < max_parts) {
                label[v] = parts;
                rec(v + 1, parts + 1);
            }
            label[v] = -1;
        };
        rec(0, 0);
        return codes;
    }

    /// Every induced path of g (as vertex sequences, both directions, single vertices included).
    inline auto induced_paths(const Graph & g, const std::vector<bool> & allowed) -> std::vector<std::vector<int>>
    {
        auto a = adj_matrix(g);
        int n = g.order();
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        std::function<void()> rec = [&]() {
            out.push_back(cur);
            int last = cur.back();
            for (int v = 0; v < n; ++v) {
                if (! allowed[v] || ! a[last][v] || std::find(cur.begin(), cur.end(), v) != cur.end())
                    continue;
                bool chordless = true;
                for (std::size_t i = 0; i + 1 < cur.size(); ++i)
                    chordless = chordless && ! a[cur[i]][v];
                if (! chordless)
                    continue;
                cur.push_back(v);
                rec();
                cur.pop_back();
            }
        };
        for (int s = 0; s < n; ++s)
            if (allowed[s]) {
                cur = {s};
                rec();
            }
        return out;
    }

    /// The (X,Y)-path predicate written out directly from its two cases.
    inline auto xy_path(const Graph & g, const std::vector<bool> & x, const std::vector<bool> & y, const std::vector<int> & p) -> bool
    {
        if (p.empty())
            return false;
        if (p.size() == 1)
            return x[p[0]] && y[p[0]];
        auto a = adj_matrix(g);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] == p[j] || a[p[i]][p[j]] != (j == i + 1))
                    return false;
        if (! (x[p.front()] && ! y[p.front()] && y[p.back()] && ! x[p.back()]))
            return false;
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (x[p[i]] || y[p[i]])
                return false;
        return true;
    }

    /// All (X,Y)-paths inside `allowed`, each read from its X end.
    inline auto xy_paths(const Graph & g, const std::vector<bool> & x, const std::vector<bool> & y, const std::vector<bool> & allowed)
        -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        for (auto & p : induced_paths(g, allowed))
            if (xy_path(g, x, y, p))
                out.push_back(p);
        return out;
    }

    /// Whether k members of `paths` can be chosen so that every two satisfy `compatible`.
    inline auto choose_k(const std::vector<std::vector<int>> & paths, int k,
        const std::function<bool(const std::vector<int> &, const std::vector<int> &)> & compatible) -> bool
    {
        std::vector<int> chosen;
        std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
            if (static_cast<int>(chosen.size()) == k)
                return true;
            for (std::size_t i = from; i < paths.size(); ++i) {
                bool ok = true;
                for (int c : chosen)
                    ok = ok && compatible(paths[c], paths[i]);
                if (! ok)
                    continue;
                chosen.push_back(static_cast<int>(i));
                if (rec(i + 1))
                    return true;
                chosen.pop_back();
            }
            return false;
        };
        return rec(0);
    }

    inline auto disjoint(const std::vector<int> & p, const std::vector<int> & q) -> bool
    {
        for (int u : p)
            if (std::find(q.begin(), q.end(), u) != q.end())
                return false;
        return true;
    }

    inline auto anticomplete_lists(const Graph & g, const std::vector<int> & p, const std::vector<int> & q) -> bool
    {
        if (! disjoint(p, q))
            return false;
        for (int u : p)
            for (int v : q)
                if (g.adjacent(u, v))
                    return false;
        return true;
    }

    /// Largest stable set size by exhaustive subset scan (n <= 20).
    inline auto max_stable(const Graph & g) -> int
    {
        int n = g.order(), best = 0;
        auto a = adj_matrix(g);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (mask >> u & 1)
                    for (int v = u + 1; v < n && ok; ++v)
                        if ((mask >> v & 1) && a[u][v])
                            ok = false;
            if (ok)
                best = std::max(best, std::popcount(mask));
        }
        return best;
    }
}
