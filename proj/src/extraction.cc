#include <pwind/extraction.hh>
#include <pwind/generators.hh>
#include <pwind/ramsey.hh>

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

using namespace pwind;

using std::optional;
using std::string;
using std::vector;

namespace
{
    auto fail(string reason) -> Check { return {false, std::move(reason)}; }

    auto prefix_set(const Path & p, int last, int universe) -> VertexSet
    {
        VertexSet s(universe);
        for (int i = 0; i <= last; ++i)
            s.insert(p.vertices[i]);
        return s;
    }

    auto has_neighbour_in(const Graph & g, int v, const VertexSet & s) -> bool
    {
        return g.neighbor_set(v).intersects(s);
    }

    class BitWriter
    {
    public:
        auto push(bool bit) -> void
        {
            if (_used % 64 == 0)
                _words.push_back(0);
            if (bit)
                _words.back() |= std::uint64_t{1} << (_used % 64);
            ++_used;
        }
        auto take() -> Colour { return std::move(_words); }

    private:
        Colour _words;
        int _used = 0;
    };

    auto bit_at(const Colour & c, int i) -> bool { return (c[i / 64] >> (i % 64)) & 1; }
}

// ---------------------------------------------------------------------------------------------
// Product colouring over the families

auto pwind::bigramsey_extract(const Graph & g, const vector<VertexSet> & a_sets,
    const vector<vector<VertexSet>> & families, int r, int s, int t, Budget & budget) -> SearchResult<BigRamseyResult>
{
    using Result = SearchResult<BigRamseyResult>;
    int n = 2 * r * t;
    if (r < 1 || s < 1 || t < 1)
        throw GraphError("bigramsey needs positive r, s, t");
    if (static_cast<int>(a_sets.size()) != n || static_cast<int>(families.size()) != n)
        throw GraphError("bigramsey needs exactly 2rt sets and one family per set");

    VertexSet seen(g.order());
    auto claim = [&](const VertexSet & x) {
        if (x.empty() || x.intersects(seen))
            throw GraphError("bigramsey sets must be non-empty and pairwise disjoint");
        seen |= x;
    };
    for (auto & a : a_sets)
        claim(a);
    for (auto & fam : families)
        for (auto & b : fam)
            claim(b);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (! anticomplete(g, a_sets[i], a_sets[j]))
                throw GraphError("bigramsey: two A-sets are not anticomplete");
    for (auto & fam : families)
        for (std::size_t k = 0; k < fam.size(); ++k)
            for (std::size_t l = k + 1; l < fam.size(); ++l)
                if (! anticomplete(g, fam[k], fam[l]))
                    throw GraphError("bigramsey: two members of one family are not anticomplete");

    int q = std::max(s, t);
    vector<int> sizes;
    for (auto & fam : families)
        sizes.push_back(static_cast<int>(fam.size()));

    // touch_a[i][k] bit j: member k of family i touches A_j.
    vector<vector<vector<bool>>> touch_a(n);
    for (int i = 0; i < n; ++i)
        for (auto & b : families[i]) {
            vector<bool> row(n, false);
            for (int j = 0; j < n; ++j)
                row[j] = j != i && ! anticomplete(g, b, a_sets[j]);
            touch_a[i].push_back(std::move(row));
        }

    ColourMap phi = [&](const vector<int> & z) {
        BitWriter w;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    w.push(touch_a[i][z[i]][j]);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                w.push(! anticomplete(g, families[i][z[i]], families[j][z[j]]));
        return w.take();
    };

    auto digraph_of = [&](const Colour & c) {
        vector<Edge> arcs;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && bit_at(c, bit++))
                    arcs.emplace_back(i, j);
        return std::pair{Digraph(n, arcs), bit};
    };
    auto stable_in = [&](const Digraph & d) {
        int max_out = 0;
        for (int v = 0; v < n; ++v)
            max_out = std::max(max_out, d.out_degree(v));
        return digraph_stable_set(d, max_out, r);
    };
    auto accept = [&](const Colour & c) {
        auto [d, first_pair_bit] = digraph_of(c);
        for (int i = first_pair_bit; i < first_pair_bit + n * (n - 1) / 2; ++i)
            if (bit_at(c, i))
                return false;
        return stable_in(d).has_value();
    };

    auto grid = product_ramsey_search(sizes, phi, q, budget, accept);
    if (grid.is_exhausted())
        return Result::exhausted();
    if (grid.is_absent())
        return Result::absent();

    auto [d, unused] = digraph_of(grid.witness->colour);
    (void) unused;
    BigRamseyResult res;
    res.chosen = *stable_in(d);
    for (int k : res.chosen) {
        auto z = grid.witness->z[k];
        z.resize(s);
        res.families.push_back(z);
    }
    auto c = verify_bigramsey(g, a_sets, families, r, s, res);
    if (! c.valid)
        throw std::logic_error("bigramsey produced an unverified result: " + c.reason);
    return Result::found(std::move(res));
}

auto pwind::verify_bigramsey(const Graph & g, const vector<VertexSet> & a_sets,
    const vector<vector<VertexSet>> & families, int r, int s, const BigRamseyResult & res) -> Check
{
    if (static_cast<int>(res.chosen.size()) != r || static_cast<int>(res.families.size()) != r)
        return fail("wrong number of groups");
    vector<VertexSet> unions;
    for (int i = 0; i < r; ++i) {
        int k = res.chosen[i];
        if (k < 0 || k >= static_cast<int>(a_sets.size()))
            return fail("chosen index out of range");
        if (std::count(res.chosen.begin(), res.chosen.end(), k) != 1)
            return fail("an A-set is chosen twice");
        auto & fam = res.families[i];
        if (static_cast<int>(fam.size()) != s)
            return fail("family of the wrong size");
        VertexSet u = a_sets[k];
        for (int m : fam) {
            if (m < 0 || m >= static_cast<int>(families[k].size()))
                return fail("family index out of range");
            if (std::count(fam.begin(), fam.end(), m) != 1)
                return fail("family member chosen twice");
            u |= families[k][m];
        }
        unions.push_back(u);
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (! anticomplete(g, unions[i], unions[j]))
                return fail("two groups are not anticomplete");
    return {true, {}};
}

// ---------------------------------------------------------------------------------------------
// Magic extraction

namespace
{
    class MagicSearch
    {
    public:
        MagicSearch(const Graph & g, const vector<Path> & l0, int t, int delta, int lambda, Budget & budget) :
            _g(g),
            _l0(l0),
            _t(t),
            _delta(delta),
            _lambda(lambda),
            _budget(budget),
            _owner(g.order(), -1)
        {
            for (std::size_t i = 0; i < l0.size(); ++i)
                for (int v : l0[i].vertices)
                    _owner[v] = static_cast<int>(i);
        }

        auto run() -> SearchResult<MagicResult>
        {
            auto k1 = stable_ends();
            if (! k1)
                return _exhausted ? SearchResult<MagicResult>::exhausted() : SearchResult<MagicResult>::absent();

            if (auto res = first_branch(*k1))
                return SearchResult<MagicResult>::found(std::move(*res));
            if (auto res = second_branch(*k1))
                return SearchResult<MagicResult>::found(std::move(*res));
            return _exhausted ? SearchResult<MagicResult>::exhausted() : SearchResult<MagicResult>::absent();
        }

    private:
        auto n() const -> int { return _g.order(); }

        // Stable set among x-ends of size floor(|L0|^(1/t)), extended greedily.
        auto stable_ends() -> optional<vector<int>>
        {
            vector<int> xs;
            for (auto & p : _l0)
                xs.push_back(p.front());
            std::sort(xs.begin(), xs.end());
            int want = ramsey_guaranteed_size(static_cast<int>(xs.size()), _t);
            want = std::min(want, static_cast<int>(xs.size()));
            auto r = ramsey_stable_or_clique(_g, xs, want, _t);
            vector<int> stable;
            if (r.kind == RamseyResult::Kind::Stable)
                stable = r.vertices;
            else {
                auto hit = find_stable_subset(_g, xs, want, _budget);
                if (hit.is_exhausted())
                    _exhausted = true;
                if (! hit.is_found())
                    return std::nullopt;
                stable = *hit.witness;
            }
            auto chosen = _g.set(stable);
            for (int x : xs)
                if (! chosen.contains(x) && ! _g.neighbor_set(x).intersects(chosen))
                    chosen.insert(x);
            vector<int> paths;
            chosen.for_each([&](int x) { paths.push_back(_owner[x]); });
            std::sort(paths.begin(), paths.end());
            return paths;
        }

        // Paths of `members` (local indices) touched by `part`, excluding `self`.
        auto touched(const VertexSet & part, int self, const vector<int> & local) const -> VertexSet
        {
            VertexSet hit(static_cast<int>(local.size()));
            neighborhood(_g, part).for_each([&](int v) {
                int o = _owner[v];
                if (o >= 0 && o != self && local[o] >= 0)
                    hit.insert(local[o]);
            });
            return hit;
        }

        auto local_index(const vector<int> & members) const -> vector<int>
        {
            vector<int> local(_l0.size(), -1);
            for (std::size_t i = 0; i < members.size(); ++i)
                local[members[i]] = static_cast<int>(i);
            return local;
        }

        // Traversing L from y_L, the first vertex with a neighbour in `part`.
        auto marker(const Path & l, const VertexSet & part) const -> int
        {
            for (int i = l.length(); i >= 0; --i)
                if (has_neighbour_in(_g, l.vertices[i], part))
                    return l.vertices[i];
            return -1;
        }

        auto assemble(int branch, const vector<int> & chosen, const vector<int> & z,
            const vector<vector<int>> & families) const -> MagicResult
        {
            MagicResult res;
            res.branch = branch;
            res.chosen = chosen;
            res.z = z;
            res.families = families;
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                auto & p = _l0[chosen[i]];
                auto part = prefix_set(p, p.position_of(z[i]), n());
                vector<int> ws;
                for (int m : families[i])
                    ws.push_back(marker(_l0[m], part));
                res.w.push_back(std::move(ws));
            }
            return res;
        }

        auto first_branch(const vector<int> & k1) -> optional<MagicResult>
        {
            auto local = local_index(k1);
            vector<Edge> arcs;
            for (std::size_t a = 0; a < k1.size(); ++a) {
                auto x = _g.set({_l0[k1[a]].front()});
                touched(x, k1[a], local).for_each([&](int b) { arcs.emplace_back(static_cast<int>(a), b); });
            }
            Digraph d1(static_cast<int>(k1.size()), arcs);
            auto fan = digraph_fan_extraction(d1, _delta, _lambda, _delta);
            if (! fan)
                return std::nullopt;
            auto sel = fan->select(fan->s);
            vector<int> chosen, z;
            vector<vector<int>> families;
            for (std::size_t i = 0; i < fan->s.size(); ++i) {
                chosen.push_back(k1[fan->s[i]]);
                z.push_back(_l0[chosen.back()].front());
                vector<int> fam;
                for (int b : sel[i])
                    fam.push_back(k1[b]);
                families.push_back(std::move(fam));
            }
            return checked(assemble(1, chosen, z, families));
        }

        auto second_branch(const vector<int> & k1) -> optional<MagicResult>
        {
            int threshold = _delta * _lambda;
            auto local1 = local_index(k1);
            vector<Edge> arcs;
            for (std::size_t a = 0; a < k1.size(); ++a) {
                auto x = _g.set({_l0[k1[a]].front()});
                touched(x, k1[a], local1).for_each([&](int b) { arcs.emplace_back(static_cast<int>(a), b); });
            }
            vector<int> k2;
            for (int a : digraph_stable_set_max(Digraph(static_cast<int>(k1.size()), arcs), threshold))
                k2.push_back(k1[a]);

            // Split each path at the first prefix reaching `threshold` partners inside K2.
            auto local2 = local_index(k2);
            vector<int> kept, z, z_minus;
            for (int p : k2) {
                auto & path = _l0[p];
                VertexSet prefix(n());
                int pos = -1;
                for (int i = 0; i <= path.length(); ++i) {
                    prefix.insert(path.vertices[i]);
                    if (touched(prefix, p, local2).size() >= threshold) {
                        pos = i;
                        break;
                    }
                }
                if (pos < 0)
                    continue;
                kept.push_back(p);
                z.push_back(pos);
                z_minus.push_back(pos - 1);
            }
            k2 = kept;
            local2 = local_index(k2);
            int m2 = static_cast<int>(k2.size());

            arcs.clear();
            for (int a = 0; a < m2; ++a)
                touched(prefix_set(_l0[k2[a]], z[a], n()), k2[a], local2).for_each([&](int b) {
                    arcs.emplace_back(a, b);
                });
            Digraph d2(m2, arcs);
            auto fan = digraph_fan_extraction_max(d2, _delta, _lambda);
            const auto & k3 = fan.s;

            // D3 on K3: the part before z already touching another path of K3.
            auto local3 = vector<int>(_l0.size(), -1);
            for (std::size_t i = 0; i < k3.size(); ++i)
                local3[k2[k3[i]]] = static_cast<int>(i);
            arcs.clear();
            for (std::size_t i = 0; i < k3.size(); ++i) {
                int a = k3[i];
                if (z_minus[a] < 0)
                    continue;
                touched(prefix_set(_l0[k2[a]], z_minus[a], n()), k2[a], local3).for_each([&](int b) {
                    arcs.emplace_back(static_cast<int>(i), b);
                });
            }
            auto k4 = digraph_stable_set_max(Digraph(static_cast<int>(k3.size()), arcs), threshold);

            // Final Ramsey step on the z vertices of K4.
            vector<int> zs;
            vector<int> of_z(n(), -1);
            for (int i : k4) {
                int a = k3[i];
                int v = _l0[k2[a]].vertices[z[a]];
                zs.push_back(v);
                of_z[v] = a;
            }
            std::sort(zs.begin(), zs.end());
            if (static_cast<int>(zs.size()) < _delta)
                return std::nullopt;
            auto r = ramsey_stable_or_clique(_g, zs, _delta, _t);
            vector<int> picked;
            if (r.kind == RamseyResult::Kind::Stable)
                picked = r.vertices;
            else {
                auto hit = find_stable_subset(_g, zs, _delta, _budget);
                if (hit.is_exhausted())
                    _exhausted = true;
                if (! hit.is_found())
                    return std::nullopt;
                picked = *hit.witness;
            }

            vector<int> locals, chosen, zv;
            for (int v : picked) {
                int a = of_z[v];
                locals.push_back(a);
                chosen.push_back(k2[a]);
                zv.push_back(v);
            }
            auto sel = fan.select(locals);
            if (sel.size() != locals.size())
                return std::nullopt;
            vector<vector<int>> families;
            for (auto & part : sel) {
                vector<int> fam;
                for (int b : part)
                    fam.push_back(k2[b]);
                families.push_back(std::move(fam));
            }
            return checked(assemble(2, chosen, zv, families));
        }

        auto checked(MagicResult res) const -> optional<MagicResult>
        {
            auto c = verify_magic(_g, _l0, _delta, _lambda, res);
            if (! c.valid)
                throw std::logic_error("magic produced an unverified result: " + c.reason);
            return res;
        }

        const Graph & _g;
        const vector<Path> & _l0;
        int _t, _delta, _lambda;
        Budget & _budget;
        vector<int> _owner;
        bool _exhausted = false;
    };
}

auto pwind::magic_extract(const Graph & g, const vector<Path> & l0, int t, int delta, int lambda, Budget & budget)
    -> SearchResult<MagicResult>
{
    if (t < 1 || delta < 1 || lambda < 1)
        throw GraphError("magic needs positive t, delta, lambda");
    int n = g.order();
    VertexSet seen(n);
    vector<VertexSet> sets;
    for (auto & p : l0) {
        if (p.vertices.empty())
            throw GraphError("magic: empty path");
        auto s = p.vertex_set(n);
        if (s.size() != static_cast<int>(p.vertices.size()) || s.intersects(seen))
            throw GraphError("magic: paths are not pairwise disjoint");
        seen |= s;
        sets.push_back(s);
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (anticomplete(g, sets[i], sets[j]))
                throw GraphError("magic: two paths are anticomplete");
    return MagicSearch(g, l0, t, delta, lambda, budget).run();
}

auto pwind::verify_magic(const Graph & g, const vector<Path> & l0, int delta, int lambda, const MagicResult & res)
    -> Check
{
    int n = g.order(), m = static_cast<int>(l0.size());
    if (static_cast<int>(res.chosen.size()) != delta || static_cast<int>(res.z.size()) != delta ||
        static_cast<int>(res.families.size()) != delta || static_cast<int>(res.w.size()) != delta)
        return fail("wrong number of chosen paths");
    vector<int> used;
    auto take = [&](int i) {
        if (i < 0 || i >= m || std::find(used.begin(), used.end(), i) != used.end())
            return false;
        used.push_back(i);
        return true;
    };
    for (int i : res.chosen)
        if (! take(i))
            return fail("chosen paths repeat or are out of range");
    for (auto & fam : res.families) {
        if (static_cast<int>(fam.size()) != lambda)
            return fail("family of the wrong size");
        for (int i : fam)
            if (! take(i))
                return fail("families overlap each other or the chosen paths");
    }

    vector<VertexSet> heads;
    for (int i = 0; i < delta; ++i) {
        auto & p = l0[res.chosen[i]];
        int pos = p.position_of(res.z[i]);
        if (pos < 0)
            return fail("z is not on its path");
        heads.push_back(prefix_set(p, pos, n));
    }
    for (int i = 0; i < delta; ++i)
        for (int j = i + 1; j < delta; ++j)
            if (! anticomplete(g, heads[i], heads[j]))
                return fail("conclusion (a): two heads are not anticomplete");

    for (int i = 0; i < delta; ++i)
        for (int k = 0; k < lambda; ++k) {
            auto & l = l0[res.families[i][k]];
            int w = res.w[i][k];
            int pos = l.position_of(w);
            if (pos < 0 || w == l.front())
                return fail("conclusion (b): marker missing or equal to x_L");
            for (int j = pos; j <= l.length(); ++j) {
                bool sees = has_neighbour_in(g, l.vertices[j], heads[i]);
                if (sees != (j == pos))
                    return fail("conclusion (b): marker is not the only vertex seeing the head");
            }
        }
    return {true, {}};
}

// ---------------------------------------------------------------------------------------------
// Seedling growth

auto pwind::grow_seedling(const Seedling & sd, int t, int delta, int lambda, int kappa, Budget & budget,
    const GrowOptions & options) -> GrowResult
{
    auto valid = check_seedling(sd);
    if (! valid.valid)
        throw GraphError("invalid seedling: " + valid.reason);
    GrowResult out;
    const Graph & g = sd.host;
    int n = g.order(), m = sd.lambda();

    // The graph on L joining two members when they are not anticomplete.
    vector<VertexSet> sets;
    for (auto & p : sd.paths)
        sets.push_back(p.vertex_set(n));
    vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (! anticomplete(g, sets[i], sets[j]))
                edges.emplace_back(i, j);
    Graph gamma(m, edges);

    vector<int> all(m);
    for (int i = 0; i < m; ++i)
        all[i] = i;
    auto stable = find_stable_subset(gamma, all, kappa, budget);
    if (stable.is_exhausted()) {
        out.outcome = Outcome::Exhausted;
        return out;
    }
    if (stable.is_found()) {
        for (int i : *stable.witness)
            out.non_rigid_witness.push_back(sd.paths[i]);
        out.outcome = Outcome::Absent;
        return out;
    }
    auto clique = maximum_clique(gamma, budget);
    if (clique.is_exhausted()) {
        out.outcome = Outcome::Exhausted;
        return out;
    }
    vector<Path> l0;
    for (int i : *clique.witness)
        l0.push_back(sd.paths[i]);

    int top = std::min(delta + 3 * t * kappa, static_cast<int>(l0.size()) / (1 + lambda));
    bool exhausted = false;
    for (int target = top; target >= delta; --target) {
        auto magic = magic_extract(g, l0, t, target, lambda, budget);
        if (magic.is_exhausted())
            exhausted = true;
        if (! magic.is_found())
            continue;
        out.magic_targets = target;
        auto & res = *magic.witness;
        vector<Seedling> children;
        for (int i = 0; i < target; ++i) {
            auto & p = l0[res.chosen[i]];
            Seedling child{g, p.segment(0, p.position_of(res.z[i])), {}, g.none()};
            for (std::size_t k = 0; k < res.families[i].size(); ++k) {
                auto & q = l0[res.families[i][k]];
                child.paths.push_back(q.segment(q.position_of(res.w[i][k]), q.length()));
                child.y.insert(q.back());
            }
            if (options.child_kappa > 0) {
                auto rigid = is_rigid(child, options.child_kappa, budget);
                if (rigid.verdict == Rigidity::Exhausted)
                    exhausted = true;
                if (rigid.verdict != Rigidity::Rigid)
                    continue;
            }
            children.push_back(std::move(child));
            if (static_cast<int>(children.size()) == delta)
                break;
        }
        if (static_cast<int>(children.size()) < delta)
            continue;
        auto c = verify_children(sd, children, lambda);
        if (! c.valid)
            throw std::logic_error("grow_seedling produced unverified children: " + c.reason);
        out.children = std::move(children);
        out.outcome = Outcome::Found;
        return out;
    }
    out.outcome = exhausted ? Outcome::Exhausted : Outcome::Absent;
    return out;
}

auto pwind::verify_children(const Seedling & parent, const vector<Seedling> & children, int lambda) -> Check
{
    const Graph & g = parent.host;
    int n = g.order();
    auto a = parent.a_set();
    VertexSet used(n);
    for (std::size_t i = 0; i < children.size(); ++i) {
        auto & c = children[i];
        string tag = "child " + std::to_string(i);
        if (! (c.host == g))
            return fail(tag + " lives in another host");
        auto valid = check_seedling_avoiding(c, a);
        if (! valid.valid)
            return fail(tag + " is not a seedling in G - A: " + valid.reason);
        if (c.lambda() != lambda)
            return fail(tag + " has the wrong number of paths");
        auto ai = c.a_set();
        if (anticomplete(g, a, ai))
            return fail(tag + ": A and A_i are anticomplete");
        if (! anticomplete(g, a, c.path_vertices()))
            return fail(tag + ": A and V(L_i) are not anticomplete");
        auto parts = ai | c.path_vertices() | c.y;
        if (parts.intersects(used))
            return fail(tag + " meets an earlier child");
        used |= parts;
        for (std::size_t j = 0; j < i; ++j)
            if (! anticomplete(g, ai, children[j].a_set()))
                return fail(tag + ": A_i are not pairwise anticomplete");
    }
    return {true, {}};
}

// ---------------------------------------------------------------------------------------------
// Trees from seedlings

namespace
{
    struct BranchTree
    {
        VertexSet branch;
        vector<BranchTree> kids;
    };

    auto truncate(const BranchTree & t, int d, int depth) -> BranchTree
    {
        BranchTree out{t.branch, {}};
        if (depth > 0)
            for (int i = 0; i < d && i < static_cast<int>(t.kids.size()); ++i)
                out.kids.push_back(truncate(t.kids[i], d, depth - 1));
        return out;
    }

    auto union_of(const BranchTree & t) -> VertexSet
    {
        VertexSet u = t.branch;
        for (auto & k : t.kids)
            u |= union_of(k);
        return u;
    }

    // Breadth-first listing matches make_tree's numbering.
    auto to_model(const Graph & host, const BranchTree & t, int d, int r) -> ModelAssignment
    {
        ModelAssignment m{host, make_tree(d, r).graph, {}, true};
        std::deque<const BranchTree *> queue{&t};
        while (! queue.empty()) {
            auto node = queue.front();
            queue.pop_front();
            m.branch.push_back(node->branch);
            for (auto & k : node->kids)
                queue.push_back(&k);
        }
        return m;
    }

    class TreeBuilder
    {
    public:
        TreeBuilder(int t, int kappa, Budget & budget, const TreeOptions & options) :
            _t(t), _kappa(kappa), _budget(budget), _options(options)
        {
        }

        auto build(const Seedling & sd, int d, int r) -> SearchResult<BranchTree>
        {
            using Result = SearchResult<BranchTree>;
            const Graph & g = sd.host;
            if (r == 0)
                return Result::found(BranchTree{sd.a_set(), {}});
            if (r == 1) {
                vector<int> ends;
                for (auto & p : sd.paths)
                    ends.push_back(p.front());
                std::sort(ends.begin(), ends.end());
                if (static_cast<int>(ends.size()) < d)
                    return Result::absent();
                auto ramsey = ramsey_stable_or_clique(g, ends, d, _t);
                vector<int> picked;
                if (ramsey.kind == RamseyResult::Kind::Stable)
                    picked = ramsey.vertices;
                else {
                    auto hit = find_stable_subset(g, ends, d, _budget);
                    if (! hit.is_found())
                        return hit.is_exhausted() ? Result::exhausted() : Result::absent();
                    picked = *hit.witness;
                }
                BranchTree root{sd.a_set(), {}};
                for (int x : picked)
                    root.kids.push_back(BranchTree{g.set({x}), {}});
                return Result::found(std::move(root));
            }

            int branching = _options.branching > 0 ? _options.branching : std::max(d, _t);
            int grown = _options.children > 0 ? _options.children : 2 * d * _t;
            int lambda = _options.child_lambda > 0 ? _options.child_lambda : branching;
            GrowOptions grow_options{_options.child_kappa};
            auto grow = grow_seedling(sd, _t, grown, lambda, _kappa, _budget, grow_options);
            if (grow.outcome != Outcome::Found)
                return grow.outcome == Outcome::Exhausted ? Result::exhausted() : Result::absent();

            vector<BranchTree> models;
            bool exhausted = false;
            for (auto & child : grow.children) {
                auto sub = build(child, branching, r - 1);
                if (sub.is_exhausted())
                    exhausted = true;
                if (sub.is_found())
                    models.push_back(std::move(*sub.witness));
            }
            int needed = 2 * d * _t;
            if (static_cast<int>(models.size()) < needed)
                return exhausted ? Result::exhausted() : Result::absent();
            models.resize(needed);

            vector<VertexSet> a_sets;
            vector<vector<VertexSet>> families;
            vector<vector<BranchTree>> subtrees;
            for (auto & model : models) {
                a_sets.push_back(model.branch);
                vector<VertexSet> fam;
                vector<BranchTree> trees;
                for (auto & k : model.kids) {
                    trees.push_back(truncate(k, d, r - 2));
                    fam.push_back(union_of(trees.back()));
                }
                families.push_back(std::move(fam));
                subtrees.push_back(std::move(trees));
            }
            auto big = bigramsey_extract(g, a_sets, families, d, d, _t, _budget);
            if (! big.is_found())
                return big.is_exhausted() ? Result::exhausted() : Result::absent();

            BranchTree root{sd.a_set(), {}};
            for (int i = 0; i < d; ++i) {
                int k = big.witness->chosen[i];
                BranchTree child{a_sets[k], {}};
                for (int j : big.witness->families[i])
                    child.kids.push_back(subtrees[k][j]);
                root.kids.push_back(std::move(child));
            }
            return Result::found(std::move(root));
        }

    private:
        int _t, _kappa;
        Budget & _budget;
        const TreeOptions & _options;
    };
}

auto pwind::seedling_to_tree(const Seedling & sd, int d, int r, int t, int kappa, Budget & budget,
    const TreeOptions & options) -> SearchResult<ModelAssignment>
{
    using Result = SearchResult<ModelAssignment>;
    auto valid = check_seedling(sd);
    if (! valid.valid)
        throw GraphError("invalid seedling: " + valid.reason);
    if (d < 1 || r < 0 || t < 1)
        throw GraphError("seedling_to_tree needs d >= 1, r >= 0, t >= 1");
    auto tree = TreeBuilder(t, kappa, budget, options).build(sd, d, r);
    if (! tree.is_found())
        return tree.is_exhausted() ? Result::exhausted() : Result::absent();
    auto model = to_model(sd.host, *tree.witness, d, r);
    auto c = verify_tree_model(sd, model);
    if (! c.valid)
        throw std::logic_error("seedling_to_tree produced an unverified model: " + c.reason);
    return Result::found(std::move(model));
}

auto pwind::verify_tree_model(const Seedling & sd, const ModelAssignment & m) -> Check
{
    if (! m.induced)
        return fail("model is not flagged induced");
    auto c = verify_model(m);
    if (! c.valid)
        return fail(c.reason);
    if (m.branch.empty() || m.branch[0] != sd.a_set())
        return fail("root branch set is not A");
    auto allowed = sd.a_set() | sd.path_vertices();
    for (auto & b : m.branch)
        if (! b.subset_of(allowed))
            return fail("a branch set leaves A + V(L)");
    return {true, {}};
}

// ---------------------------------------------------------------------------------------------
// Driver

namespace
{
    struct RootedForest
    {
        vector<vector<int>> kids; // over H plus the apex, apex last
        int apex;
    };

    auto root_forest(const Graph & h) -> RootedForest
    {
        if (h.size() != h.order() - static_cast<int>(components(h).size()))
            throw GraphError("H must be a forest");
        int n = h.order();
        RootedForest f{vector<vector<int>>(n + 1), n};
        vector<int> seen(n, 0);
        for (auto & comp : components(h)) {
            std::deque<int> queue{comp.front()};
            seen[comp.front()] = 1;
            f.kids[n].push_back(comp.front());
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int u : h.neighbors(v))
                    if (! seen[u]) {
                        seen[u] = 1;
                        f.kids[v].push_back(u);
                        queue.push_back(u);
                    }
            }
        }
        return f;
    }

    auto height(const RootedForest & f, int v) -> int
    {
        int best = 0;
        for (int u : f.kids[v])
            best = std::max(best, 1 + height(f, u));
        return best;
    }
}

auto pwind::forest_shape(const Graph & h) -> std::pair<int, int>
{
    auto f = root_forest(h);
    int d = 1;
    for (auto & k : f.kids)
        d = std::max(d, static_cast<int>(k.size()));
    return {d, height(f, f.apex)};
}

auto pwind::embed_forest_in_tree(const Graph & h, int d, int r) -> optional<Embedding>
{
    auto f = root_forest(h);
    auto [need_d, need_r] = forest_shape(h);
    if (need_d > d || need_r > r)
        return std::nullopt;
    auto tree = make_tree(d, r);
    Embedding e{vector<int>(h.order(), -1)};
    std::function<void(int, int)> place = [&](int v, int at) {
        if (v != f.apex)
            e.image[v] = at;
        for (std::size_t i = 0; i < f.kids[v].size(); ++i)
            place(f.kids[v][i], tree.children[at][i]);
    };
    place(f.apex, tree.root);
    if (! verify_embedding(tree.graph, h, e))
        throw std::logic_error("forest embedding failed to verify");
    return e;
}

auto pwind::driver_kind_name(DriverCertificate::Kind k) -> std::string_view
{
    switch (k) {
    case DriverCertificate::Kind::Clique:
        return "clique";
    case DriverCertificate::Kind::KttModel:
        return "ktt-model";
    case DriverCertificate::Kind::HModel:
        return "h-model";
    case DriverCertificate::Kind::NoneFound:
        return "none-found";
    case DriverCertificate::Kind::Exhausted:
        return "exhausted";
    }
    return "unknown";
}

auto pwind::main_driver(const Graph & g, int t, const Graph & h, const DriverBudgets & budgets,
    const optional<Seedling> & seedling) -> DriverCertificate
{
    using Kind = DriverCertificate::Kind;
    root_forest(h);
    DriverCertificate cert;
    bool exhausted = false;

    Budget clique_budget(budgets.clique);
    auto clique = find_clique(g, t + 1, clique_budget);
    if (clique.is_found()) {
        if (! is_clique(g, g.set(*clique.witness)) || static_cast<int>(clique.witness->size()) != t + 1)
            throw std::logic_error("driver clique failed to verify");
        cert.kind = Kind::Clique;
        cert.clique = *clique.witness;
        cert.route = "clique-search";
        return cert;
    }
    exhausted |= clique.is_exhausted();

    Budget direct_budget(budgets.direct);
    auto direct = find_induced_minor(g, h, direct_budget);
    if (direct.is_found()) {
        if (! verify_model(*direct.witness).valid)
            throw std::logic_error("driver H-model failed to verify");
        cert.kind = Kind::HModel;
        cert.model = std::move(direct.witness);
        cert.route = "induced-minor-search";
        return cert;
    }
    exhausted |= direct.is_exhausted();

    if (seedling) {
        if (! (seedling->host == g))
            throw GraphError("driver seedling lives in another graph");
        auto [d, r] = forest_shape(h);
        Budget sb(budgets.seedling);
        auto tree = seedling_to_tree(*seedling, d, r, t, budgets.seedling_kappa, sb);
        if (tree.is_found()) {
            auto e = *embed_forest_in_tree(h, d, r);
            ModelAssignment m{g, h, {}, true};
            for (int v = 0; v < h.order(); ++v)
                m.branch.push_back(tree.witness->branch[e.image[v]]);
            if (! verify_model(m).valid)
                throw std::logic_error("driver seedling H-model failed to verify");
            cert.kind = Kind::HModel;
            cert.model = std::move(m);
            cert.route = "seedling-to-tree";
            return cert;
        }
        exhausted |= tree.is_exhausted();
    }

    Budget ktt_budget(budgets.ktt);
    auto ktt = find_induced_minor(g, make_complete_bipartite(t, t), ktt_budget);
    if (ktt.is_found()) {
        if (! verify_model(*ktt.witness).valid)
            throw std::logic_error("driver K_{t,t}-model failed to verify");
        cert.kind = Kind::KttModel;
        cert.model = std::move(ktt.witness);
        cert.route = "induced-minor-search";
        return cert;
    }
    exhausted |= ktt.is_exhausted();
    cert.kind = exhausted ? Kind::Exhausted : Kind::NoneFound;
    return cert;
}
