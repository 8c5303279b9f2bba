#include <pwind/constants.hh>

#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace pwind
{
    namespace
    {
        auto make(ExprKind kind) -> std::shared_ptr<ExprNode>
        {
            auto n = std::make_shared<ExprNode>();
            n->kind = kind;
            return n;
        }

        auto all_literal(const std::vector<ConstExpr> & xs) -> bool
        {
            for (auto & x : xs)
                if (! x.is_literal())
                    return false;
            return true;
        }

        auto nary(ExprKind kind, std::vector<ConstExpr> xs) -> ConstExpr
        {
            if (xs.empty())
                throw ConstError("empty operand list");
            if (all_literal(xs)) {
                mpz_class v = xs[0].value();
                for (std::size_t i = 1; i < xs.size(); ++i) {
                    auto & w = xs[i].value();
                    if (kind == ExprKind::Add)
                        v += w;
                    else if (kind == ExprKind::Mul)
                        v *= w;
                    else if (w > v)
                        v = w;
                }
                return ConstExpr(v);
            }
            auto n = make(kind);
            n->kids = std::move(xs);
            return ConstExpr(std::move(n));
        }

        auto kind_word(ExprKind k) -> std::string
        {
            switch (k) {
            case ExprKind::Add: return "add";
            case ExprKind::Sub: return "sub";
            case ExprKind::Mul: return "mul";
            case ExprKind::Pow: return "pow";
            case ExprKind::Max: return "max";
            case ExprKind::Binom: return "binom";
            case ExprKind::Apply: return "apply";
            case ExprKind::Leaf: return "leaf";
            default: return "";
            }
        }

        auto find_leaf(const std::string & name) -> const LeafInfo *
        {
            for (auto & info : leaf_catalog())
                if (info.name == name)
                    return &info;
            return nullptr;
        }

        auto is_identifier(const std::string & s) -> bool
        {
            if (s.empty() || ! (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
                return false;
            for (char c : s)
                if (! (std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                    return false;
            return s != "_";
        }
    }

    ConstExpr::ConstExpr(std::uint64_t v) : ConstExpr(mpz_class(std::to_string(v))) {}

    ConstExpr::ConstExpr(const mpz_class & v)
    {
        auto n = make(ExprKind::Literal);
        n->value = v;
        _node = std::move(n);
    }

    auto ConstExpr::kind() const -> ExprKind { return _node->kind; }
    auto ConstExpr::value() const -> const mpz_class & { return _node->value; }
    auto ConstExpr::name() const -> const std::string & { return _node->name; }
    auto ConstExpr::tag() const -> const std::string & { return _node->tag; }
    auto ConstExpr::index() const -> int { return _node->index; }
    auto ConstExpr::children() const -> const std::vector<ConstExpr> & { return _node->kids; }
    auto ConstExpr::body() const -> const ConstExpr * { return _node->body.get(); }

    auto operator==(const ConstExpr & a, const ConstExpr & b) -> bool
    {
        if (a._node == b._node)
            return true;
        auto & x = *a._node;
        auto & y = *b._node;
        if (x.kind != y.kind || x.value != y.value || x.name != y.name || x.tag != y.tag || x.index != y.index
            || x.kids.size() != y.kids.size() || bool(x.body) != bool(y.body))
            return false;
        for (std::size_t i = 0; i < x.kids.size(); ++i)
            if (! (x.kids[i] == y.kids[i]))
                return false;
        return ! x.body || *x.body == *y.body;
    }

    auto var(const std::string & name) -> ConstExpr
    {
        if (! is_identifier(name))
            throw ConstError("bad variable name: " + name);
        auto n = make(ExprKind::Var);
        n->name = name;
        return ConstExpr(std::move(n));
    }

    auto arg(int k) -> ConstExpr
    {
        if (k < 1)
            throw ConstError("argument references start at $1");
        auto n = make(ExprKind::Arg);
        n->index = k;
        return ConstExpr(std::move(n));
    }

    auto add(std::vector<ConstExpr> terms) -> ConstExpr { return nary(ExprKind::Add, std::move(terms)); }
    auto mul(std::vector<ConstExpr> factors) -> ConstExpr { return nary(ExprKind::Mul, std::move(factors)); }
    auto maximum(std::vector<ConstExpr> terms) -> ConstExpr { return nary(ExprKind::Max, std::move(terms)); }

    auto sub(ConstExpr a, ConstExpr b) -> ConstExpr
    {
        if (a.is_literal() && b.is_literal())
            return ConstExpr(mpz_class(a.value() - b.value()));
        auto n = make(ExprKind::Sub);
        n->kids = {std::move(a), std::move(b)};
        return ConstExpr(std::move(n));
    }

    auto power(ConstExpr base, ConstExpr exponent) -> ConstExpr
    {
        auto n = make(ExprKind::Pow);
        n->kids = {std::move(base), std::move(exponent)};
        return ConstExpr(std::move(n));
    }

    auto binom(ConstExpr top, ConstExpr k) -> ConstExpr
    {
        auto n = make(ExprKind::Binom);
        n->kids = {std::move(top), std::move(k)};
        return ConstExpr(std::move(n));
    }

    auto apply(const std::string & name, std::vector<ConstExpr> args, std::optional<ConstExpr> body) -> ConstExpr
    {
        if (! is_identifier(name))
            throw ConstError("bad function name: " + name);
        auto n = make(ExprKind::Apply);
        n->name = name;
        n->kids = std::move(args);
        if (body)
            n->body = std::make_unique<ConstExpr>(*body);
        return ConstExpr(std::move(n));
    }

    auto leaf(const std::string & name, std::vector<ConstExpr> args) -> ConstExpr
    {
        auto info = find_leaf(name);
        if (! info)
            throw ConstError("unknown black box: " + name);
        if (static_cast<int>(args.size()) != info->arity)
            throw ConstError(name + " takes " + std::to_string(info->arity) + " arguments");
        auto n = make(ExprKind::Leaf);
        n->name = name;
        n->tag = info->tag;
        n->kids = std::move(args);
        return ConstExpr(std::move(n));
    }

    auto leaf_catalog() -> const std::vector<LeafInfo> &
    {
        static const std::vector<LeafInfo> catalog{
            {"f_productramsey", "productramsey", 3},
            {"f_noblock", "noblock", 3},
            {"f_completeminor", "completeminor", 2},
            {"f_comp_model_rigid", "comp_model_rigid", 4},
            {"g_comp_model_rigid", "comp_model_rigid", 3},
            {"f_motherKtt", "motherKtt", 6},
            {"g_motherKtt", "motherKtt", 6},
            {"f_RSTW", "RSTW", 1},
            {"f_RSPW", "RSPW", 1},
        };
        return catalog;
    }

    // ---- text form ----

    auto to_text(const ConstExpr & e) -> std::string
    {
        switch (e.kind()) {
        case ExprKind::Literal: return e.value().get_str();
        case ExprKind::Var: return e.name();
        case ExprKind::Arg: return "$" + std::to_string(e.index());
        default: break;
        }
        std::string out = "(" + kind_word(e.kind());
        if (e.kind() == ExprKind::Leaf)
            out += " " + e.name() + " " + e.tag();
        if (e.kind() == ExprKind::Apply) {
            out += " " + e.name() + " (";
            for (std::size_t i = 0; i < e.children().size(); ++i)
                out += (i ? " " : "") + to_text(e.children()[i]);
            out += ") ";
            out += e.body() ? to_text(*e.body()) : "_";
            return out + ")";
        }
        for (auto & c : e.children())
            out += " " + to_text(c);
        return out + ")";
    }

    namespace
    {
        class Parser
        {
        public:
            explicit Parser(const std::string & text)
            {
                std::string cur;
                auto flush = [&] {
                    if (! cur.empty())
                        _tokens.push_back(cur);
                    cur.clear();
                };
                for (char c : text) {
                    if (c == '(' || c == ')') {
                        flush();
                        _tokens.emplace_back(1, c);
                    }
                    else if (std::isspace(static_cast<unsigned char>(c)))
                        flush();
                    else
                        cur += c;
                }
                flush();
            }

            auto whole() -> ConstExpr
            {
                auto e = expr();
                if (_pos != _tokens.size())
                    fail("trailing input");
                return e;
            }

        private:
            std::vector<std::string> _tokens;
            std::size_t _pos = 0;

            [[noreturn]] auto fail(const std::string & why) -> void
            {
                throw ConstError("expression parse error at token " + std::to_string(_pos) + ": " + why);
            }

            auto next() -> const std::string &
            {
                if (_pos >= _tokens.size())
                    fail("unexpected end");
                return _tokens[_pos++];
            }

            auto expect(const std::string & t) -> void
            {
                if (next() != t)
                    fail("expected " + t);
            }

            auto peek_is(const std::string & t) const -> bool { return _pos < _tokens.size() && _tokens[_pos] == t; }

            auto until_close() -> std::vector<ConstExpr>
            {
                std::vector<ConstExpr> xs;
                while (! peek_is(")"))
                    xs.push_back(expr());
                expect(")");
                return xs;
            }

            auto atom(const std::string & t) -> ConstExpr
            {
                if (std::isdigit(static_cast<unsigned char>(t[0]))) {
                    for (char c : t)
                        if (! std::isdigit(static_cast<unsigned char>(c)))
                            fail("bad number " + t);
                    return ConstExpr(mpz_class(t));
                }
                if (t[0] == '$') {
                    try {
                        return arg(std::stoi(t.substr(1)));
                    }
                    catch (const std::logic_error &) {
                        fail("bad argument reference " + t);
                    }
                }
                if (! is_identifier(t))
                    fail("bad token " + t);
                return var(t);
            }

            auto expr() -> ConstExpr
            {
                auto t = next();
                if (t == ")")
                    fail("unexpected )");
                if (t != "(")
                    return atom(t);
                auto head = next();
                if (head == "add" || head == "mul" || head == "max") {
                    auto xs = until_close();
                    if (xs.empty())
                        fail("empty " + head);
                    // Build without folding so that the text round-trips exactly.
                    auto n = make(head == "add" ? ExprKind::Add : head == "mul" ? ExprKind::Mul : ExprKind::Max);
                    n->kids = std::move(xs);
                    return ConstExpr(std::move(n));
                }
                if (head == "sub" || head == "pow" || head == "binom") {
                    auto xs = until_close();
                    if (xs.size() != 2)
                        fail(head + " takes two operands");
                    auto n = make(head == "sub" ? ExprKind::Sub : head == "pow" ? ExprKind::Pow : ExprKind::Binom);
                    n->kids = std::move(xs);
                    return ConstExpr(std::move(n));
                }
                if (head == "leaf") {
                    auto name = next();
                    auto tag = next();
                    auto xs = until_close();
                    auto e = leaf(name, std::move(xs));
                    if (e.tag() != tag)
                        fail("tag " + tag + " does not match " + name);
                    return e;
                }
                if (head == "apply") {
                    auto name = next();
                    expect("(");
                    auto xs = until_close();
                    std::optional<ConstExpr> body;
                    if (peek_is("_"))
                        ++_pos;
                    else
                        body = expr();
                    expect(")");
                    return apply(name, std::move(xs), body);
                }
                fail("unknown operator " + head);
            }
        };
    }

    auto parse_expr(const std::string & text) -> ConstExpr { return Parser(text).whole(); }

    // ---- scans ----

    namespace
    {
        auto walk(const ConstExpr & e, const std::function<void(const ConstExpr &)> & f) -> void
        {
            f(e);
            for (auto & c : e.children())
                walk(c, f);
            if (e.body())
                walk(*e.body(), f);
        }
    }

    auto free_vars(const ConstExpr & e) -> std::set<std::string>
    {
        std::set<std::string> out;
        walk(e, [&](const ConstExpr & x) {
            if (x.kind() == ExprKind::Var)
                out.insert(x.name());
        });
        return out;
    }

    auto leaf_names(const ConstExpr & e) -> std::set<std::string>
    {
        std::set<std::string> out;
        walk(e, [&](const ConstExpr & x) {
            if (x.kind() == ExprKind::Leaf)
                out.insert(x.name());
        });
        return out;
    }

    // ---- evaluation ----

    auto toy_bindings() -> Bindings
    {
        Bindings b;
        for (auto & info : leaf_catalog()) {
            std::vector<ConstExpr> terms;
            for (int k = 1; k <= info.arity; ++k)
                terms.push_back(arg(k));
            auto n = make(ExprKind::Add);
            n->kids = std::move(terms);
            b.leaves.emplace(info.name, ConstExpr(std::move(n)));
        }
        return b;
    }

    namespace
    {
        class Evaluator
        {
        public:
            explicit Evaluator(const Bindings & b) : _b(b) {}

            auto run(const ConstExpr & e, const std::vector<mpz_class> * args) -> mpz_class
            {
                if (! args) {
                    auto it = _memo.find(e.node());
                    if (it != _memo.end())
                        return it->second;
                }
                auto v = compute(e, args);
                if (! args)
                    _memo.emplace(e.node(), v);
                return v;
            }

        private:
            const Bindings & _b;
            std::unordered_map<const ExprNode *, mpz_class> _memo;

            auto guard(const mpz_class & base, const mpz_class & exponent) -> unsigned long
            {
                if (! exponent.fits_ulong_p())
                    throw ConstError("value exceeds " + std::to_string(_b.max_bits) + " bits");
                auto e = exponent.get_ui();
                auto bits = mpz_sizeinbase(base.get_mpz_t(), 2);
                if (bits > 1 && (e > _b.max_bits || (bits - 1) * static_cast<std::uint64_t>(e) > _b.max_bits))
                    throw ConstError("value exceeds " + std::to_string(_b.max_bits) + " bits");
                return e;
            }

            auto compute(const ConstExpr & e, const std::vector<mpz_class> * args) -> mpz_class
            {
                auto & kids = e.children();
                switch (e.kind()) {
                case ExprKind::Literal: return e.value();
                case ExprKind::Var: {
                    auto it = _b.vars.find(e.name());
                    if (it == _b.vars.end())
                        throw ConstError("unbound variable: " + e.name());
                    return it->second;
                }
                case ExprKind::Arg:
                    if (! args || e.index() > static_cast<int>(args->size()))
                        throw ConstError("argument $" + std::to_string(e.index()) + " out of range");
                    return (*args)[e.index() - 1];
                case ExprKind::Add:
                case ExprKind::Mul:
                case ExprKind::Max: {
                    mpz_class v = run(kids[0], args);
                    for (std::size_t i = 1; i < kids.size(); ++i) {
                        auto w = run(kids[i], args);
                        if (e.kind() == ExprKind::Add)
                            v += w;
                        else if (e.kind() == ExprKind::Mul) {
                            auto bits = mpz_sizeinbase(v.get_mpz_t(), 2) + mpz_sizeinbase(w.get_mpz_t(), 2);
                            if (bits > _b.max_bits)
                                throw ConstError("value exceeds " + std::to_string(_b.max_bits) + " bits");
                            v *= w;
                        }
                        else if (w > v)
                            v = w;
                    }
                    return v;
                }
                case ExprKind::Sub: return run(kids[0], args) - run(kids[1], args);
                case ExprKind::Pow: {
                    auto base = run(kids[0], args);
                    auto exponent = run(kids[1], args);
                    if (exponent < 0)
                        throw ConstError("negative exponent");
                    if (exponent == 0)
                        return 1;
                    if (base == 0 || base == 1)
                        return base;
                    if (base == -1)
                        return mpz_even_p(exponent.get_mpz_t()) ? 1 : -1;
                    auto k = guard(base, exponent);
                    mpz_class v;
                    mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), k);
                    return v;
                }
                case ExprKind::Binom: {
                    auto top = run(kids[0], args);
                    auto k = run(kids[1], args);
                    if (k < 0 || top < 0 || k > top)
                        return 0;
                    auto kk = guard(top, k);
                    mpz_class v;
                    mpz_bin_ui(v.get_mpz_t(), top.get_mpz_t(), kk);
                    return v;
                }
                case ExprKind::Apply:
                    if (! e.body())
                        throw ConstError("no expansion available for " + e.name());
                    return run(*e.body(), args);
                case ExprKind::Leaf: {
                    auto it = _b.leaves.find(e.name());
                    if (it == _b.leaves.end())
                        throw UnboundLeaf(e.name());
                    std::vector<mpz_class> values;
                    for (auto & c : kids)
                        values.push_back(run(c, args));
                    Evaluator inner(_b);
                    return inner.run(it->second, &values);
                }
                }
                throw ConstError("corrupt expression");
            }
        };
    }

    auto evaluate(const ConstExpr & e, const Bindings & b) -> mpz_class { return Evaluator(b).run(e, nullptr); }

    auto decimal_digits(const mpz_class & v) -> std::uint64_t
    {
        mpz_class a = abs(v);
        if (a == 0)
            return 1;
        auto d = mpz_sizeinbase(a.get_mpz_t(), 10);
        mpz_class low;
        mpz_ui_pow_ui(low.get_mpz_t(), 10, d - 1);
        return a < low ? d - 1 : d;
    }

    // ---- the named constants ----

    auto xi(int r, ConstExpr a, ConstExpr b, ConstExpr c) -> ConstExpr
    {
        if (r < 1)
            throw ConstError("xi needs r >= 1");
        if (r == 1)
            return power(b, a);
        return f_seedling_branches(a, mul({2, a, b}), xi(r - 1, a, f_bigramsey(b, b, a), g_seedling_branches(a, c)), c);
    }

    auto xi(ConstExpr r, ConstExpr a, ConstExpr b, ConstExpr c) -> ConstExpr
    {
        if (r.is_literal()) {
            if (r.value() < 1)
                throw ConstError("xi needs r >= 1");
            if (r.value() <= 64)
                return xi(static_cast<int>(r.value().get_si()), a, b, c);
        }
        return apply("xi", {r, a, b, c}, std::nullopt);
    }

    auto f_seedling_branches(ConstExpr t, ConstExpr delta, ConstExpr lambda, ConstExpr kappa) -> ConstExpr
    {
        auto inner = mul({10, power(add({delta, mul({3, t, kappa})}), add({t, 3})), power(lambda, 3)});
        return apply("f_seedling_branches", {t, delta, lambda, kappa}, power(kappa, power(inner, t)));
    }

    auto g_seedling_branches(ConstExpr t, ConstExpr kappa) -> ConstExpr
    {
        return apply("g_seedling_branches", {t, kappa}, f_bigramsey(kappa, 1, t));
    }

    auto f_bigramsey(ConstExpr r, ConstExpr s, ConstExpr t) -> ConstExpr
    {
        auto n = mul({2, r, t});
        auto colours = power(2, mul({4, power(r, 2), power(t, 2), binom(n, 2)}));
        return apply("f_bigramsey", {r, s, t}, leaf("f_productramsey", {n, maximum({s, t}), colours}));
    }

    auto f_seedling_to_tree(ConstExpr d, ConstExpr r, ConstExpr t, ConstExpr kappa) -> ConstExpr
    {
        return apply("f_seedling_to_tree", {d, r, t, kappa}, xi(r, t, d, kappa));
    }

    auto big_delta(ConstExpr d, ConstExpr t) -> ConstExpr { return apply("Delta", {d, t}, f_bigramsey(d, d, t)); }

    auto big_lambda(ConstExpr d, ConstExpr r, ConstExpr t, ConstExpr kappa) -> ConstExpr
    {
        return apply("Lambda", {d, r, t, kappa}, xi(sub(r, 1), t, big_delta(d, t), g_seedling_branches(t, kappa)));
    }

    auto phi(ConstExpr d, ConstExpr r, ConstExpr t) -> ConstExpr
    {
        return apply("phi", {d, r, t}, leaf("f_comp_model_rigid", {add({mul({r, power(d, r)}), 1}), t, t, t}));
    }

    auto psi(ConstExpr d, ConstExpr r, ConstExpr t, ConstExpr lambda) -> ConstExpr
    {
        auto clean = maximum({power(2, mul({d, r})), t});
        return apply("psi", {d, r, t, lambda}, leaf("f_noblock", {power(phi(d, r, t), t), lambda, clean}));
    }

    auto f_obtain_a_seedling(ConstExpr d, ConstExpr r, ConstExpr t, ConstExpr lambda) -> ConstExpr
    {
        return apply("f_obtain_a_seedling", {d, r, t, lambda},
            leaf("f_completeminor", {mul({d, r}), add({psi(d, r, t, lambda), 2})}));
    }

    auto g_obtain_a_seedling(ConstExpr d, ConstExpr r, ConstExpr t) -> ConstExpr
    {
        return apply("g_obtain_a_seedling", {d, r, t}, leaf("g_comp_model_rigid", {add({mul({r, power(d, r)}), 1}), t, t}));
    }

    auto f_main_tree_indm(ConstExpr t, ConstExpr h) -> ConstExpr
    {
        auto kappa = g_obtain_a_seedling(h, h, t);
        auto lambda = f_seedling_to_tree(h, h, t, kappa);
        return apply("f_main_tree_indm", {t, h}, f_obtain_a_seedling(h, h, t, lambda));
    }

    auto f_pwisg(ConstExpr d, ConstExpr l, ConstExpr l2, ConstExpr r, ConstExpr s, ConstExpr s2) -> ConstExpr
    {
        auto side = power(2, mul({2, r}));
        auto ph = leaf("f_motherKtt", {d, l, l2, side, s, s2});
        auto gamma = leaf("g_motherKtt", {d, l, l2, side, s, s2});
        // |V(T_{2,16r})| = 2^(16r+1) - 1
        auto h = sub(power(2, add({mul({16, r}), 1})), 1);
        return apply("f_pwisg", {d, l, l2, r, s, s2}, f_main_tree_indm(maximum({r, ph, gamma}), h));
    }

    auto magic_size(ConstExpr t, ConstExpr delta, ConstExpr lambda) -> ConstExpr
    {
        return apply("magic_size", {t, delta, lambda},
            power(mul({10, power(delta, add({t, 3})), power(lambda, 3)}), t));
    }

    auto digraph_a_threshold(ConstExpr r, ConstExpr s, Variant v) -> ConstExpr
    {
        auto body = v == Variant::AsStated ? mul({2, r, s}) : mul({add({mul({2, r}), 1}), s});
        return apply(v == Variant::AsStated ? "digraph_a" : "digraph_a_corrected", {r, s}, body);
    }

    auto digraph_b_threshold(ConstExpr q, ConstExpr r, ConstExpr s, Variant v) -> ConstExpr
    {
        auto body = v == Variant::AsStated ? mul({2, q, r, s}) : mul({add({mul({2, q, r}), 1}), s});
        return apply(v == Variant::AsStated ? "digraph_b" : "digraph_b_corrected", {q, r, s}, body);
    }

    auto constant_catalog() -> const std::vector<NamedConstant> &
    {
        static const std::vector<NamedConstant> catalog{
            {"xi", {"r", "a", "b", "c"}, "xi_1(a,b,c) = b^a, xi_r via f_seedling_branches"},
            {"f_seedling_branches", {"t", "delta", "lambda", "kappa"}, "kappa^((10(delta+3t kappa)^(t+3) lambda^3)^t)"},
            {"g_seedling_branches", {"t", "kappa"}, "f_bigramsey(kappa, 1, t)"},
            {"f_bigramsey", {"r", "s", "t"}, "f_productramsey(2rt, max(s,t), 2^(4r^2t^2 C(2rt,2)))"},
            {"f_seedling_to_tree", {"d", "r", "t", "kappa"}, "xi_r(t, d, kappa)"},
            {"Delta", {"d", "t"}, "f_bigramsey(d, d, t)"},
            {"Lambda", {"d", "r", "t", "kappa"}, "xi_(r-1)(t, Delta, g_seedling_branches(t, kappa))"},
            {"phi", {"d", "r", "t"}, "f_comp_model_rigid(r d^r + 1, t, t, t)"},
            {"psi", {"d", "r", "t", "lambda"}, "f_noblock(phi^t, lambda, max(2^(dr), t))"},
            {"f_obtain_a_seedling", {"d", "r", "t", "lambda"}, "f_completeminor(dr, psi + 2)"},
            {"g_obtain_a_seedling", {"d", "r", "t"}, "g_comp_model_rigid(r d^r + 1, t, t)"},
            {"f_main_tree_indm", {"t", "h"}, "f_obtain_a_seedling(h, h, t, f_seedling_to_tree(h, h, t, kappa))"},
            {"f_pwisg", {"d", "l", "l2", "r", "s", "s2"}, "f_main_tree_indm(max(r, phi, gamma), |T_{2,16r}|)"},
            {"magic_size", {"t", "delta", "lambda"}, "(10 delta^(t+3) lambda^3)^t"},
            {"digraph_a", {"r", "s"}, "low-out-degree vertices for a stable s-set"},
            {"digraph_b", {"q", "r", "s"}, "high-out-degree vertices for the fan selector"},
        };
        return catalog;
    }

    auto named_constant(const std::string & name, const std::vector<ConstExpr> & a, Variant v) -> ConstExpr
    {
        const NamedConstant * entry = nullptr;
        for (auto & c : constant_catalog())
            if (c.name == name)
                entry = &c;
        if (! entry)
            throw ConstError("unknown constant: " + name);
        if (a.size() != entry->params.size())
            throw ConstError(name + " takes " + std::to_string(entry->params.size()) + " arguments");
        if (name == "xi")
            return xi(a[0], a[1], a[2], a[3]);
        if (name == "f_seedling_branches")
            return f_seedling_branches(a[0], a[1], a[2], a[3]);
        if (name == "g_seedling_branches")
            return g_seedling_branches(a[0], a[1]);
        if (name == "f_bigramsey")
            return f_bigramsey(a[0], a[1], a[2]);
        if (name == "f_seedling_to_tree")
            return f_seedling_to_tree(a[0], a[1], a[2], a[3]);
        if (name == "Delta")
            return big_delta(a[0], a[1]);
        if (name == "Lambda")
            return big_lambda(a[0], a[1], a[2], a[3]);
        if (name == "phi")
            return phi(a[0], a[1], a[2]);
        if (name == "psi")
            return psi(a[0], a[1], a[2], a[3]);
        if (name == "f_obtain_a_seedling")
            return f_obtain_a_seedling(a[0], a[1], a[2], a[3]);
        if (name == "g_obtain_a_seedling")
            return g_obtain_a_seedling(a[0], a[1], a[2]);
        if (name == "f_main_tree_indm")
            return f_main_tree_indm(a[0], a[1]);
        if (name == "f_pwisg")
            return f_pwisg(a[0], a[1], a[2], a[3], a[4], a[5]);
        if (name == "magic_size")
            return magic_size(a[0], a[1], a[2]);
        if (name == "digraph_a")
            return digraph_a_threshold(a[0], a[1], v);
        return digraph_b_threshold(a[0], a[1], a[2], v);
    }
}
