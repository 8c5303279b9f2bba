#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwind
{
    class ConstError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class UnboundLeaf : public ConstError
    {
    public:
        explicit UnboundLeaf(const std::string & name) : ConstError("unbound leaf: " + name), leaf(name) {}
        std::string leaf;
    };

    enum class ExprKind
    {
        Literal,
        Var,   // symbolic parameter, bound by name at evaluation
        Arg,   // k-th argument of the leaf whose binding is being evaluated (1-based)
        Add,
        Sub,
        Mul,
        Pow,
        Max,
        Binom,
        Apply, // named function with its arguments and expansion
        Leaf   // black box from a cited source; needs a binding
    };

    struct ExprNode;

    /// Immutable expression tree. Subtrees are shared, never copied.
    class ConstExpr
    {
    public:
        ConstExpr(std::uint64_t v);
        ConstExpr(const mpz_class & v);
        explicit ConstExpr(std::shared_ptr<const ExprNode> node) : _node(std::move(node)) {}

        auto kind() const -> ExprKind;
        auto value() const -> const mpz_class &;   // Literal
        auto name() const -> const std::string &;  // Var, Apply, Leaf
        auto tag() const -> const std::string &;   // Leaf: source of the black box
        auto index() const -> int;                 // Arg
        auto children() const -> const std::vector<ConstExpr> &;
        auto body() const -> const ConstExpr *;    // Apply; null when not expanded
        auto is_literal() const -> bool { return kind() == ExprKind::Literal; }

        auto node() const -> const ExprNode * { return _node.get(); }

        friend auto operator==(const ConstExpr & a, const ConstExpr & b) -> bool;

    private:
        std::shared_ptr<const ExprNode> _node;
    };

    struct ExprNode
    {
        ExprKind kind;
        mpz_class value;
        std::string name;
        std::string tag;
        int index = 0;
        std::vector<ConstExpr> kids;
        std::unique_ptr<ConstExpr> body;
    };

    auto var(const std::string & name) -> ConstExpr;
    auto arg(int k) -> ConstExpr;
    auto add(std::vector<ConstExpr> terms) -> ConstExpr;
    auto sub(ConstExpr a, ConstExpr b) -> ConstExpr;
    auto mul(std::vector<ConstExpr> factors) -> ConstExpr;
    auto power(ConstExpr base, ConstExpr exponent) -> ConstExpr;
    auto maximum(std::vector<ConstExpr> terms) -> ConstExpr;
    auto binom(ConstExpr n, ConstExpr k) -> ConstExpr;
    auto apply(const std::string & name, std::vector<ConstExpr> args, std::optional<ConstExpr> body) -> ConstExpr;
    /// Tag and arity are taken from leaf_catalog(); unknown names or wrong arity throw ConstError.
    auto leaf(const std::string & name, std::vector<ConstExpr> args) -> ConstExpr;

    struct LeafInfo
    {
        std::string name;
        std::string tag;
        int arity;
    };

    auto leaf_catalog() -> const std::vector<LeafInfo> &;

    /// S-expression text: decimals, bare identifiers for variables, `$k` for leaf arguments,
    /// `(add ..)`, `(sub a b)`, `(mul ..)`, `(pow a b)`, `(max ..)`, `(binom n k)`,
    /// `(leaf NAME TAG args..)` and `(apply NAME (args..) BODY)` with `_` for no body.
    auto to_text(const ConstExpr & e) -> std::string;
    auto parse_expr(const std::string & text) -> ConstExpr;

    auto free_vars(const ConstExpr & e) -> std::set<std::string>;
    auto leaf_names(const ConstExpr & e) -> std::set<std::string>;

    struct Bindings
    {
        std::map<std::string, mpz_class> vars;
        std::map<std::string, ConstExpr> leaves; // bodies written in terms of $1..$k
        std::uint64_t max_bits = std::uint64_t{1} << 26;
    };

    /// Every catalogued leaf bound to the sum of its arguments.
    auto toy_bindings() -> Bindings;

    /// Exact evaluation. Throws UnboundLeaf for a leaf without binding and ConstError when a
    /// power would exceed `max_bits` or a variable is missing.
    auto evaluate(const ConstExpr & e, const Bindings & b = {}) -> mpz_class;

    /// Exact decimal length of |v| (1 for zero).
    auto decimal_digits(const mpz_class & v) -> std::uint64_t;

    enum class Variant
    {
        AsStated,
        Corrected
    };

    auto xi(int r, ConstExpr a, ConstExpr b, ConstExpr c) -> ConstExpr;
    /// Unexpanded when r is not a small literal.
    auto xi(ConstExpr r, ConstExpr a, ConstExpr b, ConstExpr c) -> ConstExpr;

    auto f_seedling_branches(ConstExpr t, ConstExpr delta, ConstExpr lambda, ConstExpr kappa) -> ConstExpr;
    auto g_seedling_branches(ConstExpr t, ConstExpr kappa) -> ConstExpr;
    auto f_bigramsey(ConstExpr r, ConstExpr s, ConstExpr t) -> ConstExpr;
    auto f_seedling_to_tree(ConstExpr d, ConstExpr r, ConstExpr t, ConstExpr kappa) -> ConstExpr;
    auto big_delta(ConstExpr d, ConstExpr t) -> ConstExpr;
    auto big_lambda(ConstExpr d, ConstExpr r, ConstExpr t, ConstExpr kappa) -> ConstExpr;
    auto phi(ConstExpr d, ConstExpr r, ConstExpr t) -> ConstExpr;
    auto psi(ConstExpr d, ConstExpr r, ConstExpr t, ConstExpr lambda) -> ConstExpr;
    auto f_obtain_a_seedling(ConstExpr d, ConstExpr r, ConstExpr t, ConstExpr lambda) -> ConstExpr;
    auto g_obtain_a_seedling(ConstExpr d, ConstExpr r, ConstExpr t) -> ConstExpr;
    /// h is the number of vertices of the forest H.
    auto f_main_tree_indm(ConstExpr t, ConstExpr h) -> ConstExpr;
    auto f_pwisg(ConstExpr d, ConstExpr l, ConstExpr l2, ConstExpr r, ConstExpr s, ConstExpr s2) -> ConstExpr;
    /// Number of paths required by the magic lemma: (10 delta^(t+3) lambda^3)^t.
    auto magic_size(ConstExpr t, ConstExpr delta, ConstExpr lambda) -> ConstExpr;
    /// Low-out-degree vertex count for a stable s-set: 2rs as stated, (2r+1)s corrected.
    auto digraph_a_threshold(ConstExpr r, ConstExpr s, Variant v) -> ConstExpr;
    /// High-out-degree vertex count for the fan selector: 2qrs as stated, (2qr+1)s corrected.
    auto digraph_b_threshold(ConstExpr q, ConstExpr r, ConstExpr s, Variant v) -> ConstExpr;

    struct NamedConstant
    {
        std::string name;
        std::vector<std::string> params;
        std::string summary;
    };

    auto constant_catalog() -> const std::vector<NamedConstant> &;

    /// Builds a catalogued constant from its arguments (symbolic or literal). Throws ConstError
    /// on an unknown name or wrong arity.
    auto named_constant(const std::string & name, const std::vector<ConstExpr> & args,
        Variant v = Variant::AsStated) -> ConstExpr;
}
