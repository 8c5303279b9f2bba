#include <pwind/constants.hh>

#include <gtest/gtest.h>

#include <cstdint>
#include <string>
#include <vector>

using namespace pwind;

namespace
{
    // Schoolbook decimal power, independent of GMP.
    auto decimal_power(unsigned base, unsigned exponent) -> std::string
    {
        std::vector<std::uint32_t> limbs{1}; // base 10^9, little endian
        for (unsigned i = 0; i < exponent; ++i) {
            std::uint64_t carry = 0;
            for (auto & l : limbs) {
                std::uint64_t v = std::uint64_t{l} * base + carry;
                l = static_cast<std::uint32_t>(v % 1'000'000'000);
                carry = v / 1'000'000'000;
            }
            if (carry)
                limbs.push_back(static_cast<std::uint32_t>(carry));
        }
        std::string out = std::to_string(limbs.back());
        for (auto i = limbs.size() - 1; i-- > 0;) {
            auto part = std::to_string(limbs[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

    auto v(const char * name) -> ConstExpr { return var(name); }
}

TEST(Constants, XiBaseCase)
{
    EXPECT_EQ(evaluate(xi(1, 2, 2, 5)), 4);
    EXPECT_EQ(evaluate(xi(1, 3, 2, 7)), 8);
    // kappa never enters the base case, so it may stay symbolic
    EXPECT_EQ(evaluate(f_seedling_to_tree(2, 1, 2, v("kappa"))), 4);
}

TEST(Constants, XiRecursionUnrolls)
{
    auto lhs = xi(2, 1, 1, 1);
    auto rhs = f_seedling_branches(1, 2, xi(1, 1, f_bigramsey(1, 1, 1), g_seedling_branches(1, 1)), 1);
    EXPECT_TRUE(lhs == rhs);
    EXPECT_FALSE(lhs == xi(2, 1, 1, 2));
}

TEST(Constants, SeedlingBranchesSmallValues)
{
    EXPECT_EQ(evaluate(f_seedling_branches(1, 1, 1, 1)), 1);
    auto e = f_seedling_branches(1, 1, 1, 2);
    ASSERT_NE(e.body(), nullptr);
    auto exponent = e.body()->children()[1];
    EXPECT_EQ(evaluate(exponent), 10 * 2401);
    auto value = evaluate(e);
    auto reference = decimal_power(2, 24010);
    EXPECT_EQ(reference.size(), 7228u);
    EXPECT_EQ(decimal_digits(value), 7228u);
    EXPECT_EQ(value.get_str(), reference);
}

TEST(Constants, SeedlingBranchesMonotone)
{
    auto at = [](int d, int l, int k) { return evaluate(f_seedling_branches(1, d, l, k)); };
    for (int d = 1; d <= 2; ++d)
        for (int l = 1; l <= 2; ++l)
            for (int k = 2; k <= 3; ++k) {
                auto here = at(d, l, k);
                if (d < 2) {
                    EXPECT_LT(here, at(d + 1, l, k));
                }
                if (l < 2) {
                    EXPECT_LT(here, at(d, l + 1, k));
                }
                if (k < 3) {
                    EXPECT_LT(here, at(d, l, k + 1));
                }
            }
}

TEST(Constants, BigRamseyShape)
{
    auto e = f_bigramsey(1, 1, 1);
    auto pr = *e.body();
    ASSERT_EQ(pr.kind(), ExprKind::Leaf);
    EXPECT_EQ(pr.name(), "f_productramsey");
    EXPECT_EQ(evaluate(pr.children()[2]), 16);

    auto f = *f_bigramsey(2, 3, 1).body();
    EXPECT_TRUE(f.children()[0] == ConstExpr(4));
    EXPECT_TRUE(f.children()[1] == ConstExpr(3));

    try {
        evaluate(e);
        FAIL() << "expected an unbound leaf";
    }
    catch (const UnboundLeaf & err) {
        EXPECT_EQ(err.leaf, "f_productramsey");
        EXPECT_NE(std::string(err.what()).find("unbound leaf"), std::string::npos);
    }
}

TEST(Constants, ToyBindings)
{
    auto toy = toy_bindings();
    EXPECT_EQ(evaluate(f_bigramsey(1, 1, 1), toy), 2 + 1 + 16);
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, 96);
    EXPECT_EQ(evaluate(g_seedling_branches(2, 1), toy), big + 6);
    // kappa = 2+2+2, lambda = 1^2, phi = 8, psi = 64+1+2, then 1 + 69
    EXPECT_EQ(evaluate(g_obtain_a_seedling(1, 1, 2), toy), 6);
    EXPECT_EQ(evaluate(f_main_tree_indm(2, 1), toy), 70);
}

TEST(Constants, ToweringValuesStopCleanly)
{
    auto toy = toy_bindings();
    EXPECT_THROW(evaluate(f_main_tree_indm(2, 3), toy), ConstError);
    EXPECT_THROW(evaluate(f_pwisg(1, 1, 1, 1, 1, 1), toy), ConstError);
}

TEST(Constants, LambdaIndependence)
{
    auto d = v("d"), r = v("r"), t = v("t"), kappa = v("kappa"), lambda = v("lambda");
    EXPECT_EQ(free_vars(g_obtain_a_seedling(d, r, t)).count("lambda"), 0u);
    EXPECT_EQ(free_vars(g_seedling_branches(t, kappa)).count("lambda"), 0u);
    EXPECT_EQ(free_vars(f_obtain_a_seedling(d, r, t, lambda)).count("lambda"), 1u);
    EXPECT_EQ(free_vars(f_seedling_branches(t, v("delta"), lambda, kappa)).count("lambda"), 1u);
}

TEST(Constants, ObtainASeedlingStructure)
{
    auto d = v("d"), r = v("r"), t = v("t");
    auto g = *g_obtain_a_seedling(d, r, t).body();
    auto expected = leaf("g_comp_model_rigid", {add({mul({r, power(d, r)}), 1}), t, t});
    EXPECT_TRUE(g == expected);
    EXPECT_EQ(leaf_names(f_obtain_a_seedling(d, r, t, v("lambda"))),
        (std::set<std::string>{"f_comp_model_rigid", "f_completeminor", "f_noblock"}));
}

TEST(Constants, TextRoundTrip)
{
    std::vector<ConstExpr> samples{
        f_pwisg(v("d"), v("l"), v("l2"), v("r"), v("s"), v("s2")),
        xi(3, v("t"), v("d"), v("kappa")),
        f_main_tree_indm(2, 3),
        big_lambda(2, 3, 2, v("kappa")),
        digraph_b_threshold(v("q"), v("r"), v("s"), Variant::Corrected),
    };
    for (auto & e : samples) {
        auto text = to_text(e);
        auto back = parse_expr(text);
        EXPECT_TRUE(back == e) << text;
        EXPECT_EQ(to_text(back), text);
    }
    EXPECT_THROW(parse_expr("(add 1"), ConstError);
    EXPECT_THROW(parse_expr("(leaf f_noblock wrongtag 1 2 3)"), ConstError);
    EXPECT_THROW(parse_expr("(frob 1 2)"), ConstError);
}

TEST(Constants, DigraphThresholdVariants)
{
    EXPECT_EQ(evaluate(digraph_a_threshold(1, 3, Variant::AsStated)), 6);
    EXPECT_EQ(evaluate(digraph_a_threshold(1, 3, Variant::Corrected)), 9);
    EXPECT_EQ(evaluate(digraph_b_threshold(2, 1, 3, Variant::AsStated)), 12);
    EXPECT_EQ(evaluate(digraph_b_threshold(2, 1, 3, Variant::Corrected)), 15);
    EXPECT_EQ(evaluate(magic_size(2, 1, 1)), 100);
}

TEST(Constants, NamedLookup)
{
    EXPECT_EQ(evaluate(named_constant("xi", {1, 2, 2, 5})), 4);
    EXPECT_THROW(named_constant("xi", {1, 2}), ConstError);
    EXPECT_THROW(named_constant("nope", {}), ConstError);
    EXPECT_THROW(named_constant("xi", {0, 1, 1, 1}), ConstError);
    for (auto & c : constant_catalog()) {
        std::vector<ConstExpr> args(c.params.size(), ConstExpr(2));
        EXPECT_NO_THROW(named_constant(c.name, args)) << c.name;
    }
}

TEST(Constants, DecimalDigits)
{
    EXPECT_EQ(decimal_digits(0), 1u);
    EXPECT_EQ(decimal_digits(9), 1u);
    EXPECT_EQ(decimal_digits(10), 2u);
    EXPECT_EQ(decimal_digits(mpz_class("999999999999")), 12u);
    EXPECT_EQ(decimal_digits(mpz_class("1000000000000")), 13u);
}
