#include <gtest/gtest.h>

#include "annmul/polymod.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace th;

TEST(PolyMod, MulAction) {
    const auto Z4 = FiniteModule::self(Z(4));
    const auto r = poly_mul_action(Z4, make_poly({2}, 1), make_poly({1, 1}, 1), 2);
    EXPECT_EQ(r.coefficients, (std::vector<elem_t>{2, 2, 0}));
    const auto Z2 = FiniteModule::self(Z(2));
    const auto s = poly_mul_action(Z2, make_poly({1, 1}, 1), make_poly({1, 1}, 1), 2);
    EXPECT_EQ(s.coefficients, (std::vector<elem_t>{1, 0, 1}));
    const auto shift = poly_mul_action(Z4, make_poly({0, 1}, 1), make_poly({3}, 0), 1);
    EXPECT_EQ(shift.coefficients, (std::vector<elem_t>{0, 3}));
    EXPECT_THROW(poly_mul_action(Z4, make_poly({0, 1}, 1), make_poly({0, 1}, 1), 1), Error);
    EXPECT_THROW(make_poly({1, 1, 1}, 1), Error);
}

TEST(PolyMod, ConvolutionMatchesOracle) {
    const auto E = z2_z4_over_z8();
    const auto ps = oracle::all_polys(8, 1);
    const auto hs = oracle::all_polys(8, 1);
    for (std::size_t i = 0; i < ps.size(); i += 5)
        for (std::size_t j = 0; j < hs.size(); j += 7) {
            const auto got = poly_mul_action(E, make_poly(ps[i], 1), make_poly(hs[j], 1), 2);
            EXPECT_EQ(got.coefficients, oracle::convolve(E, ps[i], hs[j]));
        }
}

TEST(PolyMod, Armendariz) {
    EXPECT_TRUE(is_armendariz_upto(f2_squared(), 2).yes());
    EXPECT_TRUE(is_armendariz_upto(FiniteModule::self(Z(4)), 2).yes());
    for (const auto& inst : reference_instances()) {
        if (inst.module.order() <= 16) {
            EXPECT_TRUE(is_armendariz_upto(inst.module, 0).yes());
        }
    }
}

TEST(PolyMod, BoundedAnnihilators) {
    const auto E = z2_z4_over_z8();
    const auto e = make_poly({el(E, "[0 1]")}, 1);
    const auto anns = bounded_poly_annihilator(E, e, 1);
    EXPECT_EQ(anns.size(), 4u);
    for (const auto& q : anns)
        for (elem_t c : q.coefficients) EXPECT_TRUE(c == 0 || c == 4);
    const auto Z4 = FiniteModule::self(Z(4));
    EXPECT_EQ(bounded_poly_annihilator(Z4, make_poly({1}, 2), 2).size(), 1u);
    const auto two = bounded_poly_annihilator(Z4, make_poly({2}, 1), 1);
    EXPECT_EQ(two.size(), 4u);
}

TEST(PolyMod, PolynomialIdentitiesHold) {
    const auto z4 = check_lempol(FiniteModule::self(Z(4)), 1);
    EXPECT_TRUE(z4.holds());
    const auto z4d2 = check_lempol(FiniteModule::self(Z(4)), 2);
    EXPECT_TRUE(z4d2.holds());
    EXPECT_EQ(z4d2.checked_i, 64u);
    EXPECT_EQ(z4d2.checked_ii, 64u);
    EXPECT_TRUE(check_lempol(f2_squared(), 2).holds());
    EXPECT_TRUE(check_lempol(z2_z4_over_z8(), 0).holds());
}

TEST(PolyMod, SecondIdentityAgreesWithLiteralOracle) {
    EXPECT_EQ(oracle::second_identity_failures(FiniteModule::self(Z(4)), 2), 0u);
    EXPECT_EQ(oracle::second_identity_failures(f2_squared(), 2), 0u);
    EXPECT_EQ(oracle::second_identity_failures(FiniteModule::cyclic(ideal_generate(Z(4), {2})), 1), 0u);
}

TEST(PolyMod, PolynomialModuleSide) {
    EXPECT_TRUE(check_polynomial_module(FiniteModule::self(Z(4)), 2).polynomial_side);
    EXPECT_TRUE(check_polynomial_module(z2_z4_over_z8(), 1).polynomial_side);
}

TEST(PolyMod, PolySpaceCap) {
    Caps caps;
    caps.max_poly_space = 100;
    try {
        check_polynomial_module(FiniteModule::self(Z(4)), 2, caps);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    }
}

TEST(PolyMod, NonArmendarizIsExcluded) {
    const auto R = polynomial_quotient(2, std::vector<std::string>{"x", "y"}, std::vector<std::string>{"x^2", "y^2"});
    const auto E = FiniteModule::self(R);
    const auto v = is_armendariz_upto(E, 1);
    ASSERT_TRUE(v.no());
    EXPECT_EQ(v.counterexample->kind, "polynomials");
    try {
        check_lempol(E, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::HypothesisFailed);
    }
}
