#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace th;

TEST(FinMod, Construction) {
    const auto E = z2_z4_over_z8();
    EXPECT_EQ(E.order(), 8u);
    EXPECT_EQ(E.descriptor(), "(dsum (cyclic (Z 8) (ideal 2)) (cyclic (Z 8) (ideal 4)))");
    EXPECT_EQ(FiniteModule::self(Z(12)).order(), 12u);
    const auto q = quotient_module(submodule_generate(FiniteModule::self(Z(4)), {2}));
    EXPECT_EQ(q.module.order(), 2u);
    EXPECT_EQ(q.module.descriptor(), "(quot (self (Z 4)) (sub 2))");
}

TEST(FinMod, DirectSumRejectsMixedRings) {
    const FiniteModule parts[2] = {FiniteModule::self(Z(4)), FiniteModule::self(Z(8))};
    try {
        FiniteModule::direct_sum(parts);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
    }
}

TEST(FinMod, FromTablesChecksAxioms) {
    FiniteModule::Tables t;
    t.ring = Z(2);
    t.order = 2;
    t.add = {0, 1, 1, 0};
    t.act = {0, 0, 0, 0};  // 1·e must equal e
    EXPECT_THROW(FiniteModule::from_tables(t), Error);
}

TEST(FinMod, SubmoduleGenerate) {
    const auto E = z2_z4_over_z8();
    const auto V = submodule_generate(E, {el(E, "[1 1]")});
    EXPECT_EQ(names(V), (S{"[0 0]", "[0 2]", "[1 1]", "[1 3]"}));
    EXPECT_TRUE(submodule_generate(E, {}).is_zero());
    const auto Z12 = FiniteModule::self(Z(12));
    EXPECT_EQ(submodule_generate(Z12, {4, 6}).elements, ideal_generate(Z(12), {2}).elements);
}

TEST(FinMod, EnumerateSubmodules) {
    EXPECT_EQ(enumerate_submodules(z2_z4_over_z8()).size(), 8u);
    EXPECT_EQ(enumerate_submodules(FiniteModule::self(Z(12))).size(), 6u);
    EXPECT_EQ(enumerate_submodules(f2_squared()).size(), 5u);
    EXPECT_EQ(enumerate_submodules(FiniteModule::free(Z(4), 2)).size(), 15u);
}

TEST(FinMod, SubmoduleCapIsReported) {
    Caps caps;
    caps.max_submodules = 3;
    try {
        enumerate_submodules(f2_squared(), caps);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    }
}

TEST(FinMod, ResidualsMatchOracle) {
    const auto E = z2_z4_over_z8();
    const auto V = submodule_generate(E, {el(E, "[1 0]")});
    EXPECT_EQ(names(residual_ideal(V, whole_submodule(E))), (S{"0", "4"}));
    EXPECT_EQ(names(annihilator_of_element(E, el(E, "[0 1]"))), (S{"0", "4"}));
    EXPECT_TRUE(annihilator_of_element(E, 0).is_whole());
    for (const auto& W : enumerate_submodules(E)) {
        const auto r = residual_ideal(W, whole_submodule(E));
        const auto ws = W.elements.elements();
        const oracle::Set expect = oracle::residual(E, oracle::Set(ws.begin(), ws.end()));
        const auto got = r.elements.elements();
        EXPECT_EQ(oracle::Set(got.begin(), got.end()), expect);
    }
}

TEST(FinMod, ResidualSubmodule) {
    const auto Z4 = FiniteModule::self(Z(4));
    EXPECT_EQ(names(annihilator_in_module(Z4, ideal_generate(Z(4), {2}))), (S{"0", "2"}));
    const auto E = z2_z4_over_z8();
    EXPECT_TRUE(annihilator_in_module(E, ideal_generate(Z(8), {4})).is_whole());
    EXPECT_TRUE(residual_submodule(zero_submodule(E), zero_ideal(Z(8))).is_whole());
}

TEST(FinMod, TorsionSet) {
    const auto t12 = torsion_set(FiniteModule::self(Z(12)));
    EXPECT_EQ(names(FiniteModule::self(Z(12)), t12.torsion), (S{"0", "2", "3", "4", "6", "8", "9", "10"}));
    EXPECT_TRUE(t12.is_non_torsion);
    const auto tf = torsion_set(f2_squared());
    EXPECT_EQ(tf.torsion.size(), 1u);
    EXPECT_TRUE(tf.is_non_torsion);
    const auto t8 = torsion_set(z2_z4_over_z8());
    EXPECT_EQ(t8.torsion.size(), 8u);
    EXPECT_TRUE(t8.is_torsion);
}

TEST(FinMod, BasicFlags) {
    const auto a = classify_module_basic(z2_z4_over_z8());
    EXPECT_EQ(a.faithful, Flag::no);
    EXPECT_EQ(a.torsion_free, Flag::no);
    EXPECT_EQ(a.simple, Flag::no);
    const auto b = classify_module_basic(f2_squared());
    EXPECT_EQ(b.faithful, Flag::yes);
    EXPECT_EQ(b.torsion_free, Flag::yes);
    EXPECT_EQ(b.simple, Flag::no);
    const auto c = classify_module_basic(tvon_witness_module(Z(4), ideal_generate(Z(4), {2})));
    EXPECT_EQ(c.faithful, Flag::yes);
    EXPECT_EQ(c.torsion_free, Flag::no);
    EXPECT_EQ(classify_module_basic(FiniteModule::self(Z(5))).simple, Flag::yes);
}

TEST(FinMod, SubmoduleClassification) {
    const auto A = truncated_f2(3);
    const auto E = FiniteModule::cyclic(ideal(A, {"X^2"}));
    const auto z = zero_submodule(E);
    EXPECT_EQ(is_classical_one_absorbing_prime_submodule(z), Flag::yes);
    EXPECT_EQ(is_classical_prime_submodule(z), Flag::no);

    const auto F = z2_z4_over_z8();
    const auto V = submodule_generate(F, {el(F, "[1 0]")});
    const auto ideals = enumerate_ideals(Z(8));
    EXPECT_EQ(is_pure_submodule(V, ideals), Flag::yes);
    EXPECT_EQ(is_essential_submodule(V), Flag::no);

    const auto Z2 = FiniteModule::cyclic(ideal_generate(Z(4), {2}));
    EXPECT_EQ(is_second_submodule(whole_submodule(Z2)), Flag::yes);
}

TEST(FinMod, SpecEnumerate) {
    const auto spec12 = spec_enumerate(FiniteModule::self(Z(12)));
    ASSERT_EQ(spec12.size(), 2u);
    std::vector<std::vector<std::string>> got{names(spec12[0]), names(spec12[1])};
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<std::vector<std::string>>{{"0", "2", "4", "6", "8", "10"}, {"0", "3", "6", "9"}}));
    // Over a field every proper subspace is prime.
    EXPECT_EQ(spec_enumerate(f2_squared()).size(), 4u);
    const auto simple = spec_enumerate(FiniteModule::self(Z(5)));
    ASSERT_EQ(simple.size(), 1u);
    EXPECT_TRUE(simple[0].is_zero());
}

TEST(FinMod, SubmoduleAsModuleAndRestriction) {
    const auto E = FiniteModule::self(Z(12));
    const auto V = submodule_generate(E, {4});
    const auto S = submodule_as_module(V);
    EXPECT_EQ(S.module.order(), 3u);
    EXPECT_EQ(S.module.descriptor(), "(sub (self (Z 12)) 4)");
    const auto I = ideal_generate(Z(12), {3});
    const auto Rq = restrict_to_quotient(S.module, quotient_ring(Z(12), I), I);
    EXPECT_EQ(Rq.ring().order(), 3u);
    EXPECT_THROW(restrict_to_quotient(E, quotient_ring(Z(12), I), I), Error);
}
