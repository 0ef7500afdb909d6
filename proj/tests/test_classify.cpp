#include <gtest/gtest.h>

#include "annmul/classify.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace th;

namespace {

std::vector<std::pair<S, S>> witness_rows(const Verdict& v) {
    std::vector<std::pair<S, S>> rows;
    for (const auto& [ann, I] : witness_by_annihilator(v)) rows.emplace_back(names(ann), names(I));
    std::sort(rows.begin(), rows.end());
    return rows;
}

} // namespace

TEST(Classify, GoldenZ2Z4OverZ8) {
    const auto E = z2_z4_over_z8();
    const auto v = is_annihilator_multiplication(E);
    ASSERT_TRUE(v.yes());
    std::vector<std::pair<S, S>> expect = {
        {{"0", "2", "4", "6"}, {"0", "2", "4", "6"}},
        {{"0", "4"}, {"0", "1", "2", "3", "4", "5", "6", "7"}},
        {{"0", "1", "2", "3", "4", "5", "6", "7"}, {"0"}},
    };
    auto rows = witness_rows(v);
    std::sort(rows.begin(), rows.end());
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(rows, expect);
    EXPECT_TRUE(is_multiplication(E).no());
    EXPECT_TRUE(is_vn_regular_module(E).no());
    EXPECT_TRUE(is_baer_module(E).no());
}

TEST(Classify, WitnessFactoryFails) {
    const auto A = local_ring_xy();
    const auto E = tvon_witness_module(A, ideal(A, {"x"}));
    EXPECT_EQ(E.order(), 32u);
    const auto v = is_annihilator_multiplication(E);
    ASSERT_TRUE(v.no());
    ASSERT_TRUE(v.counterexample.has_value());
    ASSERT_EQ(v.counterexample->elements.size(), 1u);
    EXPECT_EQ(E.name(v.counterexample->elements[0]), "[0 1]");
    std::vector<S> ctx;
    for (const auto& I : v.counterexample->context) ctx.push_back(names(I));
    std::sort(ctx.begin(), ctx.end());
    std::vector<S> expect{{"0"}, {"0", "1", "x", "1+x", "y", "1+y", "x+y", "1+x+y"}, {"0", "x", "y", "x+y"}};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(ctx, expect);
    EXPECT_EQ(names(annihilator_of_element(E, v.counterexample->elements[0])), (S{"0", "x"}));
}

TEST(Classify, SimpleModulesHold) {
    EXPECT_TRUE(is_annihilator_multiplication(FiniteModule::self(Z(5))).yes());
    EXPECT_TRUE(is_annihilator_multiplication(FiniteModule::cyclic(ideal_generate(Z(4), {2}))).yes());
}

TEST(Classify, ZeroModuleIsDegenerate) {
    const auto Z0 = FiniteModule::cyclic(whole_ideal(Z(4)));
    EXPECT_EQ(Z0.order(), 1u);
    EXPECT_EQ(is_annihilator_multiplication(Z0).holds, Flag::degenerate);
}

TEST(Classify, OracleAgreementOnCorpus) {
    const auto corpus = generate_instances(InstanceBudget{});
    ASSERT_GE(corpus.size(), 200u);
    for (const auto& inst : corpus) {
        if (inst.module.order() > 16 || inst.module.ring().order() > 16 || inst.module.order() < 2) continue;
        EXPECT_EQ(is_annihilator_multiplication(inst.module).yes(), oracle::is_annihilator_multiplication(inst.module))
            << inst.descriptor;
    }
}

TEST(Classify, Multiplication) {
    const auto E = z2_z4_over_z8();
    const auto v = is_multiplication(E);
    ASSERT_TRUE(v.no());
    EXPECT_TRUE(is_multiplication(FiniteModule::self(Z(12))).yes());
    EXPECT_TRUE(is_multiplication(f2_squared()).no());
}

TEST(Classify, Comultiplication) {
    EXPECT_TRUE(is_comultiplication(FiniteModule::self(Z(4))).yes());
    EXPECT_TRUE(is_comultiplication(f2_squared()).no());
    EXPECT_TRUE(is_comultiplication(z2_z4_over_z8()).no());
}

TEST(Classify, RegularityElements) {
    const auto r = module_regularity_elements(z2_z4_over_z8());
    EXPECT_EQ(names(Z(8), r.weak_idempotents), (S{"0", "1", "4", "5"}));
    const auto r6 = module_regularity_elements(FiniteModule::self(Z(6)));
    EXPECT_EQ(names(Z(6), r6.weak_idempotents), (S{"0", "1", "3", "4"}));
}

TEST(Classify, VnRegularAndBaer) {
    EXPECT_TRUE(is_vn_regular_module(FiniteModule::cyclic(ideal_generate(Z(4), {2}))).yes());
    EXPECT_TRUE(is_vn_regular_module(f2_squared()).no());
    EXPECT_TRUE(is_baer_module(f2_squared()).yes());
    EXPECT_TRUE(is_baer_module(FiniteModule::self(Z(6))).yes());
}

TEST(Classify, PrimeModule) {
    EXPECT_TRUE(is_prime_module(f2_squared()).yes());
    EXPECT_TRUE(is_prime_module(z2_z4_over_z8()).no());
    EXPECT_TRUE(is_prime_module(FiniteModule::cyclic(ideal_generate(Z(4), {2}))).yes());
}

TEST(Classify, InjectiveBaerCriterion) {
    EXPECT_TRUE(is_injective_baer_criterion(FiniteModule::self(Z(4))).yes());
    EXPECT_TRUE(is_injective_baer_criterion(FiniteModule::self(Z(2))).yes());
    const auto Z2 = FiniteModule::cyclic(ideal_generate(Z(4), {2}));
    const auto v = is_injective_baer_criterion(Z2);
    ASSERT_TRUE(v.no());
    ASSERT_TRUE(v.counterexample.has_value());
    EXPECT_EQ(v.counterexample->kind, "hom");
    ASSERT_EQ(v.counterexample->context.size(), 1u);
    EXPECT_EQ(names(v.counterexample->context[0]), (S{"0", "2"}));
}

TEST(Classify, AssociatedPrimes) {
    const auto a = ass_ring(Z(12));
    std::vector<S> got;
    for (const auto& P : a.primes) got.push_back(names(P));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<S>{{"0", "2", "4", "6", "8", "10"}, {"0", "3", "6", "9"}}));
    const auto e = ass(z2_z4_over_z8());
    ASSERT_EQ(e.primes.size(), 1u);
    EXPECT_EQ(names(e.primes[0]), (S{"0", "2", "4", "6"}));
    const auto f = ass(f2_squared());
    ASSERT_EQ(f.primes.size(), 1u);
    EXPECT_TRUE(f.primes[0].is_zero());
}

TEST(Classify, TvonWitnessModules) {
    const auto m = tvon_witness_module(Z(4), ideal_generate(Z(4), {2}));
    EXPECT_TRUE(is_annihilator_multiplication(m).yes());
    const FiniteRing f[2] = {Z(2), Z(3)};
    const auto R = FiniteRing::product(f);
    for (const auto& I : enumerate_ideals(R)) {
        const auto W = tvon_witness_module(R, I);
        EXPECT_TRUE(is_annihilator_multiplication(W).yes()) << W.descriptor();
        EXPECT_EQ(classify_module_basic(W).faithful, Flag::yes);
    }
}
