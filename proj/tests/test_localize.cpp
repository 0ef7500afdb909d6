#include <gtest/gtest.h>

#include "annmul/localize.hpp"
#include "helpers.hpp"

using namespace th;

TEST(Localize, Saturate) {
    EXPECT_EQ(names(Z(12), saturate(Z(12), {4}).elements), (S{"1", "4"}));
    EXPECT_EQ(names(Z(6), saturate(Z(6), {3}).elements), (S{"1", "3"}));
    EXPECT_EQ(names(Z(6), saturate(Z(6), {}).elements), (S{"1"}));
}

TEST(Localize, Ring) {
    const auto l = localize_ring(Z(12), saturate(Z(12), {4}));
    EXPECT_FALSE(l.is_trivial);
    EXPECT_EQ(l.ring.order(), 3u);
    EXPECT_EQ(names(l.kernel), (S{"0", "3", "6", "9"}));
    const auto l6 = localize_ring(Z(6), saturate(Z(6), {3}));
    EXPECT_EQ(l6.ring.order(), 2u);
    EXPECT_EQ(names(l6.kernel), (S{"0", "2", "4"}));
    const auto id = localize_ring(Z(6), saturate(Z(6), {}));
    EXPECT_EQ(id.ring.order(), 6u);
    EXPECT_TRUE(id.kernel.is_zero());
}

TEST(Localize, Module) {
    const auto E = z2_z4_over_z8();
    EXPECT_TRUE(localize_module(E, saturate(Z(8), {2})).is_trivial);
    const auto m = localize_module(FiniteModule::self(Z(12)), saturate(Z(12), {4}));
    EXPECT_EQ(m.module.order(), 3u);
    EXPECT_EQ(m.module.ring().order(), 3u);
    const auto same = localize_module(E, saturate(Z(8), {}));
    EXPECT_EQ(same.module.order(), E.order());
}

TEST(Localize, PrimeComplement) {
    const auto P = ideal_generate(Z(12), {3});
    const auto T = prime_complement(P);
    EXPECT_EQ(T.elements.size(), 8u);
    const auto l = localize_ring(Z(12), T);
    EXPECT_EQ(l.ring.order(), 3u);
    EXPECT_THROW(prime_complement(ideal_generate(Z(12), {6})), Error);
}

TEST(Localize, AnnihilatorMultiplicationSurvives) {
    for (const auto& inst : reference_instances()) {
        const auto& E = inst.module;
        if (!is_annihilator_multiplication(E).yes()) continue;
        for (elem_t t = 0; t < E.ring().order(); ++t) {
            const auto T = saturate(E.ring(), {t});
            const auto m = localize_module(E, T);
            if (m.is_trivial) continue;
            EXPECT_TRUE(is_annihilator_multiplication(m.module).yes()) << E.descriptor() << " t=" << E.ring().name(t);
        }
    }
}
