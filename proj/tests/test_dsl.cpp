#include <gtest/gtest.h>

#include "annmul/dsl.hpp"
#include "helpers.hpp"

using namespace th;

namespace {

ErrorCode code_of(const std::string& text) {
    try {
        Interpreter in;
        in.run(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for " << text;
    return ErrorCode::InvalidStructure;
}

} // namespace

TEST(Dsl, RingForms) {
    EXPECT_EQ(ring_from_descriptor("(Z 12)").order(), 12u);
    EXPECT_EQ(ring_from_descriptor("(prod (Z 2) (Z 3))").order(), 6u);
    EXPECT_EQ(ring_from_descriptor("(polyquot (Z 2) (x y) (x^2 x*y y^2))").order(), 8u);
    EXPECT_EQ(ring_from_descriptor("(quot (Z 12) (ideal 4))").order(), 4u);
}

TEST(Dsl, BraceAndSuperscriptSyntax) {
    const auto R = ring_from_descriptor("(polyquot (Z 2) [x,y] {x², xy, y²})");
    EXPECT_EQ(R.order(), 8u);
    EXPECT_EQ(R.descriptor(), local_ring_xy().descriptor());
}

TEST(Dsl, ModuleForms) {
    EXPECT_EQ(module_from_descriptor("(self (Z 6))").order(), 6u);
    EXPECT_EQ(module_from_descriptor("(cyclic (Z 8) (ideal 2))").order(), 2u);
    EXPECT_EQ(module_from_descriptor("(free (Z 3) 2)").order(), 9u);
    EXPECT_EQ(module_from_descriptor("(quot (free (Z 4) 2) (sub [2 0]))").order(), 8u);
    EXPECT_EQ(module_from_descriptor("(sub (free (Z 4) 2) [2 0] [0 2])").order(), 4u);
    EXPECT_EQ(module_from_descriptor("(over (quot (Z 12) (ideal 6)) (cyclic (Z 12) (ideal 6)))").ring().order(), 6u);
    EXPECT_EQ(module_from_descriptor("(localize (self (Z 12)) (mult 4))").order(), 3u);
    EXPECT_EQ(z2_z4_over_z8().descriptor(),
              module_from_descriptor("(dsum (cyclic (Z 8) (ideal 2)) (cyclic (Z 8) (ideal 4)))").descriptor());
}

TEST(Dsl, CorpusDescriptorsRoundTrip) {
    for (const auto& inst : generate_instances(InstanceBudget{})) {
        const auto E = module_from_descriptor(inst.descriptor);
        EXPECT_EQ(E.descriptor(), inst.descriptor);
        EXPECT_EQ(E.order(), inst.module.order());
        EXPECT_EQ(E.ring().order(), inst.module.ring().order());
    }
}

TEST(Dsl, GoldenClassify) {
    Interpreter in;
    const auto rs = in.run(R"(
        (ring R (Z 8))
        (module E (dsum (cyclic R (ideal 2)) (cyclic R (ideal 4))))
        (classify E))");
    ASSERT_EQ(rs.size(), 3u);
    EXPECT_EQ(std::get<BindingResult>(rs[0]).kind, "ring");
    const auto& c = std::get<ClassifyResult>(rs[2]);
    EXPECT_EQ(c.module.annihilator_multiplication.holds, Flag::yes);
    ASSERT_TRUE(c.module.multiplication.has_value());
    EXPECT_EQ(c.module.multiplication->holds, Flag::no);
    EXPECT_EQ(c.module.submodule_count, 8u);
}

TEST(Dsl, MultCommand) {
    Interpreter in;
    const auto r = std::get<LocalizationSummary>(in.execute(sexpr::parse_one("(mult (Z 12) {4})")));
    EXPECT_EQ(r.order, 3u);
    EXPECT_EQ(r.kernel.size(), 4u);
    EXPECT_FALSE(r.trivial);
}

TEST(Dsl, ClassifyWithLocalization) {
    Interpreter in;
    const auto r = std::get<ClassifyResult>(in.execute(sexpr::parse_one("(classify (self (Z 12)) (mult {4}))")));
    ASSERT_TRUE(r.localization.has_value());
    ASSERT_TRUE(r.localized.has_value());
    EXPECT_EQ(r.localized->order, 3u);
}

TEST(Dsl, CheckCommand) {
    Interpreter in;
    const auto rep = std::get<PropertyReport>(in.execute(sexpr::parse_one("(check PASS (free (Z 12) 2))")));
    EXPECT_EQ(rep.hypothesis_met, 1u);
    EXPECT_TRUE(rep.failures.empty());
}

TEST(Dsl, BareFormsEvaluate) {
    Interpreter in;
    const auto r = std::get<BindingResult>(in.execute(sexpr::parse_one("(Z 5)")));
    EXPECT_TRUE(r.name.empty());
    EXPECT_EQ(r.kind, "ring");
}

TEST(Dsl, Errors) {
    EXPECT_EQ(code_of("(ring R (Z 0))"), ErrorCode::InvalidModulus);
    EXPECT_EQ(code_of("(classify E)"), ErrorCode::ResolutionError);
    EXPECT_EQ(code_of("(frobnicate 1)"), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of("(ring R (Z 4 5))"), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of("(check NOPE (self (Z 2)))"), ErrorCode::UnknownProperty);
    EXPECT_EQ(code_of("(classify (cyclic (Z 4) (ideal 7x)))"), ErrorCode::ResolutionError);
    EXPECT_EQ(code_of("(ring R (Z 4)) (module R (self R)) (classify (self R))"), ErrorCode::ResolutionError);
}

TEST(Dsl, ReplayFailureDescriptor) {
    const auto A = truncated_f2(3);
    const auto d = FiniteModule::cyclic(ideal(A, {"X^2"})).descriptor();
    const auto rep = replay("P1ABS", d);
    EXPECT_EQ(rep.instances_tried, 1u);
    EXPECT_TRUE(rep.failures.empty());
}
