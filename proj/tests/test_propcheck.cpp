#include <gtest/gtest.h>

#include "annmul/propcheck.hpp"
#include "helpers.hpp"

using namespace th;

namespace {

const SuiteReport& default_suite() {
    static const SuiteReport rep = run_suite(InstanceBudget{});
    return rep;
}

const PropertyReport& prop(const std::string& id) {
    for (const auto& p : default_suite().properties)
        if (p.property_id == id) return p;
    throw std::runtime_error("missing " + id);
}

bool lists(const std::vector<Failure>& fs, const std::string& descriptor) {
    return std::any_of(fs.begin(), fs.end(), [&](const Failure& f) { return f.descriptor == descriptor; });
}

} // namespace

TEST(Corpus, DefaultBudget) {
    const auto c = generate_instances(InstanceBudget{});
    EXPECT_GE(c.size(), 200u);
    const auto refs = reference_instances();
    for (std::size_t i = 0; i < refs.size(); ++i) EXPECT_EQ(c[i].descriptor, refs[i].descriptor);
}

TEST(Corpus, ZeroInstancesGivesReferencesOnly) {
    InstanceBudget b;
    b.max_instances = 0;
    EXPECT_EQ(generate_instances(b).size(), reference_instances().size());
}

TEST(Corpus, Deterministic) {
    InstanceBudget b;
    b.seed = 7;
    b.max_instances = 50;
    const auto a = generate_instances(b), c = generate_instances(b);
    ASSERT_EQ(a.size(), c.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].descriptor, c[i].descriptor);
    b.seed = 8;
    const auto d = generate_instances(b);
    bool differs = false;
    for (std::size_t i = reference_instances().size(); i < std::min(a.size(), d.size()); ++i)
        differs = differs || a[i].descriptor != d[i].descriptor;
    EXPECT_TRUE(differs);
}

TEST(Corpus, BudgetValidation) {
    InstanceBudget b;
    b.max_ring_order = 1;
    EXPECT_THROW(generate_instances(b), Error);
}

TEST(Registry, FifteenProperties) {
    const auto& r = property_registry();
    ASSERT_EQ(r.size(), 15u);
    const std::vector<std::string> ids{"P1",   "P2",    "PDIR",   "PLOC", "PHOM", "PSUB",  "PDSUM", "P1ABS",
                                       "PCLASS", "PPOL", "PTOR", "PMULT", "PINJ", "PVON", "PASS"};
    for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(r[i].id, ids[i]);
    for (const auto& id : {"P1", "PDIR", "PSUB", "PASS"}) EXPECT_EQ(find_property(id).gate_minimum, 10u);
}

TEST(Registry, UnknownProperty) {
    try {
        find_property("NOPE");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownProperty);
    }
    EXPECT_THROW(run_suite(InstanceBudget{}, {"NOPE"}), Error);
    EXPECT_THROW(search_counterexample("nope", InstanceBudget{}), Error);
}

TEST(Suite, NoFailures) {
    const auto& s = default_suite();
    EXPECT_EQ(s.properties.size(), 15u);
    for (const auto& p : s.properties) {
        EXPECT_TRUE(p.failures.empty()) << p.property_id << ": " << (p.failures.empty() ? "" : p.failures[0].detail);
        EXPECT_EQ(p.instances_tried, s.corpus.size());
    }
}

TEST(Suite, P1HypothesisWidelyMet) { EXPECT_GE(prop("P1").hypothesis_met, 20u); }

TEST(Suite, PdsumCompanionListsWitnessSum) {
    const auto A = local_ring_xy();
    const auto desc = tvon_witness_module(A, ideal(A, {"x"})).descriptor();
    EXPECT_TRUE(lists(prop("PDSUM").companion, desc));
    EXPECT_FALSE(lists(prop("PDSUM").failures, desc));
}

TEST(Suite, PclassTruncatedInstanceIsCompanionOnly) {
    const auto A = truncated_f2(3);
    const auto desc = FiniteModule::cyclic(ideal(A, {"X^2"})).descriptor();
    EXPECT_TRUE(lists(prop("PCLASS").companion, desc));
    EXPECT_FALSE(lists(prop("PCLASS").failures, desc));
}

TEST(Suite, PassCoversFreeZ12) {
    const auto E = FiniteModule::free(Z(12), 2);
    const auto rep = check_instance("PASS", Instance{E.descriptor(), E, false}, InstanceBudget{});
    EXPECT_EQ(rep.hypothesis_met, 1u);
    EXPECT_TRUE(rep.failures.empty());
    EXPECT_TRUE(same_primes(ass(E), ass_ring(Z(12))));
}

TEST(Suite, PlocCountsTrivialLocalizations) { EXPECT_GT(prop("PLOC").degenerate_subcases, 0u); }

TEST(Suite, OnlyFilter) {
    const auto s = run_suite(InstanceBudget{}, {"PVON"});
    ASSERT_EQ(s.properties.size(), 1u);
    EXPECT_EQ(s.properties[0].property_id, "PVON");
}

TEST(Suite, GateArithmetic) {
    PropertyReport r;
    r.gate_minimum = 10;
    r.hypothesis_met = 9;
    EXPECT_FALSE(r.gate_passed());
    EXPECT_FALSE(r.passed());
    r.hypothesis_met = 10;
    EXPECT_TRUE(r.passed());
    r.failures.push_back({"x", "y"});
    EXPECT_FALSE(r.passed());
}

TEST(Suite, PpolExcludesNonArmendariz) {
    const auto R = polynomial_quotient(2, std::vector<std::string>{"x", "y"}, std::vector<std::string>{"x^2", "y^2"});
    const auto E = FiniteModule::self(R);
    InstanceBudget b;
    b.degree_bound = 1;
    const auto rep = check_instance("PPOL", Instance{E.descriptor(), E, false}, b);
    EXPECT_EQ(rep.hypothesis_met, 0u);
    EXPECT_TRUE(rep.failures.empty());
}

TEST(Search, AnnmultDoesNotImplyMultiplication) {
    const auto s = search_counterexample("annmult-implies-mult", InstanceBudget{});
    ASSERT_TRUE(s.minimal.has_value());
    EXPECT_TRUE(std::any_of(s.violations.begin(), s.violations.end(),
                            [&](const Violation& v) { return v.descriptor == z2_z4_over_z8().descriptor(); }));
    // F2^2 over F2 has the smaller carrier product (2·4 < 8·8).
    EXPECT_EQ(s.minimal->descriptor, f2_squared().descriptor());
    for (const auto& v : s.violations) EXPECT_GE(v.carrier_product(), s.minimal->carrier_product());
}

TEST(Search, ClassicalOneAbsorbingIsWeaker) {
    const auto s = search_counterexample("c1abs-implies-classical-prime", InstanceBudget{});
    ASSERT_TRUE(s.minimal.has_value());
    const auto A = truncated_f2(3);
    const auto truncated = FiniteModule::cyclic(ideal(A, {"X^2"})).descriptor();
    EXPECT_TRUE(std::any_of(s.violations.begin(), s.violations.end(),
                            [&](const Violation& v) { return v.descriptor == truncated; }));
    EXPECT_EQ(s.minimal->descriptor, FiniteModule::self(Z(4)).descriptor());
}

TEST(Search, PrimeIdealsMaximalOverVnRegular) {
    EXPECT_FALSE(search_counterexample("prime-implies-maximal-vnr", InstanceBudget{}).minimal.has_value());
}

TEST(Search, DirectSumNecessity) {
    const auto s = search_counterexample("pdsum-nec", InstanceBudget{});
    ASSERT_TRUE(s.minimal.has_value());
    const auto A = local_ring_xy();
    EXPECT_EQ(s.minimal->descriptor, tvon_witness_module(A, ideal(A, {"x"})).descriptor());
}
