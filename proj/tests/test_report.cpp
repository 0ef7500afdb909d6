#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "annmul/report.hpp"
#include "helpers.hpp"

using namespace th;

namespace {

json suite_report(std::uint64_t seed, std::size_t n) {
    InstanceBudget b;
    b.seed = seed;
    b.max_instances = n;
    ReportBuilder rb("suite", b);
    rb.add(run_suite(b));
    return rb.finish(1.0);
}

json run_report(const std::string& text) {
    Interpreter in;
    ReportBuilder rb("run", InstanceBudget{});
    for (const auto& r : in.run(text)) rb.add(r);
    return rb.finish(1.0);
}

} // namespace

TEST(Report, SchemaFileMatchesEmbedded) {
    std::ifstream in(ANNMUL_SCHEMA);
    ASSERT_TRUE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(json::parse(ss.str()), report_schema());
}

TEST(Report, SuiteValidates) {
    const auto r = suite_report(7, 50);
    EXPECT_TRUE(validate_report(r).empty());
    EXPECT_EQ(r["command"], "suite");
    EXPECT_EQ(r["results"][0]["properties"].size(), 15u);
    EXPECT_EQ(r["timings"]["properties"].size(), 15u);
}

TEST(Report, DeterministicModuloTimings) {
    const auto a = suite_report(7, 50), b = suite_report(7, 50);
    EXPECT_EQ(without_timings(a).dump(), without_timings(b).dump());
    EXPECT_NE(without_timings(a).dump(), without_timings(suite_report(8, 50)).dump());
}

TEST(Report, TimingsOnlyAtTopLevel) {
    const auto r = without_timings(suite_report(7, 10));
    EXPECT_EQ(r.dump().find("_ms"), std::string::npos);
}

TEST(Report, ClassifyWitnessRows) {
    const auto r = run_report("(classify (dsum (cyclic (Z 8) (ideal 2)) (cyclic (Z 8) (ideal 4))))");
    EXPECT_TRUE(validate_report(r).empty());
    const auto& m = r["results"][0]["module"];
    EXPECT_EQ(m["annihilator_multiplication"]["holds"], true);
    EXPECT_FALSE(m["annihilator_multiplication"]["witness"].empty());
    EXPECT_EQ(m["multiplication"], false);
    EXPECT_EQ(r["inputs"]["descriptors"][0], z2_z4_over_z8().descriptor());
}

TEST(Report, CounterexampleSerialized) {
    const auto r = run_report("(classify (free (Z 2) 2))");
    EXPECT_TRUE(validate_report(r).empty());
    EXPECT_EQ(r["results"][0]["module"]["multiplication"], false);
}

TEST(Report, ExitCodes) {
    ReportBuilder ok("run", InstanceBudget{});
    EXPECT_EQ(ok.exit_code(), 0);
    ReportBuilder cap("run", InstanceBudget{});
    cap.mark_hard_cap();
    EXPECT_EQ(cap.exit_code(), 3);
    PropertyReport p;
    p.property_id = "P1";
    p.gate_minimum = 10;
    ReportBuilder gate("run", InstanceBudget{});
    gate.add(p);
    EXPECT_EQ(gate.exit_code(), 1);
    EXPECT_EQ(gate.finish(0)["summary"]["gates_failed"][0], "P1");
}

TEST(Report, ValidatorRejects) {
    auto r = run_report("(Z 3)");
    EXPECT_TRUE(validate_report(r).empty());
    auto bad = r;
    bad["extra"] = 1;
    EXPECT_FALSE(validate_report(bad).empty());
    bad = r;
    bad["summary"]["exit_code"] = 9;
    EXPECT_FALSE(validate_report(bad).empty());
    bad = r;
    bad.erase("results");
    EXPECT_FALSE(validate_report(bad).empty());
    bad = r;
    bad["results"][0]["type"] = "nope";
    EXPECT_FALSE(validate_report(bad).empty());
}
