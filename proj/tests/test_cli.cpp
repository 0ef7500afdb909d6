#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run tool(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd = std::string(ANNMUL_TOOL) + " " + args + " 2>/dev/null";
    if (!stdin_text.empty()) cmd = "printf '%s' '" + stdin_text + "' | " + cmd;
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const std::string& name) { return std::string(ANNMUL_SAMPLES) + "/" + name; }

} // namespace

TEST(Cli, GoldenSampleExitsZero) {
    const auto r = tool("run " + sample("golden.sexp") + " --json -");
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"]["exit_code"], 0);
    EXPECT_EQ(j["results"][2]["module"]["annihilator_multiplication"]["holds"], true);
}

TEST(Cli, HumanOutput) {
    const auto r = tool("run " + sample("golden.sexp"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("annihilator multiplication: yes"), std::string::npos);
}

TEST(Cli, WitnessAndLocalizeSamples) {
    EXPECT_EQ(tool("run " + sample("witness.sexp")).code, 0);
    EXPECT_EQ(tool("run " + sample("localize.sexp")).code, 0);
}

TEST(Cli, ParseErrorsExitTwo) {
    EXPECT_EQ(tool("run " + sample("bad_syntax.sexp")).code, 2);
    EXPECT_EQ(tool("run " + sample("unbound.sexp")).code, 2);
    EXPECT_EQ(tool("run /nonexistent.sexp").code, 2);
    EXPECT_EQ(tool("frobnicate").code, 2);
    EXPECT_EQ(tool("search no-such-variant").code, 2);
    EXPECT_EQ(tool("suite --only NOPE").code, 2);
    EXPECT_EQ(tool("suite --max-ring-order 1").code, 2);
}

TEST(Cli, TrippedGateExitsOne) {
    const auto r = tool("run " + sample("failing_gate.sexp") + " --json -");
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"]["gates_failed"][0], "PCLASS");
    EXPECT_EQ(j["summary"]["failures"], 0);
}

TEST(Cli, CapExitsThree) {
    const auto r = tool("run " + sample("cap.sexp") + " --json -");
    EXPECT_EQ(r.code, 3);
    EXPECT_GT(nlohmann::json::parse(r.out)["summary"]["capped"].get<int>(), 0);
}

TEST(Cli, SuiteOnlyPasses) {
    const auto r = tool("suite --only P1 PDIR PVON --json -");
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["results"][0]["properties"].size(), 3u);
    EXPECT_EQ(j["inputs"]["only"].size(), 3u);
}

TEST(Cli, SuiteDeterministic) {
    auto a = nlohmann::json::parse(tool("suite --seed 7 --max-instances 50 --json -").out);
    auto b = nlohmann::json::parse(tool("suite --seed 7 --max-instances 50 --json -").out);
    a.erase("timings");
    b.erase("timings");
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, SearchAndProperties) {
    const auto s = tool("search pdsum-nec --json -");
    EXPECT_EQ(s.code, 0);
    EXPECT_FALSE(nlohmann::json::parse(s.out)["results"][0]["minimal"].is_null());
    const auto p = tool("properties");
    EXPECT_EQ(p.code, 0);
    EXPECT_NE(p.out.find("PCLASS"), std::string::npos);
    EXPECT_NE(p.out.find("annmult-implies-mult"), std::string::npos);
}

TEST(Cli, StdinInput) {
    const auto r = tool("run - --json -", "(mult (Z 12) {4})");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["results"][0]["order"], 3);
}
