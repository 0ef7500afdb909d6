// Command-line front end: DSL runs, the property suite, counterexample search and the registry.
//
// Exit codes: 0 all pass, 1 failures or a tripped non-vacuity gate, 2 usage or parse error,
// 3 a resource cap stopped a command.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "annmul/report.hpp"

namespace {

using namespace annmul;

std::string flag_text(const json& f) { return f.is_boolean() ? (f.get<bool>() ? "yes" : "no") : f.get<std::string>(); }

std::string ideal_text(const json& a) {
    std::string s = "{";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get<std::string>();
    return s + "}";
}

void print_summary(std::ostream& os, const json& m, const std::string& indent = "  ") {
    os << indent << "module      " << m["descriptor"].get<std::string>() << "  (order " << m["order"] << ")\n";
    os << indent << "ann(E)      " << ideal_text(m["annihilator"]) << "\n";
    const auto& am = m["annihilator_multiplication"];
    os << indent << "annihilator multiplication: " << flag_text(am["holds"]) << "\n";
    if (am.contains("witness"))
        for (const auto& w : am["witness"])
            os << indent << "  ann = " << ideal_text(w["annihilator"]) << "  <- I = " << ideal_text(w["ideal"]) << "\n";
    if (am.contains("counterexample")) {
        const auto& c = am["counterexample"];
        os << indent << "  counterexample: " << c["description"].get<std::string>() << "\n";
    }
    for (const char* k : {"multiplication", "comultiplication", "vn_regular", "baer", "faithful", "torsion_free", "simple"})
        os << indent << std::left << std::setw(18) << k << flag_text(m[k]) << "\n";
    os << indent << "submodules  " << (m["submodule_count"].is_null() ? "capped" : m["submodule_count"].dump()) << "\n";
}

void print_property(std::ostream& os, const json& p) {
    os << std::left << std::setw(7) << p["id"].get<std::string>() << (p["passed"].get<bool>() ? "PASS" : "FAIL")
       << "  tried " << p["instances_tried"] << "  hypothesis " << p["hypothesis_met"] << "/" << p["gate_minimum"]
       << "  failures " << p["failures"].size() << "  degenerate " << p["skipped_degenerate"] << "  capped "
       << p["skipped_cap"] << "\n";
    for (const auto& f : p["failures"])
        os << "    failure " << f["descriptor"].get<std::string>() << ": " << f["detail"].get<std::string>() << "\n";
    if (!p["gate_passed"].get<bool>()) os << "    non-vacuity gate not met\n";
}

void print_result(std::ostream& os, const json& r) {
    const auto type = r["type"].get<std::string>();
    if (type == "binding") {
        os << (r["name"].get<std::string>().empty() ? "" : r["name"].get<std::string>() + " = ")
           << r["descriptor"].get<std::string>() << "\n";
    } else if (type == "classify") {
        os << "classify\n";
        print_summary(os, r["module"]);
        if (r.contains("localization")) {
            const auto& l = r["localization"];
            os << "  localized at " << ideal_text(l["multiplicative_set"]) << ": kernel " << ideal_text(l["kernel"])
               << ", ring order " << l["order"] << (l["trivial"].get<bool>() ? " (trivial)" : "") << "\n";
        }
        if (r.contains("localized")) print_summary(os, r["localized"], "    ");
    } else if (type == "localization") {
        os << "localization of " << r["ring"].get<std::string>() << " at " << ideal_text(r["multiplicative_set"])
           << ": kernel " << ideal_text(r["kernel"]) << ", order " << r["order"] << "\n";
    } else if (type == "property") {
        print_property(os, r["property"]);
    } else if (type == "suite") {
        os << "suite over " << r["corpus_size"] << " instances\n";
        for (const auto& p : r["properties"]) print_property(os, p);
    } else if (type == "search") {
        os << "search " << r["variant"].get<std::string>() << ": " << r["description"].get<std::string>() << "\n";
        os << "  scanned " << r["instances_scanned"] << ", violations " << r["violations"].size() << "\n";
        if (r["minimal"].is_null()) {
            os << "  none found within budget\n";
        } else {
            const auto& m = r["minimal"];
            os << "  minimal " << m["descriptor"].get<std::string>() << " (|A||E| = "
               << m["ring_order"].get<std::size_t>() * m["module_order"].get<std::size_t>() << "): "
               << m["detail"].get<std::string>() << "\n";
        }
    } else if (type == "registry") {
        for (const auto& e : r["entries"])
            os << std::left << std::setw(7) << e["id"].get<std::string>() << e["description"].get<std::string>() << "\n";
    }
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::ResolutionError, "cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-instance checker for annihilator multiplication modules"};
    app.require_subcommand(1);

    InstanceBudget budget;
    std::string json_path;
    std::vector<std::string> only;
    app.add_option("--seed", budget.seed, "Corpus seed")->capture_default_str();
    app.add_option("--max-ring-order", budget.max_ring_order, "Largest random ring")->capture_default_str();
    app.add_option("--max-module-order", budget.max_module_order, "Largest random module")->capture_default_str();
    app.add_option("--max-instances", budget.max_instances, "Random instances beyond the reference set")
        ->capture_default_str();
    app.add_option("--degree-bound", budget.degree_bound, "Polynomial degree bound")->capture_default_str();
    app.add_option("--only", only, "Restrict the suite to these property ids");
    app.add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout)");

    std::string input = "-";
    auto* run = app.add_subcommand("run", "Evaluate a DSL file");
    run->add_option("file", input, "DSL source, '-' for stdin");
    auto* suite = app.add_subcommand("suite", "Run the property suite over the generated corpus");
    std::string variant;
    auto* search = app.add_subcommand("search", "Search the corpus for a counterexample to a variant");
    search->add_option("variant", variant, "Variant id")->required();
    auto* props = app.add_subcommand("properties", "List registered properties and search variants");
    for (auto* sub : {run, suite, search, props}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    std::string command = run->parsed() ? "run" : suite->parsed() ? "suite" : search->parsed() ? "search" : "properties";
    ReportBuilder rb(command, budget);
    try {
        budget.validate();
        if (run->parsed()) {
            rb.set_input("source", input);
            const auto forms = sexpr::parse(read_input(input));
            Interpreter in(budget);
            for (const auto& f : forms) {
                try {
                    rb.add(in.execute(f));
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::CapExceeded) throw;
                    rb.mark_hard_cap();
                    rb.note_capped();
                    std::cerr << "cap exceeded: " << e.what() << "\n";
                }
            }
        } else if (suite->parsed()) {
            if (!only.empty()) rb.set_input("only", only);
            rb.add(run_suite(budget, only));
        } else if (search->parsed()) {
            rb.set_input("variant", variant);
            rb.add_search(search_counterexample(variant, budget));
        } else {
            rb.add_registry();
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::CapExceeded ? 3 : 2;
    }

    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const json report = rb.finish(ms);
    std::ostream& human = json_path == "-" ? std::cerr : std::cout;
    for (const auto& r : report["results"]) print_result(human, r);
    if (props->parsed())
        for (const auto& v : search_variants()) human << "search  " << std::left << std::setw(32) << v.id << v.description << "\n";
    const auto& s = report["summary"];
    if (!props->parsed())
        human << "summary: failures " << s["failures"] << ", gates failed " << s["gates_failed"].size() << ", capped "
              << s["capped"] << ", exit " << s["exit_code"] << "\n";
    if (json_path == "-") {
        std::cout << report.dump(2) << "\n";
    } else if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << report.dump(2) << "\n";
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
    }
    return rb.exit_code();
}
