#pragma once

/**
 * @file report.hpp
 * @brief JSON reports for CLI commands, the published report schema, and a validator for it.
 *
 * Timing data lives only under the top-level "timings" key, so two runs with the same
 * inputs agree byte for byte once that key is removed.
 */

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "annmul/dsl.hpp"

namespace annmul {

using json = nlohmann::ordered_json;

inline constexpr const char* report_schema_version = "1.0.0";

/// JSON Schema (draft-07 subset) for every report the CLI emits; also shipped as docs/report.schema.json.
inline const char* report_schema_text() {
    return R"JSON({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "annmul report",
  "type": "object",
  "required": ["schema_version", "command", "inputs", "results", "summary", "timings"],
  "additionalProperties": false,
  "properties": {
    "schema_version": {"type": "string", "enum": ["1.0.0"]},
    "command": {"type": "string", "enum": ["run", "suite", "search", "properties"]},
    "inputs": {
      "type": "object",
      "required": ["budget", "descriptors"],
      "additionalProperties": false,
      "properties": {
        "source": {"type": "string"},
        "only": {"type": "array", "items": {"type": "string"}},
        "variant": {"type": "string"},
        "budget": {"$ref": "#/definitions/budget"},
        "descriptors": {"type": "array", "items": {"type": "string"}}
      }
    },
    "results": {"type": "array", "items": {"$ref": "#/definitions/result"}},
    "summary": {
      "type": "object",
      "required": ["failures", "gates_failed", "capped", "passed", "exit_code"],
      "additionalProperties": false,
      "properties": {
        "failures": {"type": "integer"},
        "gates_failed": {"type": "array", "items": {"type": "string"}},
        "capped": {"type": "integer"},
        "passed": {"type": "boolean"},
        "exit_code": {"type": "integer", "enum": [0, 1, 2, 3]}
      }
    },
    "timings": {
      "type": "object",
      "required": ["total_ms"],
      "properties": {
        "total_ms": {"type": "number"},
        "properties": {"type": "array", "items": {
          "type": "object",
          "required": ["result", "property", "ms"],
          "properties": {"result": {"type": "integer"}, "property": {"type": "string"}, "ms": {"type": "number"}}
        }}
      }
    }
  },
  "definitions": {
    "flag": {"type": ["boolean", "string"], "enum": [true, false, "degenerate", "capped"]},
    "budget": {
      "type": "object",
      "required": ["max_ring_order", "max_module_order", "max_instances", "seed", "degree_bound"],
      "additionalProperties": false,
      "properties": {
        "max_ring_order": {"type": "integer"},
        "max_module_order": {"type": "integer"},
        "max_instances": {"type": "integer"},
        "seed": {"type": "integer"},
        "degree_bound": {"type": "integer"}
      }
    },
    "ideal": {"type": "array", "items": {"type": "string"}},
    "verdict": {
      "type": "object",
      "required": ["holds"],
      "additionalProperties": false,
      "properties": {
        "holds": {"$ref": "#/definitions/flag"},
        "witness": {"type": "array", "items": {
          "type": "object",
          "required": ["annihilator", "ideal", "elements"],
          "additionalProperties": false,
          "properties": {
            "annihilator": {"$ref": "#/definitions/ideal"},
            "ideal": {"$ref": "#/definitions/ideal"},
            "elements": {"type": "array", "items": {"type": "string"}}
          }
        }},
        "counterexample": {"$ref": "#/definitions/counterexample"}
      }
    },
    "counterexample": {
      "type": "object",
      "required": ["kind", "elements", "description"],
      "additionalProperties": false,
      "properties": {
        "kind": {"type": "string"},
        "elements": {"type": "array", "items": {"type": "string"}},
        "description": {"type": "string"},
        "context": {"type": "array", "items": {"$ref": "#/definitions/ideal"}},
        "map": {"type": "array", "items": {"type": "integer"}}
      }
    },
    "module_summary": {
      "type": "object",
      "required": ["descriptor", "ring", "order", "ring_order", "annihilator", "annihilator_multiplication",
                   "candidate_annihilators", "multiplication", "comultiplication", "vn_regular", "baer",
                   "faithful", "torsion_free", "simple", "submodule_count", "capped"],
      "additionalProperties": false,
      "properties": {
        "descriptor": {"type": "string"},
        "ring": {"type": "string"},
        "order": {"type": "integer"},
        "ring_order": {"type": "integer"},
        "annihilator": {"$ref": "#/definitions/ideal"},
        "annihilator_multiplication": {"$ref": "#/definitions/verdict"},
        "candidate_annihilators": {"type": "array", "items": {"$ref": "#/definitions/ideal"}},
        "multiplication": {"$ref": "#/definitions/flag"},
        "comultiplication": {"$ref": "#/definitions/flag"},
        "vn_regular": {"$ref": "#/definitions/flag"},
        "baer": {"$ref": "#/definitions/flag"},
        "faithful": {"$ref": "#/definitions/flag"},
        "torsion_free": {"$ref": "#/definitions/flag"},
        "simple": {"$ref": "#/definitions/flag"},
        "submodule_count": {"type": ["integer", "null"]},
        "capped": {"type": "array", "items": {"type": "string"}}
      }
    },
    "localization": {
      "type": "object",
      "required": ["ring", "multiplicative_set", "kernel", "order", "trivial"],
      "additionalProperties": false,
      "properties": {
        "ring": {"type": "string"},
        "multiplicative_set": {"type": "array", "items": {"type": "string"}},
        "kernel": {"type": "array", "items": {"type": "string"}},
        "order": {"type": "integer"},
        "trivial": {"type": "boolean"},
        "localized": {"type": "string"}
      }
    },
    "entry": {
      "type": "object",
      "required": ["descriptor", "detail"],
      "additionalProperties": false,
      "properties": {"descriptor": {"type": "string"}, "detail": {"type": "string"}}
    },
    "property": {
      "type": "object",
      "required": ["id", "description", "instances_tried", "hypothesis_met", "gate_minimum", "gate_passed",
                   "failures", "companion", "skipped_degenerate", "skipped_cap", "degenerate_subcases", "notes", "passed"],
      "additionalProperties": false,
      "properties": {
        "id": {"type": "string"},
        "description": {"type": "string"},
        "instances_tried": {"type": "integer"},
        "hypothesis_met": {"type": "integer"},
        "gate_minimum": {"type": "integer"},
        "gate_passed": {"type": "boolean"},
        "failures": {"type": "array", "items": {"$ref": "#/definitions/entry"}},
        "companion": {"type": "array", "items": {"$ref": "#/definitions/entry"}},
        "skipped_degenerate": {"type": "integer"},
        "skipped_cap": {"type": "integer"},
        "degenerate_subcases": {"type": "integer"},
        "notes": {"type": "array", "items": {"type": "string"}},
        "passed": {"type": "boolean"}
      }
    },
    "violation": {
      "type": "object",
      "required": ["descriptor", "detail", "ring_order", "module_order"],
      "additionalProperties": false,
      "properties": {
        "descriptor": {"type": "string"},
        "detail": {"type": "string"},
        "ring_order": {"type": "integer"},
        "module_order": {"type": "integer"}
      }
    },
    "result": {
      "type": "object",
      "required": ["type"],
      "properties": {
        "type": {"type": "string", "enum": ["binding", "classify", "localization", "property", "suite", "search", "registry"]},
        "name": {"type": "string"},
        "kind": {"type": "string"},
        "descriptor": {"type": "string"},
        "module": {"$ref": "#/definitions/module_summary"},
        "localization": {"$ref": "#/definitions/localization"},
        "localized": {"$ref": "#/definitions/module_summary"},
        "ring": {"type": "string"},
        "multiplicative_set": {"type": "array", "items": {"type": "string"}},
        "kernel": {"type": "array", "items": {"type": "string"}},
        "order": {"type": "integer"},
        "trivial": {"type": "boolean"},
        "localized_descriptor": {"type": "string"},
        "property": {"$ref": "#/definitions/property"},
        "corpus_size": {"type": "integer"},
        "properties": {"type": "array", "items": {"$ref": "#/definitions/property"}},
        "variant": {"type": "string"},
        "description": {"type": "string"},
        "instances_scanned": {"type": "integer"},
        "skipped_cap": {"type": "integer"},
        "violations": {"type": "array", "items": {"$ref": "#/definitions/violation"}},
        "minimal": {"type": ["object", "null"]},
        "entries": {"type": "array", "items": {
          "type": "object",
          "required": ["id", "description", "gate_minimum"],
          "properties": {
            "id": {"type": "string"}, "description": {"type": "string"}, "gate_minimum": {"type": "integer"},
            "notes": {"type": "array", "items": {"type": "string"}}
          }
        }}
      }
    }
  }
})JSON";
}

inline const json& report_schema() {
    static const json schema = json::parse(report_schema_text());
    return schema;
}

namespace detail {

inline bool json_type_is(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "null") return v.is_null();
    return false;
}

inline void validate_node(const json& v, const json& s, const json& root, const std::string& path,
                          std::vector<std::string>& errors) {
    if (s.contains("$ref")) {
        const std::string ref = s["$ref"];
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0 || !root["definitions"].contains(ref.substr(prefix.size()))) {
            errors.push_back(path + ": unresolvable $ref " + ref);
            return;
        }
        validate_node(v, root["definitions"][ref.substr(prefix.size())], root, path, errors);
        return;
    }
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (const auto& t : s["type"]) ok = ok || json_type_is(v, t.get<std::string>());
        } else {
            ok = json_type_is(v, s["type"].get<std::string>());
        }
        if (!ok) {
            errors.push_back(path + ": expected type " + s["type"].dump());
            return;
        }
    }
    if (s.contains("enum")) {
        bool found = false;
        for (const auto& e : s["enum"]) found = found || e == v;
        if (!found) errors.push_back(path + ": value " + v.dump() + " not in " + s["enum"].dump());
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& r : s["required"])
                if (!v.contains(r.get<std::string>())) errors.push_back(path + ": missing key '" + r.get<std::string>() + "'");
        const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (s.contains("properties") && s["properties"].contains(it.key())) {
                validate_node(it.value(), s["properties"][it.key()], root, path + "/" + it.key(), errors);
            } else if (closed) {
                errors.push_back(path + ": unexpected key '" + it.key() + "'");
            }
        }
    }
    if (v.is_array() && s.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i)
            validate_node(v[i], s["items"], root, path + "/" + std::to_string(i), errors);
}

} // namespace detail

/// Violations of the report schema; empty when the report conforms.
inline std::vector<std::string> validate_report(const json& report) {
    std::vector<std::string> errors;
    detail::validate_node(report, report_schema(), report_schema(), "", errors);
    return errors;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline json flag_json(Flag f) {
    switch (f) {
    case Flag::yes: return true;
    case Flag::no: return false;
    default: return "degenerate";
    }
}

inline json ideal_json(const Ideal& I) {
    json a = json::array();
    I.elements.for_each([&](elem_t x) { a.push_back(I.ring.name(x)); });
    return a;
}

inline json budget_json(const InstanceBudget& b) {
    return json{{"max_ring_order", b.max_ring_order},
                {"max_module_order", b.max_module_order},
                {"max_instances", b.max_instances},
                {"seed", b.seed},
                {"degree_bound", b.degree_bound}};
}

inline json verdict_json(const Verdict& v, const FiniteModule& E) {
    json out{{"holds", flag_json(v.holds)}};
    if (!v.witness.empty()) {
        // One row per distinct annihilator, listing the elements that share it.
        json rows = json::array();
        std::vector<std::pair<Subset, std::size_t>> seen;
        for (const auto& w : v.witness) {
            auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == w.annihilator.elements; });
            if (it == seen.end()) {
                seen.emplace_back(w.annihilator.elements, rows.size());
                rows.push_back(json{{"annihilator", ideal_json(w.annihilator)},
                                    {"ideal", ideal_json(w.ideal)},
                                    {"elements", json::array()}});
                it = seen.end() - 1;
            }
            rows[it->second]["elements"].push_back(E.name(w.element));
        }
        out["witness"] = rows;
    }
    if (v.counterexample) {
        const auto& c = *v.counterexample;
        json els = json::array();
        for (elem_t x : c.elements) els.push_back(c.kind == "ideal" ? E.ring().name(x) : E.name(x));
        json ce{{"kind", c.kind}, {"elements", els}, {"description", c.description}};
        if (!c.context.empty()) {
            json ctx = json::array();
            for (const auto& I : c.context) ctx.push_back(ideal_json(I));
            ce["context"] = ctx;
        }
        if (!c.map.empty()) ce["map"] = c.map;
        out["counterexample"] = ce;
    }
    return out;
}

inline json optional_flag(const std::optional<Verdict>& v) { return v ? flag_json(v->holds) : json("capped"); }

inline json module_summary_json(const ModuleSummary& s) {
    const auto& E = s.module;
    json cands = json::array();
    for (const auto& I : s.candidate_annihilators) cands.push_back(ideal_json(I));
    return json{{"descriptor", s.descriptor},
                {"ring", s.ring},
                {"order", s.order},
                {"ring_order", s.ring_order},
                {"annihilator", ideal_json(s.annihilator)},
                {"annihilator_multiplication", verdict_json(s.annihilator_multiplication, E)},
                {"candidate_annihilators", cands},
                {"multiplication", optional_flag(s.multiplication)},
                {"comultiplication", optional_flag(s.comultiplication)},
                {"vn_regular", flag_json(s.vn_regular.holds)},
                {"baer", flag_json(s.baer.holds)},
                {"faithful", flag_json(s.basic.faithful)},
                {"torsion_free", flag_json(s.basic.torsion_free)},
                {"simple", flag_json(s.basic.simple)},
                {"submodule_count", s.submodule_count ? json(*s.submodule_count) : json(nullptr)},
                {"capped", s.capped}};
}

inline json localization_json(const LocalizationSummary& l) {
    json out{{"ring", l.ring},
             {"multiplicative_set", l.multiplicative_set},
             {"kernel", l.kernel},
             {"order", l.order},
             {"trivial", l.trivial}};
    if (!l.localized_descriptor.empty()) out["localized"] = l.localized_descriptor;
    return out;
}

inline json entries_json(const std::vector<Failure>& fs) {
    json a = json::array();
    for (const auto& f : fs) a.push_back(json{{"descriptor", f.descriptor}, {"detail", f.detail}});
    return a;
}

inline json property_json(const PropertyReport& p) {
    return json{{"id", p.property_id},
                {"description", p.description},
                {"instances_tried", p.instances_tried},
                {"hypothesis_met", p.hypothesis_met},
                {"gate_minimum", p.gate_minimum},
                {"gate_passed", p.gate_passed()},
                {"failures", entries_json(p.failures)},
                {"companion", entries_json(p.companion)},
                {"skipped_degenerate", p.skipped_degenerate},
                {"skipped_cap", p.skipped_cap},
                {"degenerate_subcases", p.degenerate_subcases},
                {"notes", p.notes},
                {"passed", p.passed()}};
}

inline json violation_json(const Violation& v) {
    return json{{"descriptor", v.descriptor},
                {"detail", v.detail},
                {"ring_order", v.ring_order},
                {"module_order", v.module_order}};
}

/// Accumulates results of one CLI invocation into a report.
class ReportBuilder {
public:
    ReportBuilder(std::string command, const InstanceBudget& budget) : command_(std::move(command)) {
        inputs_ = json{{"budget", budget_json(budget)}, {"descriptors", json::array()}};
    }

    void set_input(const std::string& key, json value) { inputs_[key] = std::move(value); }
    void add_descriptor(const std::string& d) { inputs_["descriptors"].push_back(d); }

    void add(const CommandResult& r) {
        std::visit([&](const auto& x) { add_one(x); }, r);
    }

    void add_search(const SearchResult& s) {
        json v = json::array();
        for (const auto& x : s.violations) v.push_back(violation_json(x));
        results_.push_back(json{{"type", "search"},
                                {"variant", s.variant},
                                {"description", s.description},
                                {"instances_scanned", s.instances_scanned},
                                {"skipped_cap", s.skipped_cap},
                                {"violations", v},
                                {"minimal", s.minimal ? violation_json(*s.minimal) : json(nullptr)}});
        capped_ += s.skipped_cap;
    }

    void add_registry() {
        json entries = json::array();
        for (const auto& p : property_registry())
            entries.push_back(json{{"id", p.id}, {"description", p.description}, {"gate_minimum", p.gate_minimum},
                                   {"notes", p.notes}});
        results_.push_back(json{{"type", "registry"}, {"entries", entries}});
    }

    void note_capped() { ++capped_; }
    std::size_t failures() const { return failures_; }
    const std::vector<std::string>& gates_failed() const { return gates_failed_; }
    std::size_t capped() const { return capped_; }

    /// Exit status: 1 for failures or tripped gates, 3 when a cap stopped a command or a classifier, else 0.
    int exit_code() const {
        if (failures_ > 0 || !gates_failed_.empty()) return 1;
        if (hard_cap_) return 3;
        return 0;
    }
    void mark_hard_cap() { hard_cap_ = true; }

    /// Builds the report and checks it against the schema.
    json finish(double total_ms) const {
        json timings{{"total_ms", total_ms}, {"properties", timings_}};
        json report{{"schema_version", report_schema_version},
                    {"command", command_},
                    {"inputs", inputs_},
                    {"results", results_},
                    {"summary", json{{"failures", failures_},
                                     {"gates_failed", gates_failed_},
                                     {"capped", capped_},
                                     {"passed", exit_code() == 0},
                                     {"exit_code", exit_code()}}},
                    {"timings", timings}};
        const auto errors = validate_report(report);
        if (!errors.empty()) throw Error(ErrorCode::InvalidStructure, "report violates schema: " + errors.front());
        return report;
    }

private:
    void add_property(const PropertyReport& p) {
        failures_ += p.failures.size();
        capped_ += p.skipped_cap;
        if (!p.gate_passed()) gates_failed_.push_back(p.property_id);
        timings_.push_back(json{{"result", results_.size()}, {"property", p.property_id}, {"ms", p.elapsed_ms}});
    }

    void add_one(const BindingResult& b) {
        results_.push_back(json{{"type", "binding"}, {"name", b.name}, {"kind", b.kind}, {"descriptor", b.descriptor}});
    }

    void add_one(const ClassifyResult& c) {
        json r{{"type", "classify"}, {"module", module_summary_json(c.module)}};
        if (c.localization) r["localization"] = localization_json(*c.localization);
        if (c.localized) r["localized"] = module_summary_json(*c.localized);
        capped_ += c.module.capped.size();
        if (!c.module.capped.empty()) hard_cap_ = true;
        add_descriptor(c.module.descriptor);
        results_.push_back(std::move(r));
    }

    void add_one(const LocalizationSummary& l) {
        json r = localization_json(l);
        r["type"] = "localization";
        if (r.contains("localized")) {
            r["localized_descriptor"] = r["localized"];
            r.erase("localized");
        }
        results_.push_back(std::move(r));
    }

    void add_one(const PropertyReport& p) {
        add_property(p);
        results_.push_back(json{{"type", "property"}, {"property", property_json(p)}});
    }

    void add_one(const SuiteReport& s) {
        json props = json::array();
        for (const auto& p : s.properties) {
            add_property(p);
            props.push_back(property_json(p));
        }
        for (const auto& d : s.corpus) add_descriptor(d);
        results_.push_back(json{{"type", "suite"}, {"corpus_size", s.corpus.size()}, {"properties", props}});
    }

    std::string command_;
    json inputs_;
    json results_ = json::array();
    json timings_ = json::array();
    std::size_t failures_ = 0;
    std::vector<std::string> gates_failed_;
    std::size_t capped_ = 0;
    bool hard_cap_ = false;
};

/// The report with timing data removed, for determinism comparisons.
inline json without_timings(json report) {
    report.erase("timings");
    return report;
}

} // namespace annmul
