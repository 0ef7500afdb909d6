#pragma once

/**
 * @file dsl.hpp
 * @brief Evaluator for the construction DSL: ring and module expressions, bindings and commands.
 *
 * Ring forms:   (Z n) (prod R...) (polyquot (Z p) (vars...) (gens...)) (quot R (ideal g...))
 * Module forms: (self R) (cyclic R (ideal g...)) (free R k) (dsum M...) (prod M...)
 *               (quot M (sub g...)) (sub M g...) (over (quot R (ideal g...)) M)
 *               (localize M (mult g...))
 * Commands:     (ring NAME R) (module NAME M) (classify M [(mult R {g...})])
 *               (mult R {g...}) (check PROP [M]) (suite)
 * Every descriptor printed by the library is a valid module or ring form.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "annmul/localize.hpp"
#include "annmul/polyquot.hpp"
#include "annmul/propcheck.hpp"
#include "annmul/sexpr.hpp"

namespace annmul {

using sexpr::Node;

struct ModuleSummary {
    FiniteModule module;
    std::string descriptor;
    std::string ring;
    std::size_t order = 0;
    std::size_t ring_order = 0;
    Ideal annihilator;
    Verdict annihilator_multiplication;
    std::vector<Ideal> candidate_annihilators;
    std::optional<Verdict> multiplication;
    std::optional<Verdict> comultiplication;
    Verdict vn_regular;
    Verdict baer;
    BasicModuleFlags basic;
    std::optional<std::size_t> submodule_count;
    /// Classifiers that stopped at a resource cap.
    std::vector<std::string> capped;
};

struct LocalizationSummary {
    std::string ring;
    std::vector<std::string> multiplicative_set;
    std::vector<std::string> kernel;
    std::size_t order = 0;
    bool trivial = false;
    std::string localized_descriptor;
};

struct ClassifyResult {
    ModuleSummary module;
    std::optional<LocalizationSummary> localization;
    std::optional<ModuleSummary> localized;
};

struct BindingResult {
    std::string name;
    std::string kind;
    std::string descriptor;
};

using CommandResult = std::variant<BindingResult, ClassifyResult, LocalizationSummary, PropertyReport, SuiteReport>;

inline ModuleSummary summarize_module(const FiniteModule& E, const Caps& caps) {
    ModuleSummary s;
    s.module = E;
    s.descriptor = E.descriptor();
    s.ring = E.ring().descriptor();
    s.order = E.order();
    s.ring_order = E.ring().order();
    s.annihilator = annihilator(E);
    s.annihilator_multiplication = is_annihilator_multiplication(E, caps);
    s.candidate_annihilators = annihilator_lattice(E).closure;
    auto guarded = [&](const char* what, auto&& f) -> std::optional<Verdict> {
        try {
            return f();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::CapExceeded) throw;
            s.capped.push_back(what);
            return std::nullopt;
        }
    };
    s.multiplication = guarded("multiplication", [&] { return is_multiplication(E, caps); });
    s.comultiplication = guarded("comultiplication", [&] { return is_comultiplication(E, caps); });
    s.vn_regular = is_vn_regular_module(E);
    s.baer = is_baer_module(E);
    s.basic = classify_module_basic(E);
    try {
        s.submodule_count = enumerate_submodules(E, caps).size();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
        s.capped.push_back("submodule_count");
    }
    return s;
}

class Interpreter {
public:
    using Value = std::variant<FiniteRing, FiniteModule>;

    explicit Interpreter(InstanceBudget budget = {}) : budget_(budget) {}

    const InstanceBudget& budget() const { return budget_; }

    /// Runs every top-level form in `text`.
    std::vector<CommandResult> run(std::string_view text) {
        std::vector<CommandResult> out;
        for (const auto& form : sexpr::parse(text)) out.push_back(execute(form));
        return out;
    }

    CommandResult execute(const Node& n) {
        const auto head = n.head();
        if (head == "ring" || head == "module") {
            expect_arity(n, 3);
            const auto& name = n.children[1];
            if (!name.is_atom()) fail_resolve(name, "binding name must be an identifier");
            Value v = head == "ring" ? Value(ring(n.children[2])) : Value(module(n.children[2]));
            env_[name.atom] = v;
            return BindingResult{name.atom, head, descriptor_of(v)};
        }
        if (head == "classify") {
            if (n.children.size() != 2 && n.children.size() != 3) arity_error(n, "1 or 2");
            const auto E = module(n.children[1]);
            ClassifyResult r{summarize_module(E, budget_.caps), std::nullopt, std::nullopt};
            if (n.children.size() == 3) {
                const auto T = mult_set(n.children[2], &E.ring());
                const auto rl = localize_ring(E.ring(), T);
                const auto ml = localize_module(E, T, rl);
                r.localization = summarize_localization(T, rl, ml.is_trivial ? "" : ml.module.descriptor());
                if (!ml.is_trivial) r.localized = summarize_module(ml.module, budget_.caps);
            }
            return r;
        }
        if (head == "mult") {
            const auto T = mult_set(n, nullptr);
            return summarize_localization(T, localize_ring(T.ring, T), "");
        }
        if (head == "check") {
            if (n.children.size() != 2 && n.children.size() != 3) arity_error(n, "1 or 2");
            const auto& prop = n.children[1];
            if (!prop.is_atom()) fail_resolve(prop, "property id must be an identifier");
            if (n.children.size() == 2) return run_suite(budget_, {prop.atom});
            const auto E = module(n.children[2]);
            // Non-vacuity gates apply to corpus runs, not to a single named module.
            auto rep = check_instance(prop.atom, Instance{E.descriptor(), E, false}, budget_);
            rep.gate_minimum = 0;
            return rep;
        }
        if (head == "suite") {
            expect_arity(n, 1);
            return run_suite(budget_);
        }
        static const std::set<std::string> forms = {"Z",    "prod", "polyquot", "quot",  "self",    "cyclic",
                                                    "free", "dsum", "sub",      "over",  "localize"};
        if (forms.count(head)) {
            const auto v = value(n);
            return BindingResult{"", std::holds_alternative<FiniteRing>(v) ? "ring" : "module", descriptor_of(v)};
        }
        throw Error(ErrorCode::SyntaxError, n.where() + ": unknown command '" + (head.empty() ? sexpr::print(n) : head) +
                                                "', expected ring, module, classify, mult, check or suite");
    }

    Value value(const Node& n) {
        if (n.is_atom()) {
            auto it = env_.find(n.atom);
            if (it == env_.end()) fail_resolve(n, "unknown name '" + n.atom + "'");
            return it->second;
        }
        const auto head = n.head();
        if (head == "Z" || head == "polyquot") return ring(n);
        if (head == "quot") {
            expect_arity(n, 3);
            return n.children[2].head() == "ideal" ? Value(ring(n)) : Value(module(n));
        }
        if (head == "prod") {
            if (n.children.size() < 2) arity_error(n, "at least 1");
            std::vector<Value> parts;
            for (std::size_t i = 1; i < n.children.size(); ++i) parts.push_back(value(n.children[i]));
            const bool rings = std::holds_alternative<FiniteRing>(parts.front());
            std::vector<FiniteRing> rs;
            std::vector<FiniteModule> ms;
            for (auto& p : parts) {
                if (std::holds_alternative<FiniteRing>(p) != rings)
                    fail_resolve(n, "prod mixes rings and modules");
                if (rings) rs.push_back(std::get<FiniteRing>(p));
                else ms.push_back(std::get<FiniteModule>(p));
            }
            if (rings) return FiniteRing::product(rs);
            return FiniteModule::product(ms);
        }
        return module(n);
    }

    FiniteRing ring(const Node& n) {
        if (n.is_atom()) return as_ring(value(n), n);
        const auto head = n.head();
        if (head == "Z") {
            expect_arity(n, 2);
            return FiniteRing::integers_mod(integer(n.children[1]));
        }
        if (head == "prod") return as_ring(value(n), n);
        if (head == "polyquot") {
            expect_arity(n, 4);
            const auto base = ring(n.children[1]);
            if (base.kind() != RingKind::integers)
                fail_resolve(n.children[1], "polyquot coefficients must be (Z p)");
            const auto& vs = list_of(n.children[2]);
            const auto& gs = list_of(n.children[3]);
            std::vector<std::string> vars, gens;
            for (const auto& v : vs) vars.push_back(atom_of(v));
            for (const auto& g : gs) gens.push_back(superscripts(atom_of(g)));
            return polynomial_quotient(static_cast<std::int64_t>(base.order()), vars, gens);
        }
        if (head == "quot") {
            expect_arity(n, 3);
            const auto R = ring(n.children[1]);
            return quotient_ring(R, ideal(R, n.children[2])).ring;
        }
        throw Error(ErrorCode::SyntaxError, n.where() + ": expected a ring form (Z, prod, polyquot, quot), got '" +
                                                sexpr::print(n) + "'");
    }

    FiniteModule module(const Node& n) {
        if (n.is_atom()) {
            auto v = value(n);
            if (!std::holds_alternative<FiniteModule>(v)) fail_resolve(n, "'" + n.atom + "' is a ring, not a module");
            return std::get<FiniteModule>(v);
        }
        const auto head = n.head();
        if (head == "self") {
            expect_arity(n, 2);
            return FiniteModule::self(ring(n.children[1]));
        }
        if (head == "cyclic") {
            if (n.children.size() < 2) arity_error(n, "at least 1");
            const auto R = ring(n.children[1]);
            if (n.children.size() == 3 && n.children[2].is_list && n.children[2].open != '[') return FiniteModule::cyclic(ideal(R, n.children[2]));
            std::vector<elem_t> gens;
            for (std::size_t i = 2; i < n.children.size(); ++i) gens.push_back(ring_element(R, n.children[i]));
            return FiniteModule::cyclic(ideal_generate(R, gens));
        }
        if (head == "free") {
            expect_arity(n, 3);
            const auto k = integer(n.children[2]);
            if (k < 1) throw Error(ErrorCode::InvalidStructure, n.where() + ": free rank must be at least 1");
            return FiniteModule::free(ring(n.children[1]), static_cast<std::size_t>(k));
        }
        if (head == "dsum") {
            if (n.children.size() < 2) arity_error(n, "at least 1");
            std::vector<FiniteModule> parts;
            for (std::size_t i = 1; i < n.children.size(); ++i) parts.push_back(module(n.children[i]));
            return FiniteModule::direct_sum(parts);
        }
        if (head == "prod") {
            auto v = value(n);
            if (!std::holds_alternative<FiniteModule>(v)) fail_resolve(n, "expected a module, got a ring product");
            return std::get<FiniteModule>(v);
        }
        if (head == "quot") {
            expect_arity(n, 3);
            const auto E = module(n.children[1]);
            return quotient_module(submodule(E, n.children[2])).module;
        }
        if (head == "sub") {
            if (n.children.size() < 2) arity_error(n, "at least 1");
            const auto E = module(n.children[1]);
            std::vector<elem_t> gens;
            for (std::size_t i = 2; i < n.children.size(); ++i) gens.push_back(module_element(E, n.children[i]));
            return submodule_as_module(submodule_generate(E, gens)).module;
        }
        if (head == "over") {
            expect_arity(n, 3);
            const auto& q = n.children[1];
            if (q.head() != "quot") fail_resolve(q, "over expects (quot R (ideal ...))");
            expect_arity(q, 3);
            const auto R = ring(q.children[1]);
            const auto I = ideal(R, q.children[2]);
            const auto E = module(n.children[2]);
            require_same_ring(R, E.ring());
            return restrict_to_quotient(E, quotient_ring(R, I), I);
        }
        if (head == "localize") {
            expect_arity(n, 3);
            const auto E = module(n.children[1]);
            const auto T = mult_set(n.children[2], &E.ring());
            const auto ml = localize_module(E, T);
            if (ml.is_trivial) throw Error(ErrorCode::Degenerate, n.where() + ": localization is the zero module");
            return ml.module;
        }
        throw Error(ErrorCode::SyntaxError,
                    n.where() + ": expected a module form (self, cyclic, free, dsum, prod, quot, sub, over, localize), got '" +
                        sexpr::print(n) + "'");
    }

    /// (ideal g...) with or without a leading ring, or a bare list of generators.
    Ideal ideal(const FiniteRing& R, const Node& n) {
        if (!n.is_list) fail_resolve(n, "expected (ideal g...)");
        std::size_t start = n.head() == "ideal" ? 1 : 0;
        std::vector<elem_t> gens;
        for (const auto& c : flatten(n, start)) gens.push_back(ring_element(R, c));
        return ideal_generate(R, gens);
    }

    Submodule submodule(const FiniteModule& E, const Node& n) {
        if (!n.is_list) fail_resolve(n, "expected (sub g...)");
        std::size_t start = n.head() == "sub" ? 1 : 0;
        std::vector<elem_t> gens;
        for (const auto& c : flatten(n, start)) gens.push_back(module_element(E, c));
        return submodule_generate(E, gens);
    }

    /// (mult R g...) or (mult g...) when the ring is known from context.
    MultiplicativeSet mult_set(const Node& n, const FiniteRing* context) {
        if (n.head() != "mult") fail_resolve(n, "expected (mult R {g...})");
        std::size_t start = 1;
        FiniteRing R;
        if (context && (n.children.size() < 2 || !is_ring_form(n.children[1]))) {
            R = *context;
        } else {
            if (n.children.size() < 2) arity_error(n, "at least 1");
            R = ring(n.children[1]);
            start = 2;
            if (context) require_same_ring(R, *context);
        }
        std::vector<elem_t> gens;
        for (const auto& c : flatten(n, start)) gens.push_back(ring_element(R, c));
        return saturate(R, gens);
    }

    elem_t ring_element(const FiniteRing& R, const Node& n) {
        const std::string name = n.is_atom() ? superscripts(n.atom) : sexpr::print(n);
        if (auto e = R.find(name)) return *e;
        if (n.is_atom()) {
            if (auto k = parse_integer(n.atom)) return R.from_integer(*k);
            if (!R.variables().empty()) {
                try {
                    std::vector<std::string> vars;
                    for (const auto& v : R.variables()) vars.push_back(v.first);
                    return evaluate_polynomial(R, parse_polynomial(name, vars, characteristic(R)));
                } catch (const Error&) {
                }
            }
        }
        fail_resolve(n, "no element '" + name + "' in " + R.descriptor());
    }

    elem_t module_element(const FiniteModule& E, const Node& n) {
        const std::string name = n.is_atom() ? n.atom : sexpr::print(n);
        if (auto e = E.find(name)) return *e;
        if (n.is_atom() && E.kind() == ModuleKind::self) return ring_element(E.ring(), n);
        fail_resolve(n, "no element '" + name + "' in " + E.descriptor());
    }

private:
    static std::string descriptor_of(const Value& v) {
        return std::visit([](const auto& x) { return x.descriptor(); }, v);
    }

    static FiniteRing as_ring(const Value& v, const Node& n) {
        if (!std::holds_alternative<FiniteRing>(v)) fail_resolve(n, "expected a ring, got a module");
        return std::get<FiniteRing>(v);
    }

    bool is_ring_form(const Node& n) const {
        if (n.is_atom()) {
            auto it = env_.find(n.atom);
            return it != env_.end() && std::holds_alternative<FiniteRing>(it->second);
        }
        const auto h = n.head();
        return h == "Z" || h == "polyquot" || h == "prod" || (h == "quot" && n.children.size() == 3 &&
                                                              n.children[2].head() == "ideal");
    }

    static std::int64_t characteristic(const FiniteRing& R) {
        std::int64_t k = 1;
        for (elem_t x = R.one(); x != 0; x = R.add(x, R.one())) ++k;
        return k;
    }

    static std::optional<std::int64_t> parse_integer(const std::string& s) {
        if (s.empty()) return std::nullopt;
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) return std::nullopt;
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') return std::nullopt;
        if (s.size() - i > 15) return std::nullopt;
        return std::stoll(s);
    }

    static std::int64_t integer(const Node& n) {
        if (n.is_atom())
            if (auto k = parse_integer(n.atom)) return *k;
        throw Error(ErrorCode::SyntaxError, n.where() + ": expected an integer, got '" + sexpr::print(n) + "'");
    }

    static std::string superscripts(std::string s) {
        for (const auto& [from, to] : {std::pair<std::string, std::string>{"²", "^2"}, {"³", "^3"}}) {
            std::size_t p;
            while ((p = s.find(from)) != std::string::npos) s.replace(p, from.size(), to);
        }
        return s;
    }

    static const std::vector<Node>& list_of(const Node& n) {
        if (!n.is_list) throw Error(ErrorCode::SyntaxError, n.where() + ": expected a list");
        return n.children;
    }

    static std::string atom_of(const Node& n) {
        if (!n.is_atom()) throw Error(ErrorCode::SyntaxError, n.where() + ": expected an atom");
        return n.atom;
    }

    /// Children from `start`, with a single {..} group spliced in.
    static std::vector<Node> flatten(const Node& n, std::size_t start) {
        std::vector<Node> out;
        for (std::size_t i = start; i < n.children.size(); ++i) {
            const auto& c = n.children[i];
            if (c.is_list && c.open == '{') out.insert(out.end(), c.children.begin(), c.children.end());
            else out.push_back(c);
        }
        return out;
    }

    static void expect_arity(const Node& n, std::size_t k) {
        if (n.children.size() != k) arity_error(n, std::to_string(k - 1));
    }

    [[noreturn]] static void arity_error(const Node& n, const std::string& expected) {
        throw Error(ErrorCode::SyntaxError, n.where() + ": '" + n.head() + "' expects " + expected + " argument(s), got " +
                                                std::to_string(n.children.empty() ? 0 : n.children.size() - 1));
    }

    [[noreturn]] static void fail_resolve(const Node& n, const std::string& msg) {
        throw Error(ErrorCode::ResolutionError, n.where() + ": " + msg);
    }

    static LocalizationSummary summarize_localization(const MultiplicativeSet& T, const RingLocalization& rl,
                                                      std::string localized) {
        LocalizationSummary s;
        s.ring = T.ring.descriptor();
        T.elements.for_each([&](elem_t t) { s.multiplicative_set.push_back(T.ring.name(t)); });
        rl.kernel.elements.for_each([&](elem_t k) { s.kernel.push_back(T.ring.name(k)); });
        s.order = rl.is_trivial ? 1 : rl.ring.order();
        s.trivial = rl.is_trivial;
        s.localized_descriptor = std::move(localized);
        return s;
    }

    InstanceBudget budget_;
    std::map<std::string, Value> env_;
};

/// Rebuilds a module from its descriptor.
inline FiniteModule module_from_descriptor(const std::string& descriptor) {
    Interpreter in;
    return in.module(sexpr::parse_one(descriptor));
}

inline FiniteRing ring_from_descriptor(const std::string& descriptor) {
    Interpreter in;
    return in.ring(sexpr::parse_one(descriptor));
}

/// Re-runs one property on the instance a failure descriptor names.
inline PropertyReport replay(const std::string& property_id, const std::string& descriptor,
                             const InstanceBudget& budget = {}) {
    auto E = module_from_descriptor(descriptor);
    return check_instance(property_id, Instance{descriptor, std::move(E), false}, budget);
}

} // namespace annmul
