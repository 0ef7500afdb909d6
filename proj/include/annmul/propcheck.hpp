#pragma once

/**
 * @file propcheck.hpp
 * @brief Executable property registry, corpus runs with non-vacuity accounting,
 *        and counterexample search for converse and necessity variants.
 */

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "annmul/analysis.hpp"
#include "annmul/localize.hpp"
#include "annmul/polymod.hpp"

namespace annmul {

enum class OutcomeKind { not_applicable, passed, failed, degenerate, capped };

struct Outcome {
    OutcomeKind kind = OutcomeKind::not_applicable;
    std::string detail;
    /// Observations recorded next to the main result, e.g. necessity counterexamples.
    std::vector<std::string> companion;
    std::size_t degenerate_subcases = 0;
};

struct Failure {
    std::string descriptor;
    std::string detail;
};

struct PropertyReport {
    std::string property_id;
    std::string description;
    std::size_t instances_tried = 0;
    std::size_t hypothesis_met = 0;
    std::vector<Failure> failures;
    std::size_t skipped_degenerate = 0;
    std::size_t skipped_cap = 0;
    std::size_t degenerate_subcases = 0;
    std::vector<Failure> companion;
    std::vector<std::string> notes;
    std::size_t gate_minimum = 1;
    double elapsed_ms = 0;

    bool gate_passed() const { return hypothesis_met >= gate_minimum; }
    bool passed() const { return failures.empty() && gate_passed(); }
};

struct RingFacts {
    bool pir_and_vn_regular = false;
    bool product_of_fields = false;
    bool reduced = false;
    std::string failure;
};

struct SuiteContext {
    InstanceBudget budget;
    std::vector<Analysis>* corpus = nullptr;
    std::map<std::string, std::vector<std::size_t>> by_ring;
    std::map<std::string, RingFacts> ring_facts;
    std::set<std::string> ring_failures_reported;
    std::size_t current = 0;

    void index_corpus() {
        by_ring.clear();
        if (!corpus) return;
        for (std::size_t i = 0; i < corpus->size(); ++i) by_ring[(*corpus)[i].ring().descriptor()].push_back(i);
    }
};

using PropertyFn = std::function<Outcome(Analysis&, SuiteContext&)>;

struct PropertySpec {
    std::string id;
    std::string description;
    std::size_t gate_minimum = 1;
    std::vector<std::string> notes;
    PropertyFn evaluate;
};

namespace detail {

inline Outcome na() { return {}; }
inline Outcome pass() { return Outcome{OutcomeKind::passed, {}, {}, 0}; }
inline Outcome fail(std::string why) { return Outcome{OutcomeKind::failed, std::move(why), {}, 0}; }
inline Outcome degenerate(std::string why) { return Outcome{OutcomeKind::degenerate, std::move(why), {}, 0}; }
inline Outcome capped(std::string why) { return Outcome{OutcomeKind::capped, std::move(why), {}, 0}; }

inline bool annmult_of(const FiniteModule& M, const Caps& caps) {
    return is_annihilator_multiplication(M, caps).yes();
}

/// Direct ann(IE) = ann(V) re-check, independent of the lattice bookkeeping.
inline bool witness_checks(const FiniteModule& E, const Ideal& I, const Ideal& target) {
    return annihilator(ideal_times(I, E)) == target;
}

// P1 ------------------------------------------------------------------------
inline Outcome p1(Analysis& a, SuiteContext&) {
    if (a.is_zero()) return degenerate("zero module");
    std::optional<bool> mult;
    try {
        mult = a.multiplication().yes();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
    }
    const bool vn = a.vn_regular().yes();
    const bool baer = a.baer().yes();
    const bool tf = is_yes(a.basic().torsion_free);
    const bool simple = is_yes(a.basic().simple);
    const bool hyp = mult.value_or(false) || vn || baer || tf || simple;
    if (!hyp) return mult ? na() : capped("submodule lattice above cap");
    if (vn && mult && !*mult) return fail("vn-regular but not multiplication");
    if (!a.annmult().yes()) {
        std::string which = mult.value_or(false) ? "multiplication" : vn ? "vn-regular" : baer ? "Baer" : tf ? "torsion-free" : "simple";
        return fail(which + " module that is not annihilator multiplication");
    }
    return pass();
}

// P2 ------------------------------------------------------------------------
inline Outcome p2(Analysis& a, SuiteContext&) {
    if (a.is_zero()) return degenerate("zero module");
    if (!a.annmult().yes()) return na();
    const auto& E = a.module();
    std::vector<Ideal> anns;
    try {
        for (const auto& V : a.submodules()) {
            auto s = annihilator(V);
            if (std::find(anns.begin(), anns.end(), s) == anns.end()) anns.push_back(std::move(s));
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
        anns = a.submodule_annihilators();
        anns.push_back(whole_ideal(a.ring()));
    }
    std::optional<std::vector<Ideal>> ideals;
    if (a.ring().order() <= a.caps().max_carrier) ideals = enumerate_ideals(a.ring(), a.caps());
    for (const auto& target : anns) {
        auto I = annihilator_witness(a.lattice(), a.ring(), target.elements, ideals ? &*ideals : nullptr);
        if (!I) return fail("ann(V) = " + ideal_to_string(target) + " is not ann(IE) for any ideal I");
        if (!witness_checks(E, *I, target))
            return fail("witness ideal " + ideal_to_string(*I) + " does not reproduce " + ideal_to_string(target));
    }
    return pass();
}

// PDIR ----------------------------------------------------------------------
inline Outcome pdir(Analysis& a, SuiteContext&) {
    const auto& E = a.module();
    if (E.kind() != ModuleKind::product) return na();
    if (a.is_zero()) return degenerate("zero module");
    bool parts_ok = true;
    std::string which;
    for (const auto& P : E.parts()) {
        if (P.order() == 1) return degenerate("zero component");
        if (!annmult_of(P, a.caps())) {
            parts_ok = false;
            which = P.descriptor();
            break;
        }
    }
    const bool whole = a.annmult().yes();
    if (whole != parts_ok)
        return fail(whole ? "product holds but component " + which + " fails"
                          : "all components hold but the product fails");
    return pass();
}

// PLOC ----------------------------------------------------------------------
inline Outcome ploc(Analysis& a, SuiteContext&) {
    if (a.is_zero()) return degenerate("zero module");
    if (!a.annmult().yes()) return na();
    const auto& R = a.ring();
    std::vector<MultiplicativeSet> sets;
    auto add = [&](MultiplicativeSet T) {
        for (const auto& S : sets)
            if (S.elements == T.elements) return;
        sets.push_back(std::move(T));
    };
    for (elem_t t = 0; t < R.order(); ++t) add(saturate(R, {t}));
    for (const auto& P : enumerate_ideals(R, a.caps()))
        if (P.is_proper() && is_prime_ideal(P)) add(prime_complement(P));
    Outcome out = pass();
    for (const auto& T : sets) {
        const auto rl = localize_ring(R, T);
        const auto ml = localize_module(a.module(), T, rl);
        if (ml.is_trivial) {
            ++out.degenerate_subcases;
            continue;
        }
        if (!annmult_of(ml.module, a.caps())) {
            std::string gens;
            T.elements.for_each([&](elem_t t) { gens += " " + R.name(t); });
            return fail("localization at {" + gens + " } is not annihilator multiplication");
        }
    }
    return out;
}

// PHOM ----------------------------------------------------------------------
struct HomCase {
    bool injective;
    bool surjective;
    bool kernel_prime;
    bool source_annmult;
    bool target_annmult;
};

/// Returns a failure description, or nothing; sets `hit` when a hypothesis applies.
inline std::optional<std::string> judge_hom(const HomCase& c, bool& hit, const std::string& label) {
    if (c.injective && c.target_annmult) {
        hit = true;
        if (!c.source_annmult) return "(i) fails for " + label;
    }
    if (c.surjective && c.kernel_prime && c.source_annmult) {
        hit = true;
        if (!c.target_annmult) return "(ii) fails for " + label;
    }
    return std::nullopt;
}

inline std::vector<std::size_t> hom_partners(Analysis& a, SuiteContext& ctx, bool require_equal_ann) {
    std::vector<std::size_t> out;
    if (!ctx.corpus) return out;
    const auto& group = ctx.by_ring[a.ring().descriptor()];
    auto pos = std::find(group.begin(), group.end(), ctx.current);
    if (pos == group.end()) return out;
    const std::size_t start = static_cast<std::size_t>(pos - group.begin());
    for (std::size_t k = 1; k < group.size() && out.size() < 3; ++k) {
        auto& b = (*ctx.corpus)[group[(start + k) % group.size()]];
        if (b.module().order() > 16 || b.is_zero()) continue;
        if (require_equal_ann != (b.annihilator_ideal() == a.annihilator_ideal())) continue;
        out.push_back(group[(start + k) % group.size()]);
    }
    return out;
}

inline Outcome phom(Analysis& a, SuiteContext& ctx) {
    if (a.is_zero()) return degenerate("zero module");
    const auto& E = a.module();
    const auto annE = a.annihilator_ideal();
    const bool e_ok = a.annmult().yes();
    bool hit = false;
    bool capped_any = false;
    try {
        for (const auto& V : a.submodules()) {
            if (!V.is_zero() && annihilator(V) == annE) {
                const auto S = submodule_as_module(V);
                const HomCase c{true, V.is_whole(), false, annmult_of(S.module, a.caps()), e_ok};
                if (auto f = judge_hom(c, hit, "inclusion of " + submodule_to_string(V))) return fail(*f);
            }
            if (V.is_proper()) {
                const auto Q = quotient_module(V);
                if (annihilator(Q.module) == annE) {
                    const HomCase c{V.is_zero(), true, is_prime_submodule(V) == Flag::yes, e_ok,
                                    annmult_of(Q.module, a.caps())};
                    if (auto f = judge_hom(c, hit, "projection onto E/" + submodule_to_string(V))) return fail(*f);
                }
            }
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
        capped_any = true;
    }
    Caps small = a.caps();
    small.max_homs = 4096;
    for (std::size_t idx : hom_partners(a, ctx, true)) {
        auto& b = (*ctx.corpus)[idx];
        const bool f_ok = b.annmult().yes();
        for (int dir = 0; dir < 2; ++dir) {
            const auto& S = dir == 0 ? E : b.module();
            const auto& T = dir == 0 ? b.module() : E;
            std::vector<ModuleHom> homs;
            try {
                homs = enumerate_homs(S, T, small);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::CapExceeded) throw;
                continue;
            }
            for (const auto& h : homs) {
                const auto K = h.kernel();
                const HomCase c{K.is_zero(), h.surjective(), K.is_proper() && is_prime_submodule(K) == Flag::yes,
                                dir == 0 ? e_ok : f_ok, dir == 0 ? f_ok : e_ok};
                if (auto f = judge_hom(c, hit, "a hom " + S.descriptor() + " -> " + T.descriptor())) return fail(*f);
            }
        }
    }
    if (hit) return pass();
    return capped_any ? capped("submodule lattice above cap") : na();
}

// PSUB ----------------------------------------------------------------------
inline Outcome psub(Analysis& a, SuiteContext&) {
    if (a.is_zero()) return degenerate("zero module");
    if (!a.annmult().yes()) return na();
    const auto annE = a.annihilator_ideal();
    const auto ideals = enumerate_ideals(a.ring(), a.caps());
    const auto whole = whole_submodule(a.module());
    bool hit = false;
    const std::vector<Submodule>* subs = nullptr;
    try {
        subs = &a.submodules();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
        return capped("submodule lattice above cap");
    }
    for (const auto& V : *subs) {
        const auto annV = annihilator(V);
        if (V.is_proper() && is_prime_submodule(V) == Flag::yes && annV == residual_ideal(V, whole)) {
            hit = true;
            if (!annmult_of(quotient_module(V).module, a.caps()))
                return fail("(i) E/V fails for V = " + submodule_to_string(V));
        }
        if (V.is_zero()) continue;
        const bool by_ann = annV == annE;
        const bool pure_essential =
            is_pure_submodule(V, ideals) == Flag::yes && is_essential_submodule(V) == Flag::yes;
        if (by_ann || pure_essential) {
            hit = true;
            if (!annmult_of(submodule_as_module(V).module, a.caps()))
                return fail(std::string(by_ann ? "(ii)" : "(iii)") + " V fails for V = " + submodule_to_string(V));
        }
    }
    return hit ? pass() : na();
}

// PDSUM ---------------------------------------------------------------------
inline Outcome pdsum(Analysis& a, SuiteContext&) {
    const auto& E = a.module();
    if (E.kind() != ModuleKind::direct_sum && E.kind() != ModuleKind::free) return na();
    if (a.is_zero()) return degenerate("zero module");
    bool equal = true;
    bool parts_ok = true;
    std::optional<Ideal> first;
    for (const auto& P : E.parts()) {
        if (P.order() == 1) return degenerate("zero summand");
        auto ann = annihilator(P);
        if (first && !(ann == *first)) equal = false;
        if (!first) first = ann;
        if (!annmult_of(P, a.caps())) parts_ok = false;
    }
    const bool whole = a.annmult().yes();
    if (!equal) {
        Outcome o = na();
        if (whole != parts_ok)
            o.companion.push_back(std::string(parts_ok ? "summands hold but the sum fails"
                                                       : "the sum holds but a summand fails") +
                                  " with unequal summand annihilators");
        return o;
    }
    if (whole != parts_ok)
        return fail(whole ? "sum holds but a summand fails" : "summands hold but the sum fails");
    return pass();
}

// P1ABS ---------------------------------------------------------------------
inline Outcome p1abs(Analysis& a, SuiteContext&) {
    if (a.is_zero()) return degenerate("zero module");
    const auto annE = a.annihilator_ideal();
    if (!annE.is_proper() || !is_one_absorbing_prime_ideal(annE)) return na();
    if (!a.annmult().yes()) return na();
    auto anns = a.submodule_annihilators();
    for (const auto& J : anns) {
        if (!(J == annE) && !is_prime_ideal(J))
            return fail("ann(V) = " + ideal_to_string(J) + " is neither ann(E) nor prime");
        if (!is_one_absorbing_prime_ideal(J))
            return fail("ann(V) = " + ideal_to_string(J) + " is not 1-absorbing prime");
    }
    anns.push_back(whole_ideal(a.ring()));
    for (std::size_t i = 0; i < anns.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!anns[i].elements.subset_of(anns[j].elements) && !anns[j].elements.subset_of(anns[i].elements))
                return fail("annihilators " + ideal_to_string(anns[i]) + " and " + ideal_to_string(anns[j]) +
                            " are incomparable");
    return pass();
}

// PCLASS --------------------------------------------------------------------
inline Outcome pclass(Analysis& a, SuiteContext&) {
    if (a.is_zero()) return degenerate("zero module");
    if (!a.annmult().yes()) return na();
    const auto& E = a.module();
    const auto annE = a.annihilator_ideal();
    bool hyp = true;
    for (elem_t e = 0; e < E.order() && hyp; ++e)
        if (annihilator_of_element(E, e) == annE) hyp = false;
    const auto zero = zero_submodule(E);
    const bool cp = is_classical_prime_submodule(zero) == Flag::yes;
    const bool c1 = is_classical_one_absorbing_prime_submodule(zero) == Flag::yes;
    if (!hyp) {
        Outcome o = na();
        if (cp != c1)
            o.companion.push_back(std::string("zero submodule is ") + (c1 ? "" : "not ") +
                                  "classical 1-absorbing prime and " + (cp ? "" : "not ") +
                                  "classical prime; some ann(e) equals ann(E)");
        return o;
    }
    if (cp != c1) return fail("zero submodule: classical prime " + std::string(cp ? "yes" : "no") +
                              ", classical 1-absorbing prime " + (c1 ? "yes" : "no"));
    return pass();
}

// PPOL ----------------------------------------------------------------------
inline Outcome ppol(Analysis& a, SuiteContext& ctx) {
    if (a.is_zero()) return degenerate("zero module");
    const std::size_t D = ctx.budget.degree_bound;
    try {
        if (!is_armendariz_upto(a.module(), D, a.caps()).yes()) return na();
        const auto lemma = check_lempol(a.module(), D, a.caps());
        if (!lemma.holds()) return fail(lemma.failures.front());
        const auto poly = check_polynomial_module(a.module(), D, a.caps());
        const bool base = a.annmult().yes();
        if (base != poly.polynomial_side)
            return fail(base ? "E holds but a bounded ann(e(X)) is not an extended candidate"
                             : "E fails but every bounded ann(e(X)) is an extended candidate");
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CapExceeded) return capped(e.what());
        throw;
    }
    return pass();
}

// PTOR ----------------------------------------------------------------------
inline Outcome ptor(Analysis& a, SuiteContext&) {
    if (a.is_zero()) return degenerate("zero module");
    const bool tf = is_yes(a.basic().torsion_free);
    const bool rhs = a.annmult().yes() && is_yes(a.basic().faithful) && classify_ring(a.ring(), a.caps()).is_field;
    if (tf != rhs)
        return fail(tf ? "torsion-free but not (annihilator multiplication, faithful, over a field)"
                       : "annihilator multiplication and faithful over a field but not torsion-free");
    return tf ? pass() : na();
}

// PMULT ---------------------------------------------------------------------
inline Outcome pmult(Analysis& a, SuiteContext&) {
    if (a.is_zero()) return degenerate("zero module");
    try {
        if (!a.comultiplication().yes()) return na();
        if (a.multiplication().yes() != a.annmult().yes())
            return fail("comultiplication module where multiplication and annihilator multiplication differ");
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CapExceeded) return capped(e.what());
        throw;
    }
    return pass();
}

// PINJ ----------------------------------------------------------------------
inline Outcome pinj(Analysis& a, SuiteContext&) {
    if (a.is_zero()) return degenerate("zero module");
    const auto& E = a.module();
    if (is_second_submodule(whole_submodule(E)) != Flag::yes || !a.annmult().yes()) return na();
    try {
        if (!is_prime_module(E).yes()) return fail("second annihilator multiplication module that is not prime");
        const auto annE = a.annihilator_ideal();
        const auto Eq = over_annihilator_quotient(E);
        if (!is_injective_baer_criterion(Eq, a.caps()).yes()) return fail("E is not injective over A/ann(E)");
        std::optional<QuotientRing> Q;
        if (!annE.is_zero()) Q = quotient_ring(a.ring(), annE);
        const auto ideals = enumerate_ideals(a.ring(), a.caps());
        for (const auto& V : a.submodules()) {
            if (V.is_zero()) continue;
            const auto S = submodule_as_module(V);
            if (!annmult_of(S.module, a.caps()))
                return fail("nonzero submodule " + submodule_to_string(V) + " is not annihilator multiplication");
            const auto Vq = Q ? restrict_to_quotient(S.module, *Q, annE) : S.module;
            if (!is_injective_baer_criterion(Vq, a.caps()).yes())
                return fail("submodule " + submodule_to_string(V) + " is not injective over A/ann(E)");
            const bool pure = is_pure_submodule(V, ideals) == Flag::yes;
            const bool second = is_second_submodule(V) == Flag::yes;
            if (pure != second)
                return fail("submodule " + submodule_to_string(V) + (pure ? " is pure but not second"
                                                                         : " is second but not pure"));
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CapExceeded) return capped(e.what());
        throw;
    }
    return pass();
}

// PVON ----------------------------------------------------------------------
inline RingFacts compute_ring_facts(const FiniteRing& R, const Caps& caps) {
    RingFacts f;
    const auto cls = classify_ring(R, caps);
    f.pir_and_vn_regular = cls.is_principal_ideal_ring && cls.is_vn_regular;
    f.reduced = cls.is_reduced;
    try {
        const auto fd = field_decompose(R, caps);
        bool fields = decomposition_reconstructs(R, fd);
        for (const auto& F : fd.factors) fields = fields && classify_ring(F, caps).is_field;
        f.product_of_fields = fields;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSemisimple) throw;
    }
    if (f.pir_and_vn_regular != f.product_of_fields) {
        f.failure = "(ii) and (iii) disagree on " + R.descriptor();
        return f;
    }
    if (f.product_of_fields) {
        for (const auto& I : enumerate_ideals(R, caps)) {
            const auto W = tvon_witness_module(R, I);
            if (!is_annihilator_multiplication(W, caps).yes()) {
                f.failure = "witness module " + W.descriptor() + " is not annihilator multiplication";
                return f;
            }
        }
    }
    return f;
}

inline Outcome pvon(Analysis& a, SuiteContext& ctx) {
    const auto& key = a.ring().descriptor();
    auto it = ctx.ring_facts.find(key);
    if (it == ctx.ring_facts.end()) it = ctx.ring_facts.emplace(key, compute_ring_facts(a.ring(), a.caps())).first;
    const auto& f = it->second;
    if (!f.failure.empty() && ctx.ring_failures_reported.insert(key).second) return fail(f.failure);
    if (!f.product_of_fields) return na();
    if (a.is_zero()) return degenerate("zero module");
    if (is_yes(a.basic().faithful) && !a.annmult().yes())
        return fail("faithful module over a product of fields that is not annihilator multiplication");
    return pass();
}

// PASS ----------------------------------------------------------------------
inline Outcome pass_prop(Analysis& a, SuiteContext&) {
    if (a.is_zero()) return degenerate("zero module");
    if (!a.annmult().yes()) return na();
    const bool non_torsion = a.torsion().is_non_torsion;
    const bool faithful = is_yes(a.basic().faithful);
    if (!non_torsion && !faithful) return na();
    const auto mine = ass(a.module());
    const auto ring_side = ass_ring(a.ring());
    if (non_torsion && !same_primes(mine, ring_side)) return fail("Ass(E) differs from Ass(A)");
    for (const auto& P : mine.primes)
        if (std::find(ring_side.primes.begin(), ring_side.primes.end(), P) == ring_side.primes.end())
            return fail("associated prime " + ideal_to_string(P) + " of E is not associated to A");
    return pass();
}

} // namespace detail

inline const std::vector<PropertySpec>& property_registry() {
    static const std::vector<PropertySpec> registry = {
        {"P1", "multiplication, vn-regular, Baer, torsion-free and simple modules are annihilator multiplication",
         10, {}, detail::p1},
        {"P2", "in an annihilator multiplication module every ann(V) equals ann(IE) for some ideal I", 1, {},
         detail::p2},
        {"PDIR", "a product module over a product ring is annihilator multiplication iff every component is", 10,
         {}, detail::pdir},
        {"PLOC", "localizations of annihilator multiplication modules are annihilator multiplication", 1,
         {"zero localizations are counted as degenerate subcases"}, detail::ploc},
        {"PHOM", "injective homs reflect and surjective homs with prime kernel preserve the property, when ann(E) = ann(E')",
         1, {"tested on inclusions, quotient maps and all homs to three same-ring partners"}, detail::phom},
        {"PSUB", "quotients by prime V with ann(V) = (V:E), and submodules with ann(V) = ann(E) or pure essential V, inherit the property",
         10, {}, detail::psub},
        {"PDSUM", "a direct sum with equal summand annihilators is annihilator multiplication iff every summand is", 1,
         {"companion entries list unequal-annihilator sums where the equivalence breaks"}, detail::pdsum},
        {"P1ABS", "if ann(E) is 1-absorbing prime, every nonzero ann(V) is ann(E) or prime, and the ann(V) form a chain",
         1, {"restricted to nonzero V, since ann(0) is the whole ring"}, detail::p1abs},
        {"PCLASS", "if no ann(e) equals ann(E), the zero submodule is classical prime iff classical 1-absorbing prime",
         1, {"companion entries list hypothesis-violating instances where the two notions differ"}, detail::pclass},
        {"PPOL", "for Armendariz E, the polynomial annihilator identities hold and E[X] passes iff E does", 1,
         {"verified up to the degree bound only"}, detail::ppol},
        {"PTOR", "torsion-free iff annihilator multiplication, faithful and over a field", 1, {}, detail::ptor},
        {"PMULT", "for comultiplication modules, multiplication iff annihilator multiplication", 1, {}, detail::pmult},
        {"PINJ", "second annihilator multiplication modules are prime, their submodules inherit the property and are injective over A/ann(E), and pure equals second",
         1, {}, detail::pinj},
        {"PVON", "PIR and vn-regular iff a finite product of fields, whose faithful modules are annihilator multiplication",
         1, {"faithful-module direction is bounded evidence over the corpus"}, detail::pvon},
        {"PASS", "for non-torsion annihilator multiplication modules Ass(E) = Ass(A); for faithful ones Ass(E) is contained in Ass(A)",
         10, {}, detail::pass_prop},
    };
    return registry;
}

inline const PropertySpec& find_property(const std::string& id) {
    for (const auto& p : property_registry())
        if (p.id == id) return p;
    throw Error(ErrorCode::UnknownProperty, id);
}

inline std::vector<Analysis> analyse(const std::vector<Instance>& corpus, const Caps& caps) {
    std::vector<Analysis> out;
    out.reserve(corpus.size());
    for (const auto& inst : corpus) out.emplace_back(inst, caps);
    return out;
}

inline PropertyReport run_property(const std::string& id, std::vector<Analysis>& corpus, SuiteContext& ctx) {
    const auto& spec = find_property(id);
    ctx.corpus = &corpus;
    if (ctx.by_ring.empty()) ctx.index_corpus();
    PropertyReport rep;
    rep.property_id = spec.id;
    rep.description = spec.description;
    rep.gate_minimum = spec.gate_minimum;
    rep.notes = spec.notes;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        ctx.current = i;
        auto& a = corpus[i];
        ++rep.instances_tried;
        Outcome o;
        try {
            o = spec.evaluate(a, ctx);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::CapExceeded) throw;
            o = detail::capped(e.what());
        }
        rep.degenerate_subcases += o.degenerate_subcases;
        for (auto& c : o.companion) rep.companion.push_back(Failure{a.descriptor(), std::move(c)});
        switch (o.kind) {
        case OutcomeKind::not_applicable: break;
        case OutcomeKind::passed: ++rep.hypothesis_met; break;
        case OutcomeKind::failed: {
            ++rep.hypothesis_met;
            // Replay on a fresh memo to make sure the failure is not a caching artefact.
            Analysis fresh(a.instance(), a.caps());
            SuiteContext again = ctx;
            again.ring_failures_reported.clear();
            again.ring_facts.clear();
            const auto re = spec.evaluate(fresh, again);
            std::string detail = o.detail;
            if (re.kind != OutcomeKind::failed) detail += " (did not reproduce on replay)";
            rep.failures.push_back(Failure{a.descriptor(), std::move(detail)});
            break;
        }
        case OutcomeKind::degenerate: ++rep.skipped_degenerate; break;
        case OutcomeKind::capped: ++rep.skipped_cap; break;
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Runs one property on a single instance.
inline PropertyReport check_instance(const std::string& id, const Instance& inst, const InstanceBudget& budget) {
    std::vector<Analysis> corpus{Analysis(inst, budget.caps)};
    SuiteContext ctx;
    ctx.budget = budget;
    return run_property(id, corpus, ctx);
}

struct SuiteReport {
    InstanceBudget budget;
    std::vector<std::string> corpus;
    std::vector<PropertyReport> properties;
    double elapsed_ms = 0;

    std::size_t total_failures() const {
        std::size_t n = 0;
        for (const auto& p : properties) n += p.failures.size();
        return n;
    }
    bool gates_passed() const {
        return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.gate_passed(); });
    }
    bool passed() const { return total_failures() == 0 && gates_passed(); }
};

inline SuiteReport run_suite(const InstanceBudget& budget, const std::vector<std::string>& only = {}) {
    for (const auto& id : only) find_property(id);
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.budget = budget;
    const auto instances = generate_instances(budget);
    for (const auto& i : instances) rep.corpus.push_back(i.descriptor);
    auto corpus = analyse(instances, budget.caps);
    SuiteContext ctx;
    ctx.budget = budget;
    ctx.corpus = &corpus;
    ctx.index_corpus();
    for (const auto& spec : property_registry()) {
        if (!only.empty() && std::find(only.begin(), only.end(), spec.id) == only.end()) continue;
        rep.properties.push_back(run_property(spec.id, corpus, ctx));
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

struct Violation {
    std::string descriptor;
    std::string detail;
    std::size_t ring_order = 0;
    std::size_t module_order = 0;

    std::size_t carrier_product() const { return ring_order * module_order; }
};

struct SearchResult {
    std::string variant;
    std::string description;
    std::size_t instances_scanned = 0;
    std::size_t skipped_cap = 0;
    std::vector<Violation> violations;
    std::optional<Violation> minimal;
};

struct SearchVariant {
    std::string id;
    std::string description;
};

inline const std::vector<SearchVariant>& search_variants() {
    static const std::vector<SearchVariant> v = {
        {"annmult-implies-mult", "annihilator multiplication implies multiplication"},
        {"c1abs-implies-classical-prime", "classical 1-absorbing prime submodules are classical prime"},
        {"prime-implies-maximal-vnr", "over vn-regular rings every prime ideal is maximal"},
        {"pdsum-nec", "direct sums with unequal summand annihilators still satisfy the summand equivalence"},
        {"phom-without-ann", "the hom transfer statements without the ann(E) = ann(E') hypothesis"},
    };
    return v;
}

namespace detail {

/// Violations for one instance; empty when the variant holds there.
inline std::vector<std::string> search_one(const std::string& variant, Analysis& a, SuiteContext& ctx) {
    std::vector<std::string> out;
    if (a.is_zero()) return out;
    const auto& E = a.module();
    if (variant == "annmult-implies-mult") {
        if (a.annmult().yes() && a.multiplication().no()) out.push_back(a.multiplication().counterexample->description);
    } else if (variant == "c1abs-implies-classical-prime") {
        for (const auto& V : a.submodules())
            if (is_classical_one_absorbing_prime_submodule(V) == Flag::yes &&
                is_classical_prime_submodule(V) == Flag::no)
                out.push_back("V = " + submodule_to_string(V));
    } else if (variant == "prime-implies-maximal-vnr") {
        if (classify_ring(a.ring(), a.caps()).is_vn_regular)
            for (const auto& P : enumerate_ideals(a.ring(), a.caps()))
                if (P.is_proper() && is_prime_ideal(P) && !is_maximal_ideal(P))
                    out.push_back("prime ideal " + ideal_to_string(P) + " is not maximal");
    } else if (variant == "pdsum-nec") {
        if (E.kind() == ModuleKind::direct_sum || E.kind() == ModuleKind::free) {
            bool equal = true, parts_ok = true;
            std::optional<Ideal> first;
            for (const auto& P : E.parts()) {
                auto ann = annihilator(P);
                if (first && !(ann == *first)) equal = false;
                if (!first) first = ann;
                parts_ok = parts_ok && annmult_of(P, a.caps());
            }
            if (!equal && parts_ok != a.annmult().yes())
                out.push_back(parts_ok ? "summands hold, sum fails" : "sum holds, a summand fails");
        }
    } else if (variant == "phom-without-ann") {
        const bool e_ok = a.annmult().yes();
        for (const auto& V : a.submodules()) {
            if (!V.is_zero() && !(annihilator(V) == a.annihilator_ideal()) && e_ok &&
                !annmult_of(submodule_as_module(V).module, a.caps()))
                out.push_back("inclusion of " + submodule_to_string(V) + " into a passing E, V fails");
            if (V.is_proper() && is_prime_submodule(V) == Flag::yes && e_ok) {
                const auto Q = quotient_module(V);
                if (!(annihilator(Q.module) == a.annihilator_ideal()) && !annmult_of(Q.module, a.caps()))
                    out.push_back("projection onto E/" + submodule_to_string(V) + " with prime kernel, E/V fails");
            }
        }
        Caps small = a.caps();
        small.max_homs = 4096;
        for (std::size_t idx : hom_partners(a, ctx, false)) {
            auto& b = (*ctx.corpus)[idx];
            std::vector<ModuleHom> homs;
            try {
                homs = enumerate_homs(E, b.module(), small);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::CapExceeded) throw;
                continue;
            }
            for (const auto& h : homs) {
                const auto K = h.kernel();
                if (K.is_zero() && b.annmult().yes() && !e_ok)
                    out.push_back("injective hom into " + b.descriptor() + " which passes, E fails");
                if (h.surjective() && K.is_proper() && is_prime_submodule(K) == Flag::yes && e_ok &&
                    !b.annmult().yes())
                    out.push_back("surjective hom with prime kernel onto " + b.descriptor() + " which fails");
            }
        }
    } else {
        throw Error(ErrorCode::UnknownProperty, variant);
    }
    return out;
}

} // namespace detail

/// First violation with the smallest |A|·|E| among those found in the corpus.
inline SearchResult search_counterexample(const std::string& variant, const InstanceBudget& budget) {
    const auto& vs = search_variants();
    auto it = std::find_if(vs.begin(), vs.end(), [&](const auto& v) { return v.id == variant; });
    if (it == vs.end()) throw Error(ErrorCode::UnknownProperty, variant);
    SearchResult res;
    res.variant = variant;
    res.description = it->description;
    const auto instances = generate_instances(budget);
    auto corpus = analyse(instances, budget.caps);
    SuiteContext ctx;
    ctx.budget = budget;
    ctx.corpus = &corpus;
    ctx.index_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        ctx.current = i;
        ++res.instances_scanned;
        std::vector<std::string> found;
        try {
            found = detail::search_one(variant, corpus[i], ctx);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::CapExceeded) throw;
            ++res.skipped_cap;
            continue;
        }
        if (found.empty()) continue;
        Violation v{corpus[i].descriptor(), found.front(), corpus[i].ring().order(), corpus[i].module().order()};
        if (!res.minimal || v.carrier_product() < res.minimal->carrier_product()) res.minimal = v;
        res.violations.push_back(std::move(v));
    }
    return res;
}

} // namespace annmul
