#pragma once

/**
 * @file classify.hpp
 * @brief Module-level classifiers: annihilator multiplication, multiplication,
 *        comultiplication, regularity, Baer, prime, injectivity and associated primes.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annmul/finmod.hpp"
#include "annmul/homs.hpp"

namespace annmul {

struct Counterexample {
    /// "element", "submodule", "hom" or "ideal".
    std::string kind;
    std::vector<elem_t> elements;
    std::string description;
    /// Ideals relevant to the failure, e.g. the candidate annihilators.
    std::vector<Ideal> context;
    /// For hom counterexamples: the map table, source element -> target element.
    std::vector<elem_t> map;
};

struct WitnessEntry {
    elem_t element = 0;
    Ideal annihilator;
    Ideal ideal;
};

struct Verdict {
    Flag holds = Flag::degenerate;
    std::vector<WitnessEntry> witness;
    std::optional<Counterexample> counterexample;

    bool yes() const noexcept { return holds == Flag::yes; }
    bool no() const noexcept { return holds == Flag::no; }
};

inline Verdict degenerate_verdict(std::string why) {
    Verdict v;
    v.counterexample = Counterexample{"degenerate", {}, std::move(why), {}, {}};
    return v;
}

// ---------------------------------------------------------------------------
// Annihilator multiplication
// ---------------------------------------------------------------------------

/// aE as an element set.
inline Subset scalar_image(const FiniteModule& E, elem_t a) {
    Subset s(E.order());
    for (elem_t e = 0; e < E.order(); ++e) s.insert(E.act(a, e));
    return s;
}

struct AnnihilatorLattice {
    /// ann(aE) indexed by ring element.
    std::vector<Subset> scalar_annihilators;
    /// Intersection closure of the ann(aE), ordered by size then element list.
    std::vector<Ideal> closure;

    bool contains(const Subset& s) const {
        return std::any_of(closure.begin(), closure.end(), [&](const Ideal& c) { return c.elements == s; });
    }
};

inline AnnihilatorLattice annihilator_lattice(const FiniteModule& E) {
    const auto& R = E.ring();
    AnnihilatorLattice L;
    L.scalar_annihilators.reserve(R.order());
    std::vector<Subset> found;
    auto known = [&](const Subset& s) { return std::find(found.begin(), found.end(), s) != found.end(); };
    for (elem_t a = 0; a < R.order(); ++a) {
        auto s = annihilator(E, scalar_image(E, a)).elements;
        L.scalar_annihilators.push_back(s);
        if (!known(s)) found.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            auto s = found[i] & found[j];
            if (!known(s)) found.push_back(std::move(s));
        }
    for (auto& s : found) L.closure.push_back(ideal_from_set(R, std::move(s)));
    std::sort(L.closure.begin(), L.closure.end());
    return L;
}

/// ann(IE) = ∩_{a ∈ I} ann(aE).
inline Subset annihilator_of_ideal_times(const AnnihilatorLattice& L, const Ideal& I) {
    Subset out = Subset::full(I.ring.order());
    I.elements.for_each([&](elem_t a) { out &= L.scalar_annihilators[a]; });
    return out;
}

/// Smallest ideal I with ann(IE) = target, ties broken by element list.
/// Rings above the enumeration cap fall back to the largest such ideal,
/// { a : ann(aE) ⊇ target }, which needs no enumeration.
inline std::optional<Ideal> annihilator_witness(const AnnihilatorLattice& L, const FiniteRing& R, const Subset& target,
                                                const std::vector<Ideal>* ideals) {
    if (ideals) {
        for (const auto& I : *ideals)
            if (annihilator_of_ideal_times(L, I) == target) return I;
        return std::nullopt;
    }
    Subset big(R.order());
    for (elem_t a = 0; a < R.order(); ++a)
        if (target.subset_of(L.scalar_annihilators[a])) big.insert(a);
    auto I = ideal_from_set(R, std::move(big));
    if (annihilator_of_ideal_times(L, I) == target) return I;
    return std::nullopt;
}

/// Decides whether every ann(e) has the form ann(IE).
///
/// Candidates are the intersection closure of { ann(aE) }, since
/// ann((Σ Aa_i)E) = ∩ ann(a_i E). Holds iff every ann(e) is a candidate.
inline Verdict is_annihilator_multiplication(const FiniteModule& E, const Caps& caps = {}) {
    if (E.order() == 1) return degenerate_verdict("zero module");
    const auto& R = E.ring();
    const auto L = annihilator_lattice(E);
    std::optional<std::vector<Ideal>> ideals;
    if (R.order() <= caps.max_carrier) ideals = enumerate_ideals(R, caps);
    Verdict v;
    v.holds = Flag::yes;
    std::map<Subset, Ideal> cache;
    for (elem_t e = 0; e < E.order(); ++e) {
        auto ann_e = annihilator_of_element(E, e);
        if (!L.contains(ann_e.elements)) {
            v.holds = Flag::no;
            v.witness.clear();
            v.counterexample = Counterexample{"element", {e},
                                              "ann(" + E.name(e) + ") = " + ideal_to_string(ann_e) +
                                                  " is not an intersection of annihilators ann(aE)",
                                              L.closure, {}};
            return v;
        }
        auto it = cache.find(ann_e.elements);
        if (it == cache.end()) {
            auto I = annihilator_witness(L, R, ann_e.elements, ideals ? &*ideals : nullptr);
            if (!I) throw Error(ErrorCode::InvalidStructure, "candidate annihilator without a witness ideal");
            it = cache.emplace(ann_e.elements, *I).first;
        }
        v.witness.push_back(WitnessEntry{e, std::move(ann_e), it->second});
    }
    return v;
}

/// The witness table collapsed to distinct annihilators, in ideal order.
inline std::vector<std::pair<Ideal, Ideal>> witness_by_annihilator(const Verdict& v) {
    std::vector<std::pair<Ideal, Ideal>> out;
    for (const auto& w : v.witness)
        if (std::none_of(out.begin(), out.end(), [&](const auto& p) { return p.first == w.annihilator; }))
            out.emplace_back(w.annihilator, w.ideal);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// ---------------------------------------------------------------------------
// Multiplication and comultiplication
// ---------------------------------------------------------------------------

inline Verdict is_multiplication(const FiniteModule& E, const Caps& caps = {}) {
    if (E.order() == 1) return degenerate_verdict("zero module");
    const auto whole = whole_submodule(E);
    Verdict v;
    v.holds = Flag::yes;
    for (const auto& V : enumerate_submodules(E, caps)) {
        const auto colon = residual_ideal(V, whole);
        const auto IE = ideal_times(colon, whole);
        if (!(IE.elements == V.elements)) {
            v.holds = Flag::no;
            v.counterexample = Counterexample{"submodule", V.elements.elements(),
                                              "(V:E)E = " + submodule_to_string(IE) + " differs from V = " +
                                                  submodule_to_string(V),
                                              {colon}, {}};
            return v;
        }
    }
    return v;
}

inline Verdict is_comultiplication(const FiniteModule& E, const Caps& caps = {}) {
    if (E.order() == 1) return degenerate_verdict("zero module");
    Verdict v;
    v.holds = Flag::yes;
    for (const auto& V : enumerate_submodules(E, caps)) {
        const auto annV = annihilator(V);
        const auto back = annihilator_in_module(E, annV);
        if (!(back.elements == V.elements)) {
            v.holds = Flag::no;
            v.counterexample = Counterexample{"submodule", V.elements.elements(),
                                              "ann_E(ann(V)) = " + submodule_to_string(back) + " differs from V = " +
                                                  submodule_to_string(V),
                                              {annV}, {}};
            return v;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Regularity and Baer modules
// ---------------------------------------------------------------------------

struct RegularityElements {
    Subset weak_idempotents;
    Subset e_vn_regular;
};

inline RegularityElements module_regularity_elements(const FiniteModule& E) {
    const auto& R = E.ring();
    const auto annE = annihilator(E);
    RegularityElements r{Subset(R.order()), Subset(R.order())};
    for (elem_t a = 0; a < R.order(); ++a) {
        const elem_t a2 = R.mul(a, a);
        if (annE.contains(R.sub(a, a2))) r.weak_idempotents.insert(a);
        if (scalar_image(E, a) == scalar_image(E, a2)) r.e_vn_regular.insert(a);
    }
    return r;
}

/// Every e has some a with Ae = aE = a²E.
inline Verdict is_vn_regular_module(const FiniteModule& E) {
    if (E.order() == 1) return degenerate_verdict("zero module");
    const auto& R = E.ring();
    std::vector<Subset> images(R.order());
    for (elem_t a = 0; a < R.order(); ++a) images[a] = scalar_image(E, a);
    Verdict v;
    v.holds = Flag::yes;
    for (elem_t e = 0; e < E.order(); ++e) {
        const auto Ae = submodule_generate(E, {e}).elements;
        bool found = false;
        for (elem_t a = 0; a < R.order() && !found; ++a)
            found = images[a] == Ae && images[R.mul(a, a)] == Ae;
        if (!found) {
            v.holds = Flag::no;
            v.counterexample = Counterexample{"element", {e}, "no a with Ae = aE = a^2E for e = " + E.name(e), {}, {}};
            return v;
        }
    }
    return v;
}

/// Every ann(e)E equals aE for some weak idempotent a.
inline Verdict is_baer_module(const FiniteModule& E) {
    if (E.order() == 1) return degenerate_verdict("zero module");
    const auto& R = E.ring();
    const auto weak = module_regularity_elements(E).weak_idempotents.elements();
    std::vector<Subset> images(R.order());
    for (elem_t a : weak) images[a] = scalar_image(E, a);
    const auto whole = whole_submodule(E);
    Verdict v;
    v.holds = Flag::yes;
    for (elem_t e = 0; e < E.order(); ++e) {
        const auto target = ideal_times(annihilator_of_element(E, e), whole).elements;
        const bool found = std::any_of(weak.begin(), weak.end(), [&](elem_t a) { return images[a] == target; });
        if (!found) {
            v.holds = Flag::no;
            v.counterexample = Counterexample{
                "element", {e}, "ann(" + E.name(e) + ")E is not aE for any weak idempotent a", {}, {}};
            return v;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Prime modules
// ---------------------------------------------------------------------------

/// Zero submodule prime; cross-checked against ann(V) = ann(E) for nonzero V.
/// Cyclic submodules suffice for the second form, since every nonzero V contains one.
inline Verdict is_prime_module(const FiniteModule& E) {
    if (E.order() == 1) throw Error(ErrorCode::Degenerate, "prime module test on the zero module");
    const bool by_zero = is_prime_submodule(zero_submodule(E)) == Flag::yes;
    const auto annE = annihilator(E);
    std::optional<elem_t> bad;
    for (elem_t e = 1; e < E.order() && !bad; ++e)
        if (!(annihilator_of_element(E, e) == annE)) bad = e;
    if (by_zero != !bad.has_value())
        throw Error(ErrorCode::InvalidStructure, "prime module characterizations disagree on " + E.descriptor());
    Verdict v;
    v.holds = to_flag(by_zero);
    if (bad)
        v.counterexample = Counterexample{"submodule", submodule_generate(E, {*bad}).elements.elements(),
                                          "ann(A" + E.name(*bad) + ") = " +
                                              ideal_to_string(annihilator_of_element(E, *bad)) + " differs from ann(E) = " +
                                              ideal_to_string(annE),
                                          {annE}, {}};
    return v;
}

// ---------------------------------------------------------------------------
// Injectivity through the Baer criterion
// ---------------------------------------------------------------------------

/// Every hom from an ideal I into E is i -> ix for some x in E.
inline Verdict is_injective_baer_criterion(const FiniteModule& E, const Caps& caps = {}) {
    if (E.order() == 1) return degenerate_verdict("zero module");
    const auto& R = E.ring();
    const auto self = FiniteModule::self(R);
    Verdict v;
    v.holds = Flag::yes;
    for (const auto& I : enumerate_ideals(R, caps)) {
        const auto sub = submodule_as_module(Submodule{self, I.elements, I.generators});
        std::vector<std::vector<elem_t>> extendable;
        for (elem_t x = 0; x < E.order(); ++x) {
            std::vector<elem_t> m(sub.inclusion.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = E.act(sub.inclusion[k], x);
            extendable.push_back(std::move(m));
        }
        std::sort(extendable.begin(), extendable.end());
        for (const auto& f : enumerate_homs(sub.module, E, caps)) {
            if (std::binary_search(extendable.begin(), extendable.end(), f.map)) continue;
            std::string table;
            for (std::size_t k = 0; k < f.map.size(); ++k)
                table += (k ? ", " : "") + R.name(sub.inclusion[k]) + " -> " + E.name(f.map[k]);
            v.holds = Flag::no;
            v.counterexample = Counterexample{"hom", sub.inclusion,
                                              "hom from ideal " + ideal_to_string(I) + " does not extend: " + table, {I},
                                              f.map};
            return v;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Associated primes
// ---------------------------------------------------------------------------

struct AssSet {
    std::vector<Ideal> primes;
    /// witnesses[i] is the first nonzero element whose annihilator is primes[i].
    std::vector<elem_t> witnesses;
};

inline AssSet ass(const FiniteModule& E) {
    std::vector<std::pair<Ideal, elem_t>> found;
    for (elem_t e = 1; e < E.order(); ++e) {
        auto P = annihilator_of_element(E, e);
        if (!is_prime_ideal(P)) continue;
        if (std::none_of(found.begin(), found.end(), [&](const auto& p) { return p.first == P; }))
            found.emplace_back(std::move(P), e);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    AssSet s;
    for (auto& [P, e] : found) {
        s.primes.push_back(std::move(P));
        s.witnesses.push_back(e);
    }
    return s;
}

inline AssSet ass_ring(const FiniteRing& R) { return ass(FiniteModule::self(R)); }

inline bool same_primes(const AssSet& a, const AssSet& b) {
    if (a.primes.size() != b.primes.size()) return false;
    for (std::size_t i = 0; i < a.primes.size(); ++i)
        if (!(a.primes[i] == b.primes[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Witness constructions
// ---------------------------------------------------------------------------

/// R ⊕ R/I, faithful through its first summand.
inline FiniteModule tvon_witness_module(const FiniteRing& R, const Ideal& I) {
    require_same_ring(R, I.ring);
    if (I.is_whole()) return FiniteModule::self(R);
    const FiniteModule parts[2] = {FiniteModule::self(R), FiniteModule::cyclic(I)};
    return FiniteModule::direct_sum(parts);
}

/// E viewed over A/ann(E). The zero module has no such ring.
inline FiniteModule over_annihilator_quotient(const FiniteModule& E) {
    const auto annE = annihilator(E);
    if (annE.is_whole()) throw Error(ErrorCode::Degenerate, "zero module has no faithful quotient ring");
    if (annE.is_zero()) return E;
    const auto Q = quotient_ring(E.ring(), annE);
    return restrict_to_quotient(E, Q, annE);
}

} // namespace annmul
