#pragma once

/**
 * @file localize.hpp
 * @brief Localization of finite rings and modules at multiplicative sets.
 *
 * For a finite ring, inverting T collapses to the quotient by
 * K = { a : ta = 0 for some t in T }; the same holds for modules.
 */

#include <optional>
#include <vector>

#include "annmul/finmod.hpp"

namespace annmul {

struct MultiplicativeSet {
    FiniteRing ring;
    Subset elements;

    bool contains(elem_t a) const noexcept { return elements.contains(a); }
};

/// Smallest multiplicatively closed set containing gens and 1.
inline MultiplicativeSet saturate(const FiniteRing& R, const std::vector<elem_t>& gens) {
    Subset s(R.order());
    std::vector<elem_t> frontier{R.one()};
    s.insert(R.one());
    while (!frontier.empty()) {
        const elem_t x = frontier.back();
        frontier.pop_back();
        for (elem_t g : gens) {
            const elem_t y = R.mul(x, g);
            if (!s.contains(y)) {
                s.insert(y);
                frontier.push_back(y);
            }
        }
    }
    return MultiplicativeSet{R, std::move(s)};
}

/// A \ P for a prime ideal P.
inline MultiplicativeSet prime_complement(const Ideal& P) {
    if (!is_prime_ideal(P)) throw Error(ErrorCode::InvalidStructure, "complement of a non-prime ideal");
    Subset s(P.ring.order());
    for (elem_t a = 0; a < P.ring.order(); ++a)
        if (!P.contains(a)) s.insert(a);
    return MultiplicativeSet{P.ring, std::move(s)};
}

struct RingLocalization {
    /// Invalid when the localization is the zero ring.
    FiniteRing ring;
    std::vector<elem_t> canonical_map;
    Ideal kernel;
    bool is_trivial = false;
};

struct ModuleLocalization {
    /// Invalid when the localization is the zero module or the ring collapses.
    FiniteModule module;
    std::vector<elem_t> canonical_map;
    Submodule kernel;
    bool is_trivial = false;
};

inline RingLocalization localize_ring(const FiniteRing& R, const MultiplicativeSet& T) {
    require_same_ring(R, T.ring);
    Subset k(R.order());
    for (elem_t a = 0; a < R.order(); ++a) {
        bool killed = false;
        T.elements.for_each([&](elem_t t) {
            if (R.mul(t, a) == 0) killed = true;
        });
        if (killed) k.insert(a);
    }
    RingLocalization out{FiniteRing{}, {}, ideal_from_set(R, std::move(k)), false};
    if (out.kernel.is_whole()) {
        out.is_trivial = true;
        out.canonical_map.assign(R.order(), 0);
        return out;
    }
    if (out.kernel.is_zero()) {
        out.ring = R;
        out.canonical_map.resize(R.order());
        for (elem_t a = 0; a < R.order(); ++a) out.canonical_map[a] = a;
    } else {
        auto q = quotient_ring(R, out.kernel);
        out.ring = std::move(q.ring);
        out.canonical_map = std::move(q.projection);
    }
    T.elements.for_each([&](elem_t t) {
        if (!is_unit(out.ring, out.canonical_map[t]))
            throw Error(ErrorCode::InvalidStructure, "localization left " + R.name(t) + " non-invertible");
    });
    return out;
}

/// T⁻¹E as E/K_E over T⁻¹A, where K_E = { e : te = 0 for some t in T }.
inline ModuleLocalization localize_module(const FiniteModule& E, const MultiplicativeSet& T,
                                          const RingLocalization& ring_loc) {
    const auto& R = E.ring();
    require_same_ring(R, T.ring);
    Subset k(E.order());
    for (elem_t e = 0; e < E.order(); ++e) {
        bool killed = false;
        T.elements.for_each([&](elem_t t) {
            if (E.act(t, e) == 0) killed = true;
        });
        if (killed) k.insert(e);
    }
    ModuleLocalization out{FiniteModule{}, {}, submodule_from_set(E, std::move(k)), false};
    if (ring_loc.is_trivial || out.kernel.is_whole()) {
        out.is_trivial = true;
        out.canonical_map.assign(E.order(), 0);
        return out;
    }
    const auto q = quotient_module(out.kernel);
    const auto& S = ring_loc.ring;
    // Representative of each localized scalar in A.
    std::vector<elem_t> rep(S.order(), static_cast<elem_t>(-1));
    for (elem_t a = 0; a < R.order(); ++a)
        if (rep[ring_loc.canonical_map[a]] == static_cast<elem_t>(-1)) rep[ring_loc.canonical_map[a]] = a;
    FiniteModule::Tables t;
    t.ring = S;
    t.order = q.module.order();
    t.add.resize(t.order * t.order);
    for (elem_t x = 0; x < t.order; ++x)
        for (elem_t y = 0; y < t.order; ++y) t.add[x * t.order + y] = q.module.add(x, y);
    t.act.resize(S.order() * t.order);
    for (elem_t s = 0; s < S.order(); ++s)
        for (elem_t x = 0; x < t.order; ++x) t.act[s * t.order + x] = q.module.act(rep[s], x);
    t.names.resize(t.order);
    for (elem_t x = 0; x < t.order; ++x) t.names[x] = q.module.name(x);
    std::string tgens;
    for (elem_t g : T.elements.elements()) tgens += " " + R.name(g);
    t.descriptor = "(localize " + E.descriptor() + " (mult" + tgens + "))";
    // from_tables re-verifies the module axioms, which guards well-definedness.
    out.module = FiniteModule::from_tables(std::move(t));
    out.canonical_map = q.projection;
    T.elements.for_each([&](elem_t tt) {
        const elem_t s = ring_loc.canonical_map[tt];
        Subset image(out.module.order());
        for (elem_t x = 0; x < out.module.order(); ++x) image.insert(out.module.act(s, x));
        if (image.size() != out.module.order())
            throw Error(ErrorCode::InvalidStructure, R.name(tt) + " does not act invertibly after localization");
    });
    return out;
}

inline ModuleLocalization localize_module(const FiniteModule& E, const MultiplicativeSet& T) {
    return localize_module(E, T, localize_ring(E.ring(), T));
}

} // namespace annmul
