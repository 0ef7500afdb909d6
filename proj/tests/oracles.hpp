#pragma once

// Brute-force reference computations used to cross-check the library.
// They touch only the raw add/mul/act tables and share no algorithms with it.

#include <algorithm>
#include <set>
#include <vector>

#include "annmul/finmod.hpp"

namespace oracle {

using annmul::elem_t;
using annmul::FiniteModule;
using annmul::FiniteRing;
using Set = std::set<elem_t>;

/// Smallest ideal containing `seed`: closure under addition and ring multiplication.
inline Set ideal_closure(const FiniteRing& R, Set seed) {
    seed.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<elem_t> cur(seed.begin(), seed.end());
        for (elem_t x : cur) {
            for (elem_t y : cur)
                if (seed.insert(R.add(x, y)).second) grew = true;
            for (elem_t r = 0; r < R.order(); ++r)
                if (seed.insert(R.mul(r, x)).second) grew = true;
        }
    }
    return seed;
}

/// Every ideal, found as joins of principal ideals until nothing new appears.
inline std::vector<Set> all_ideals(const FiniteRing& R) {
    std::set<Set> found;
    for (elem_t a = 0; a < R.order(); ++a) found.insert(ideal_closure(R, {a}));
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Set> cur(found.begin(), found.end());
        for (const auto& I : cur)
            for (const auto& J : cur) {
                Set u = I;
                u.insert(J.begin(), J.end());
                if (found.insert(ideal_closure(R, u)).second) grew = true;
            }
    }
    return {found.begin(), found.end()};
}

/// Additive closure of a set of module elements.
inline Set span(const FiniteModule& E, Set seed) {
    seed.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<elem_t> cur(seed.begin(), seed.end());
        for (elem_t x : cur)
            for (elem_t y : cur)
                if (seed.insert(E.add(x, y)).second) grew = true;
    }
    return seed;
}

inline Set ann_of_set(const FiniteModule& E, const Set& S) {
    Set out;
    for (elem_t a = 0; a < E.ring().order(); ++a)
        if (std::all_of(S.begin(), S.end(), [&](elem_t x) { return E.act(a, x) == 0; })) out.insert(a);
    return out;
}

inline Set ann_of_element(const FiniteModule& E, elem_t e) { return ann_of_set(E, {e}); }

/// IE as the span of all products a·x.
inline Set ideal_times_module(const FiniteModule& E, const Set& I) {
    Set prods;
    for (elem_t a : I)
        for (elem_t x = 0; x < E.order(); ++x) prods.insert(E.act(a, x));
    return span(E, prods);
}

/// Definition check: every ann(e) equals ann(IE) for some ideal I.
inline bool is_annihilator_multiplication(const FiniteModule& E) {
    std::vector<Set> anns;
    for (const auto& I : all_ideals(E.ring())) anns.push_back(ann_of_set(E, ideal_times_module(E, I)));
    for (elem_t e = 0; e < E.order(); ++e)
        if (std::find(anns.begin(), anns.end(), ann_of_element(E, e)) == anns.end()) return false;
    return true;
}

/// (V:E) = { a : aE ⊆ V }.
inline Set residual(const FiniteModule& E, const Set& V) {
    Set out;
    for (elem_t a = 0; a < E.ring().order(); ++a) {
        bool ok = true;
        for (elem_t x = 0; x < E.order() && ok; ++x) ok = V.count(E.act(a, x)) > 0;
        if (ok) out.insert(a);
    }
    return out;
}

/// Full product of a ring polynomial and a module polynomial, no truncation.
inline std::vector<elem_t> convolve(const FiniteModule& E, const std::vector<elem_t>& p, const std::vector<elem_t>& h) {
    std::vector<elem_t> out(p.size() + h.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) out[i + j] = E.add(out[i + j], E.act(p[i], h[j]));
    return out;
}

inline std::vector<elem_t> ring_convolve(const FiniteRing& R, const std::vector<elem_t>& p,
                                         const std::vector<elem_t>& q) {
    std::vector<elem_t> out(p.size() + q.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] = R.add(out[i + j], R.mul(p[i], q[j]));
    return out;
}

inline bool all_zero(const std::vector<elem_t>& v) {
    return std::all_of(v.begin(), v.end(), [](elem_t x) { return x == 0; });
}

/// All coefficient vectors of length D+1 over a carrier of size n.
inline std::vector<std::vector<elem_t>> all_polys(std::size_t n, std::size_t D) {
    std::vector<std::vector<elem_t>> out{{}};
    for (std::size_t k = 0; k <= D; ++k) {
        std::vector<std::vector<elem_t>> next;
        for (const auto& v : out)
            for (elem_t c = 0; c < n; ++c) {
                auto w = v;
                w.push_back(c);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

/// Second polynomial identity taken literally: q·p·h = 0 for every h of degree <= D
/// iff every coefficient of q lies in ∩ ann(a_i E). Returns the number of failing p.
inline std::size_t second_identity_failures(const FiniteModule& E, std::size_t D) {
    const auto& R = E.ring();
    const auto ps = all_polys(R.order(), D);
    const auto hs = all_polys(E.order(), D);
    std::size_t failures = 0;
    for (const auto& p : ps) {
        Set meet;
        for (elem_t a = 0; a < R.order(); ++a) meet.insert(a);
        for (elem_t c : p) {
            Set img;
            for (elem_t x = 0; x < E.order(); ++x) img.insert(E.act(c, x));
            const auto ann = ann_of_set(E, img);
            Set next;
            std::set_intersection(meet.begin(), meet.end(), ann.begin(), ann.end(), std::inserter(next, next.end()));
            meet = std::move(next);
        }
        for (const auto& q : ps) {
            const auto qp = ring_convolve(R, q, p);
            bool kills = true;
            for (const auto& h : hs) {
                if (!all_zero(convolve(E, qp, h))) {
                    kills = false;
                    break;
                }
            }
            const bool in_extended = std::all_of(q.begin(), q.end(), [&](elem_t c) { return meet.count(c) > 0; });
            if (kills != in_extended) {
                ++failures;
                break;
            }
        }
    }
    return failures;
}

} // namespace oracle
