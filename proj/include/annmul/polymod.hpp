#pragma once

/**
 * @file polymod.hpp
 * @brief Bounded-degree polynomials over A and E, Armendariz checks and the
 *        polynomial annihilator identities up to a degree bound.
 *
 * A polynomial of degree at most D is a coefficient vector of length D+1, lowest
 * degree first. Sets of ring polynomials are stored as a Subset over the mixed-radix
 * index  Σ c_k |A|^k.
 */

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "annmul/classify.hpp"

namespace annmul {

struct BoundedPoly {
    std::vector<elem_t> coefficients;
    std::size_t bound = 0;

    /// -1 for the zero polynomial.
    int degree() const {
        for (std::size_t k = coefficients.size(); k-- > 0;)
            if (coefficients[k] != 0) return static_cast<int>(k);
        return -1;
    }
    bool is_zero() const { return degree() < 0; }
    friend bool operator==(const BoundedPoly&, const BoundedPoly&) = default;
};

inline BoundedPoly make_poly(std::vector<elem_t> coefficients, std::size_t bound) {
    if (coefficients.size() > bound + 1) {
        for (std::size_t k = bound + 1; k < coefficients.size(); ++k)
            if (coefficients[k] != 0) throw Error(ErrorCode::DegreeOverflow, "coefficient beyond the degree bound");
    }
    coefficients.resize(bound + 1, 0);
    return BoundedPoly{std::move(coefficients), bound};
}

template <class Names>
std::string poly_to_string(const BoundedPoly& p, const Names& name) {
    std::string s = "[";
    for (std::size_t k = 0; k < p.coefficients.size(); ++k) s += (k ? " " : "") + name(p.coefficients[k]);
    return s + "]";
}

/// p(X)·h(X) with p over A and h over E; the product must fit in `bound`.
inline BoundedPoly poly_mul_action(const FiniteModule& E, const BoundedPoly& p, const BoundedPoly& h, std::size_t bound) {
    const int dp = p.degree(), dh = h.degree();
    if (dp >= 0 && dh >= 0 && static_cast<std::size_t>(dp + dh) > bound)
        throw Error(ErrorCode::DegreeOverflow,
                    "product degree " + std::to_string(dp + dh) + " exceeds bound " + std::to_string(bound));
    BoundedPoly out{std::vector<elem_t>(bound + 1, 0), bound};
    for (int i = 0; i <= dp; ++i)
        for (int j = 0; j <= dh; ++j) {
            auto& c = out.coefficients[i + j];
            c = E.add(c, E.act(p.coefficients[i], h.coefficients[j]));
        }
    return out;
}

inline BoundedPoly poly_mul_action(const FiniteModule& E, const BoundedPoly& p, const BoundedPoly& h) {
    return poly_mul_action(E, p, h, p.bound + h.bound);
}

inline BoundedPoly ring_poly_mul(const FiniteRing& R, const BoundedPoly& p, const BoundedPoly& q, std::size_t bound) {
    const int dp = p.degree(), dq = q.degree();
    if (dp >= 0 && dq >= 0 && static_cast<std::size_t>(dp + dq) > bound)
        throw Error(ErrorCode::DegreeOverflow, "product degree exceeds bound");
    BoundedPoly out{std::vector<elem_t>(bound + 1, 0), bound};
    for (int i = 0; i <= dp; ++i)
        for (int j = 0; j <= dq; ++j) {
            auto& c = out.coefficients[i + j];
            c = R.add(c, R.mul(p.coefficients[i], q.coefficients[j]));
        }
    return out;
}

/// Mixed-radix indexing of polynomials with D+1 coefficients from a carrier of size `base`.
struct PolyCodec {
    std::size_t base = 0;
    std::size_t bound = 0;
    std::size_t count = 0;

    PolyCodec(std::size_t b, std::size_t D) : base(b), bound(D), count(1) {
        for (std::size_t k = 0; k <= D; ++k) count *= b;
    }
    BoundedPoly decode(std::size_t idx) const {
        BoundedPoly p{std::vector<elem_t>(bound + 1), bound};
        for (std::size_t k = 0; k <= bound; ++k) {
            p.coefficients[k] = static_cast<elem_t>(idx % base);
            idx /= base;
        }
        return p;
    }
    std::size_t encode(const BoundedPoly& p) const {
        std::size_t idx = 0;
        for (std::size_t k = bound + 1; k-- > 0;) idx = idx * base + p.coefficients[k];
        return idx;
    }
};

inline void check_poly_space(const FiniteModule& E, std::size_t D, const Caps& caps) {
    const double space = std::pow(static_cast<double>(E.ring().order()), static_cast<double>(D + 1)) *
                         std::pow(static_cast<double>(E.order()), static_cast<double>(D + 1));
    if (space > static_cast<double>(caps.max_poly_space))
        throw Error(ErrorCode::CapExceeded, "polynomial search space exceeds cap " + std::to_string(caps.max_poly_space));
}

namespace detail {

/// Calls visit(f) for every ring polynomial f of degree <= D with f·e = 0.
/// Coefficient k of f·e only involves a_0..a_k, so each constraint is checked
/// as soon as its last coefficient is assigned. Stops early when visit returns false.
template <class Visit>
bool for_each_annihilating(const FiniteModule& E, const BoundedPoly& e, std::size_t D, Visit&& visit) {
    const auto& R = E.ring();
    std::vector<elem_t> a(D + 1, 0);
    auto coefficient = [&](std::size_t k) {
        elem_t c = 0;
        for (std::size_t i = 0; i <= std::min(k, D); ++i) {
            const std::size_t j = k - i;
            if (j < e.coefficients.size()) c = E.add(c, E.act(a[i], e.coefficients[j]));
        }
        return c;
    };
    const std::size_t top = D + e.coefficients.size() - 1;
    bool go_on = true;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (!go_on) return;
        if (k > D) {
            for (std::size_t m = D + 1; m <= top; ++m)
                if (coefficient(m) != 0) return;
            go_on = visit(BoundedPoly{a, D});
            return;
        }
        for (elem_t x = 0; x < R.order() && go_on; ++x) {
            a[k] = x;
            if (coefficient(k) == 0) self(self, k + 1);
        }
        a[k] = 0;
    };
    rec(rec, 0);
    return go_on;
}

} // namespace detail

/// { q : deg q <= D, q·e = 0 } as a set of polynomial indices over A.
inline Subset bounded_annihilator_set(const FiniteModule& E, const BoundedPoly& e, std::size_t D) {
    const PolyCodec codec(E.ring().order(), D);
    Subset out(codec.count);
    detail::for_each_annihilating(E, e, D, [&](const BoundedPoly& f) {
        out.insert(static_cast<elem_t>(codec.encode(f)));
        return true;
    });
    return out;
}

inline std::vector<BoundedPoly> bounded_poly_annihilator(const FiniteModule& E, const BoundedPoly& e, std::size_t D,
                                                         const Caps& caps = {}) {
    check_poly_space(E, D, caps);
    std::vector<BoundedPoly> out;
    detail::for_each_annihilating(E, e, D, [&](const BoundedPoly& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

/// J[X] restricted to degree <= D.
inline Subset extended_ideal_set(const Ideal& J, std::size_t D) {
    const PolyCodec codec(J.ring.order(), D);
    Subset out(codec.count);
    for (std::size_t idx = 0; idx < codec.count; ++idx) {
        std::size_t rest = idx;
        bool in = true;
        for (std::size_t k = 0; k <= D && in; ++k) {
            in = J.contains(static_cast<elem_t>(rest % codec.base));
            rest /= codec.base;
        }
        if (in) out.insert(static_cast<elem_t>(idx));
    }
    return out;
}

/// f·e = 0 forces a_i e_j = 0 for all i, j, for f and e of degree <= D.
inline Verdict is_armendariz_upto(const FiniteModule& E, std::size_t D, const Caps& caps = {}) {
    check_poly_space(E, D, caps);
    const PolyCodec mcodec(E.order(), D);
    Verdict v;
    v.holds = Flag::yes;
    for (std::size_t idx = 0; idx < mcodec.count; ++idx) {
        const auto e = mcodec.decode(idx);
        std::optional<BoundedPoly> bad;
        detail::for_each_annihilating(E, e, D, [&](const BoundedPoly& f) {
            for (elem_t a : f.coefficients)
                for (elem_t c : e.coefficients)
                    if (E.act(a, c) != 0) {
                        bad = f;
                        return false;
                    }
            return true;
        });
        if (bad) {
            v.holds = Flag::no;
            const auto& R = E.ring();
            v.counterexample = Counterexample{
                "polynomials", e.coefficients,
                "f = " + poly_to_string(*bad, [&](elem_t a) { return R.name(a); }) +
                    " kills e = " + poly_to_string(e, [&](elem_t x) { return E.name(x); }) +
                    " but some coefficient product is nonzero",
                {}, bad->coefficients};
            return v;
        }
    }
    return v;
}

struct PolyLemmaReport {
    std::size_t bound = 0;
    std::size_t checked_i = 0;
    std::size_t checked_ii = 0;
    std::vector<std::string> failures;

    bool holds() const { return failures.empty(); }
};

/// Memoized bounded annihilators of module polynomials, keyed by codec index.
class AnnihilatorCache {
public:
    AnnihilatorCache(const FiniteModule& E, std::size_t D) : E_(E), D_(D), codec_(E.order(), D), table_(codec_.count) {}

    const Subset& get(const BoundedPoly& e) {
        auto& slot = table_[codec_.encode(e)];
        if (!slot) slot = bounded_annihilator_set(E_, e, D_);
        return *slot;
    }
    const PolyCodec& codec() const { return codec_; }

private:
    FiniteModule E_;
    std::size_t D_;
    PolyCodec codec_;
    std::vector<std::optional<Subset>> table_;
};

/// Verifies, for polynomials of degree <= D,
///   (i)  ann(e(X)) = [∩ ann(e_i)][X]
///   (ii) ann(p(X)E[X]) = [∩ ann(a_i E)][X].
/// For (ii), q·p·h = 0 for all h is linear in h, so constant h already decide it.
inline PolyLemmaReport check_lempol(const FiniteModule& E, std::size_t D, const Caps& caps = {}) {
    if (!is_armendariz_upto(E, D, caps).yes())
        throw Error(ErrorCode::HypothesisFailed, E.descriptor() + " is not Armendariz up to degree " + std::to_string(D));
    const auto& R = E.ring();
    PolyLemmaReport rep;
    rep.bound = D;
    AnnihilatorCache cache(E, D);
    const PolyCodec rcodec(R.order(), D);
    auto rname = [&](elem_t a) { return R.name(a); };
    auto mname = [&](elem_t x) { return E.name(x); };

    for (std::size_t idx = 0; idx < cache.codec().count; ++idx) {
        const auto e = cache.codec().decode(idx);
        Subset meet = Subset::full(R.order());
        for (elem_t c : e.coefficients) meet &= annihilator_of_element(E, c).elements;
        const auto rhs = extended_ideal_set(ideal_from_set(R, meet), D);
        ++rep.checked_i;
        if (!(cache.get(e) == rhs)) rep.failures.push_back("(i) fails at e = " + poly_to_string(e, mname));
    }

    for (std::size_t idx = 0; idx < rcodec.count; ++idx) {
        const auto p = rcodec.decode(idx);
        Subset lhs = Subset::full(rcodec.count);
        for (elem_t x = 0; x < E.order(); ++x) {
            BoundedPoly pe{std::vector<elem_t>(D + 1), D};
            for (std::size_t k = 0; k <= D; ++k) pe.coefficients[k] = E.act(p.coefficients[k], x);
            lhs &= cache.get(pe);
        }
        Subset meet = Subset::full(R.order());
        for (elem_t a : p.coefficients) meet &= annihilator(E, scalar_image(E, a)).elements;
        const auto rhs = extended_ideal_set(ideal_from_set(R, meet), D);
        ++rep.checked_ii;
        if (!(lhs == rhs)) rep.failures.push_back("(ii) fails at p = " + poly_to_string(p, rname));
    }
    return rep;
}

struct PolyModuleCheck {
    /// The E[X]-side condition found no degree-bounded counterexample.
    bool polynomial_side = true;
    std::optional<BoundedPoly> counterexample;
    std::size_t checked = 0;
};

/// Necessary condition for E[X] to be annihilator multiplication, up to degree D:
/// every bounded ann(e(X)) equals J[X] for some J = ann(IE).
inline PolyModuleCheck check_polynomial_module(const FiniteModule& E, std::size_t D, const Caps& caps = {}) {
    check_poly_space(E, D, caps);
    const auto L = annihilator_lattice(E);
    std::vector<Subset> extended;
    for (const auto& J : L.closure) extended.push_back(extended_ideal_set(J, D));
    AnnihilatorCache cache(E, D);
    PolyModuleCheck out;
    for (std::size_t idx = 0; idx < cache.codec().count; ++idx) {
        const auto e = cache.codec().decode(idx);
        const auto& s = cache.get(e);
        ++out.checked;
        if (std::find(extended.begin(), extended.end(), s) == extended.end()) {
            out.polynomial_side = false;
            out.counterexample = e;
            return out;
        }
    }
    return out;
}

} // namespace annmul
