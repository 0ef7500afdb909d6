#pragma once

/**
 * @file polyquot.hpp
 * @brief Quotients F_p[x] / I and F_p[x, y] / I realized as finite rings.
 *
 * Finiteness is certified from the generator list: each indeterminate must have
 * some nonzero generator involving that indeterminate alone. With f_x and f_y the
 * gcds of those univariate generators, the quotient factors through the finite
 * algebra B = F_p[x]/(f_x) ⊗ F_p[y]/(f_y), and I/B is the F_p-span of
 * {monomial * generator}. The ring is then B modulo that subspace, computed by
 * row reduction. Monomial ideals with pure powers always qualify.
 */

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "annmul/finring.hpp"

namespace annmul {

/// Exponent vector for at most two indeterminates.
using Exponents = std::array<unsigned, 2>;

/// Sparse polynomial over F_p in at most two indeterminates.
struct Polynomial {
    std::map<Exponents, std::int64_t> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

namespace detail {

inline std::int64_t mod_p(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t result = 1;
    std::int64_t base = mod_p(a, p);
    std::int64_t e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void add_term(Polynomial& poly, Exponents e, std::int64_t c, std::int64_t p) {
    c = mod_p(c, p);
    if (c == 0) return;
    auto& slot = poly.terms[e];
    slot = mod_p(slot + c, p);
    if (slot == 0) poly.terms.erase(e);
}

using Dense = std::vector<std::int64_t>; // univariate, lowest degree first

inline void trim(Dense& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Dense poly_mod(Dense a, const Dense& b, std::int64_t p) {
    trim(a);
    const std::int64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::int64_t factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod_p(a[shift + i] - factor * b[i], p);
        trim(a);
    }
    return a;
}

inline Dense poly_gcd(Dense a, Dense b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::int64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

} // namespace detail

/// Canonical text form: terms by ascending total degree, "2*x^2*y" style monomials.
inline std::string polynomial_to_string(const Polynomial& poly, const std::vector<std::string>& vars) {
    if (poly.is_zero()) return "0";
    std::vector<std::pair<Exponents, std::int64_t>> ordered(poly.terms.begin(), poly.terms.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const unsigned da = a.first[0] + a.first[1];
        const unsigned db = b.first[0] + b.first[1];
        if (da != db) return da < db;
        return a.first > b.first; // x before y at equal degree
    });
    std::string out;
    for (const auto& [e, c] : ordered) {
        if (!out.empty()) out += '+';
        std::string mono;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += std::to_string(c) + "*" + mono;
    }
    return out;
}

/// Parses "x^2+2*x*y-1", "xy", "3x" and similar over the given indeterminates.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars, std::int64_t p) {
    Polynomial poly;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) -> Polynomial {
        throw Error(ErrorCode::SyntaxError, "bad polynomial '" + std::string(text) + "': " + why);
    };
    auto read_int = [&]() {
        std::int64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000'000) fail("integer too large");
            ++i;
        }
        return v;
    };
    if (text.empty()) return fail("empty");
    while (i < text.size()) {
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            return fail("expected + or -");
        }
        std::int64_t coeff = 1;
        bool saw_factor = false;
        Exponents e{0, 0};
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = read_int();
            saw_factor = true;
        }
        while (i < text.size() && text[i] != '+' && text[i] != '-') {
            if (text[i] == '*') {
                ++i;
                continue;
            }
            std::size_t best = vars.size();
            std::size_t best_len = 0;
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (text.substr(i, vars[v].size()) == vars[v] && vars[v].size() > best_len) {
                    best = v;
                    best_len = vars[v].size();
                }
            if (best == vars.size()) return fail("unknown symbol at position " + std::to_string(i));
            i += best_len;
            unsigned power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    return fail("missing exponent");
                power = static_cast<unsigned>(read_int());
            }
            e[best] += power;
            saw_factor = true;
        }
        if (!saw_factor) return fail("empty term");
        detail::add_term(poly, e, sign * coeff, p);
    }
    return poly;
}

/// F_p[vars] / (gens) as a finite ring. Throws InvalidModulus, InfiniteQuotient or Degenerate.
inline FiniteRing polynomial_quotient(std::int64_t p, const std::vector<std::string>& vars,
                                      const std::vector<Polynomial>& gens, std::size_t max_order = 4096) {
    using detail::mod_p;
    if (!detail::is_prime(p)) throw Error(ErrorCode::InvalidModulus, "coefficients must form a prime field, got " + std::to_string(p));
    if (vars.empty() || vars.size() > 2)
        throw Error(ErrorCode::InvalidStructure, "polyquot supports one or two indeterminates");
    if (vars.size() == 2 && vars[0] == vars[1]) throw Error(ErrorCode::InvalidStructure, "duplicate indeterminate");
    const std::size_t nv = vars.size();

    // Univariate moduli f_v from generators that involve v alone.
    std::array<detail::Dense, 2> modulus;
    std::array<bool, 2> have{false, false};
    for (std::size_t v = 0; v < nv; ++v) {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            bool pure = true;
            for (const auto& [e, c] : g.terms)
                for (std::size_t w = 0; w < nv; ++w)
                    if (w != v && e[w] != 0) pure = false;
            if (!pure) continue;
            detail::Dense dense;
            for (const auto& [e, c] : g.terms) {
                if (dense.size() <= e[v]) dense.resize(e[v] + 1, 0);
                dense[e[v]] = c;
            }
            modulus[v] = have[v] ? detail::poly_gcd(modulus[v], dense, p) : detail::poly_gcd(dense, {}, p);
            have[v] = true;
        }
        if (!have[v])
            throw Error(ErrorCode::InfiniteQuotient,
                        "no generator in " + vars[v] + " alone; the quotient is infinite or not certifiably finite");
    }
    std::array<std::size_t, 2> deg{1, 1};
    for (std::size_t v = 0; v < nv; ++v) {
        if (modulus[v].size() <= 1) throw Error(ErrorCode::Degenerate, "the ideal is the whole ring");
        deg[v] = modulus[v].size() - 1;
    }
    const std::size_t dim_b = deg[0] * deg[1];

    // Basis of B: x^i y^j, i < deg[0], j < deg[1], ordered by total degree then x-power descending.
    std::vector<Exponents> basis;
    for (unsigned i = 0; i < deg[0]; ++i)
        for (unsigned j = 0; j < deg[1]; ++j) basis.push_back({i, j});
    std::stable_sort(basis.begin(), basis.end(), [](const Exponents& a, const Exponents& b) {
        if (a[0] + a[1] != b[0] + b[1]) return a[0] + a[1] < b[0] + b[1];
        return a > b;
    });
    std::map<Exponents, std::size_t> column;
    for (std::size_t k = 0; k < basis.size(); ++k) column[basis[k]] = k;

    // v^k reduced modulo f_v.
    auto reduce_power = [&](std::size_t v, unsigned k) {
        detail::Dense mono(k + 1, 0);
        mono[k] = 1;
        auto r = detail::poly_mod(mono, modulus[v], p);
        r.resize(deg[v], 0);
        return r;
    };
    using Vec = std::vector<std::int64_t>;
    auto embed = [&](const Polynomial& poly) {
        Vec out(dim_b, 0);
        for (const auto& [e, c] : poly.terms) {
            const auto rx = reduce_power(0, e[0]);
            const auto ry = nv == 2 ? reduce_power(1, e[1]) : detail::Dense{1};
            for (unsigned i = 0; i < rx.size(); ++i)
                for (unsigned j = 0; j < ry.size(); ++j) {
                    const std::int64_t coef = c * rx[i] % p * ry[j] % p;
                    if (coef) out[column.at({i, j})] = mod_p(out[column.at({i, j})] + coef, p);
                }
        }
        return out;
    };
    auto to_poly = [&](const Exponents& e) {
        Polynomial m;
        m.terms[e] = 1;
        return m;
    };
    // Product of basis monomials inside B.
    std::vector<std::vector<Vec>> mono_product(dim_b, std::vector<Vec>(dim_b));
    for (std::size_t a = 0; a < dim_b; ++a)
        for (std::size_t b = 0; b < dim_b; ++b)
            mono_product[a][b] = embed(to_poly({basis[a][0] + basis[b][0], basis[a][1] + basis[b][1]}));

    auto multiply = [&](const Vec& u, const Vec& w) {
        Vec out(dim_b, 0);
        for (std::size_t a = 0; a < dim_b; ++a) {
            if (!u[a]) continue;
            for (std::size_t b = 0; b < dim_b; ++b) {
                if (!w[b]) continue;
                const std::int64_t c = u[a] * w[b] % p;
                const auto& prod = mono_product[a][b];
                for (std::size_t k = 0; k < dim_b; ++k)
                    if (prod[k]) out[k] = (out[k] + c * prod[k]) % p;
            }
        }
        return out;
    };

    // Spanning set of the ideal inside B, then reduced row echelon with pivots on the highest columns.
    std::vector<Vec> rows;
    for (const auto& g : gens) {
        const Vec eg = embed(g);
        for (std::size_t a = 0; a < dim_b; ++a) {
            Vec unit(dim_b, 0);
            unit[a] = 1;
            rows.push_back(multiply(unit, eg));
        }
    }
    std::vector<std::size_t> pivots;
    std::vector<Vec> echelon;
    for (std::size_t col = dim_b; col-- > 0;) {
        std::size_t found = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                found = r;
                break;
            }
        if (found == rows.size()) continue;
        Vec pivot_row = rows[found];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(found));
        const std::int64_t inv = detail::inv_mod(pivot_row[col], p);
        for (auto& c : pivot_row) c = c * inv % p;
        for (auto& r : rows)
            if (r[col]) {
                const std::int64_t f = r[col];
                for (std::size_t k = 0; k < dim_b; ++k) r[k] = mod_p(r[k] - f * pivot_row[k], p);
            }
        for (auto& r : echelon)
            if (r[col]) {
                const std::int64_t f = r[col];
                for (std::size_t k = 0; k < dim_b; ++k) r[k] = mod_p(r[k] - f * pivot_row[k], p);
            }
        echelon.push_back(std::move(pivot_row));
        pivots.push_back(col);
    }
    auto normal_form = [&](Vec v) {
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            const std::int64_t f = v[pivots[r]];
            if (!f) continue;
            for (std::size_t k = 0; k < dim_b; ++k) v[k] = mod_p(v[k] - f * echelon[r][k], p);
        }
        return v;
    };
    std::vector<std::size_t> free_cols;
    for (std::size_t k = 0; k < dim_b; ++k)
        if (std::find(pivots.begin(), pivots.end(), k) == pivots.end()) free_cols.push_back(k);
    const std::size_t d = free_cols.size();
    if (d == 0) throw Error(ErrorCode::Degenerate, "the ideal is the whole ring");
    std::size_t n = 1;
    for (std::size_t k = 0; k < d; ++k) {
        n *= static_cast<std::size_t>(p);
        if (n > max_order) throw Error(ErrorCode::CapExceeded, "polynomial quotient order exceeds " + std::to_string(max_order));
    }

    // Element index = sum of coefficient * p^k over the free (standard) monomials.
    std::vector<Vec> elements(n, Vec(dim_b, 0));
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t rest = x;
        for (std::size_t k = 0; k < d; ++k) {
            elements[x][free_cols[k]] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(p));
            rest /= static_cast<std::size_t>(p);
        }
    }
    auto index_of = [&](const Vec& v) {
        std::size_t x = 0;
        for (std::size_t k = d; k-- > 0;) x = x * static_cast<std::size_t>(p) + static_cast<std::size_t>(v[free_cols[k]]);
        return static_cast<elem_t>(x);
    };

    auto data = std::make_shared<detail::RingData>();
    data->n = n;
    data->add.resize(n * n);
    data->mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec s(dim_b);
            for (std::size_t k = 0; k < dim_b; ++k) s[k] = (elements[a][k] + elements[b][k]) % p;
            data->add[a * n + b] = index_of(s);
            data->mul[a * n + b] = index_of(normal_form(multiply(elements[a], elements[b])));
        }
    data->one = index_of(normal_form(embed(to_poly({0, 0}))));
    std::vector<std::string> var_names(vars.begin(), vars.end());
    data->names.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        Polynomial poly;
        for (std::size_t k = 0; k < dim_b; ++k)
            if (elements[x][k]) poly.terms[basis[k]] = elements[x][k];
        data->names[x] = polynomial_to_string(poly, var_names);
    }
    for (std::size_t v = 0; v < nv; ++v) {
        Exponents e{0, 0};
        e[v] = 1;
        data->variables.emplace_back(vars[v], index_of(normal_form(embed(to_poly(e)))));
    }
    std::string desc = "(polyquot (Z " + std::to_string(p) + ") (";
    for (std::size_t v = 0; v < nv; ++v) desc += (v ? " " : "") + vars[v];
    desc += ") (";
    for (std::size_t g = 0; g < gens.size(); ++g) desc += (g ? " " : "") + polynomial_to_string(gens[g], var_names);
    desc += "))";
    data->descriptor = std::move(desc);
    data->kind = RingKind::polynomial_quotient;
    return FiniteRing::from_trusted(std::move(data));
}

inline FiniteRing polynomial_quotient(std::int64_t p, const std::vector<std::string>& vars,
                                      const std::vector<std::string>& gens, std::size_t max_order = 4096) {
    std::vector<Polynomial> parsed;
    for (const auto& g : gens) parsed.push_back(parse_polynomial(g, vars, p));
    return polynomial_quotient(p, vars, parsed, max_order);
}

/// Evaluates a polynomial at the indeterminate images of a polynomial-quotient ring.
inline elem_t evaluate_polynomial(const FiniteRing& R, const Polynomial& poly) {
    const auto& vars = R.variables();
    elem_t out = 0;
    for (const auto& [e, c] : poly.terms) {
        elem_t term = R.from_integer(c);
        for (std::size_t v = 0; v < vars.size(); ++v) term = R.mul(term, R.pow(vars[v].second, e[v]));
        for (std::size_t v = vars.size(); v < 2; ++v)
            if (e[v] != 0) throw Error(ErrorCode::ResolutionError, "unknown indeterminate");
        out = R.add(out, term);
    }
    return out;
}

} // namespace annmul
