#pragma once

/**
 * @file finring.hpp
 * @brief Finite commutative rings with identity, given by full operation tables.
 *
 * Every ring is stored as addition/multiplication tables over the carrier
 * {0, ..., n-1}; index 0 is always the additive identity. Rings are immutable
 * and cheap to copy (shared table storage), so they can be handed to worker
 * threads freely.
 */

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "annmul/error.hpp"
#include "annmul/subset.hpp"

namespace annmul {

class FiniteRing;

namespace detail {
struct RingData;
}

/// How a ring was built. Used to parse element names back and to describe the ring.
enum class RingKind { integers, product, polynomial_quotient, quotient, tables };

class FiniteRing {
public:
    /// Raw description accepted by from_tables(). Row-major tables, add[a*n+b].
    struct Tables {
        std::size_t order = 0;
        std::vector<elem_t> add;
        std::vector<elem_t> mul;
        elem_t one = 0;
        std::vector<std::string> names;
        std::string descriptor;
    };

    FiniteRing() = default;

    /// Validates every ring axiom; throws InvalidStructure on violation.
    static FiniteRing from_tables(Tables t);

    static FiniteRing integers_mod(std::int64_t n);
    static FiniteRing product(std::span<const FiniteRing> factors);

    std::size_t order() const noexcept;
    elem_t zero() const noexcept { return 0; }
    elem_t one() const noexcept;

    elem_t add(elem_t a, elem_t b) const noexcept;
    elem_t mul(elem_t a, elem_t b) const noexcept;
    elem_t neg(elem_t a) const noexcept;
    elem_t sub(elem_t a, elem_t b) const noexcept { return add(a, neg(b)); }
    elem_t pow(elem_t a, std::uint64_t k) const noexcept;

    /// Image of the integer k under Z -> R.
    elem_t from_integer(std::int64_t k) const;

    const std::string& name(elem_t a) const;
    const std::string& descriptor() const;
    RingKind kind() const noexcept;

    /// Components of a product ring (empty otherwise).
    const std::vector<FiniteRing>& factors() const;
    /// Indeterminate names and their images, for polynomial quotients.
    const std::vector<std::pair<std::string, elem_t>>& variables() const;
    /// Parent ring and canonical projection, for quotient rings.
    const FiniteRing* parent() const;
    const std::vector<elem_t>& projection() const;

    std::optional<elem_t> find(std::string_view element_name) const;

    /// Identical objects or identical tables.
    bool same_as(const FiniteRing& other) const;
    bool valid() const noexcept { return data_ != nullptr; }

    /// Internal constructor used by the structured builders (no axiom re-check).
    static FiniteRing from_trusted(std::shared_ptr<detail::RingData> data);

private:
    std::shared_ptr<const detail::RingData> data_;
};

namespace detail {

struct RingData {
    std::size_t n = 0;
    std::vector<elem_t> add;
    std::vector<elem_t> mul;
    std::vector<elem_t> neg;
    elem_t one = 0;
    std::vector<std::string> names;
    std::string descriptor;
    RingKind kind = RingKind::tables;
    std::vector<FiniteRing> factors;
    std::vector<std::pair<std::string, elem_t>> variables;
    std::optional<FiniteRing> parent;
    std::vector<elem_t> projection;

    void fill_negation() {
        neg.assign(n, 0);
        for (elem_t a = 0; a < n; ++a)
            for (elem_t b = 0; b < n; ++b)
                if (add[a * n + b] == 0) {
                    neg[a] = b;
                    break;
                }
    }
};

} // namespace detail

/// Checks group, ring and identity axioms exhaustively. Returns a description of the first violation.
inline std::optional<std::string> verify_ring_axioms(const FiniteRing::Tables& t) {
    const std::size_t n = t.order;
    if (n == 0) return "empty carrier";
    if (t.add.size() != n * n || t.mul.size() != n * n) return "table size mismatch";
    for (auto v : t.add)
        if (v >= n) return "addition leaves the carrier";
    for (auto v : t.mul)
        if (v >= n) return "multiplication leaves the carrier";
    if (t.one >= n) return "identity out of range";
    if (t.one == 0) return "identity equals zero";
    auto A = [&](elem_t a, elem_t b) { return t.add[a * n + b]; };
    auto M = [&](elem_t a, elem_t b) { return t.mul[a * n + b]; };
    for (elem_t a = 0; a < n; ++a) {
        if (A(0, a) != a) return "0 is not an additive identity";
        if (M(t.one, a) != a) return "one is not a multiplicative identity";
        bool has_inverse = false;
        for (elem_t b = 0; b < n; ++b) {
            if (A(a, b) != A(b, a)) return "addition not commutative";
            if (M(a, b) != M(b, a)) return "multiplication not commutative";
            if (A(a, b) == 0) has_inverse = true;
        }
        if (!has_inverse) return "missing additive inverse";
    }
    for (elem_t a = 0; a < n; ++a)
        for (elem_t b = 0; b < n; ++b)
            for (elem_t c = 0; c < n; ++c) {
                if (A(A(a, b), c) != A(a, A(b, c))) return "addition not associative";
                if (M(M(a, b), c) != M(a, M(b, c))) return "multiplication not associative";
                if (M(a, A(b, c)) != A(M(a, b), M(a, c))) return "multiplication does not distribute";
            }
    return std::nullopt;
}

inline FiniteRing FiniteRing::from_trusted(std::shared_ptr<detail::RingData> data) {
    if (data->neg.empty()) data->fill_negation();
    FiniteRing r;
    r.data_ = std::move(data);
    return r;
}

inline FiniteRing FiniteRing::from_tables(Tables t) {
    if (auto bad = verify_ring_axioms(t)) throw Error(ErrorCode::InvalidStructure, *bad);
    auto d = std::make_shared<detail::RingData>();
    d->n = t.order;
    d->add = std::move(t.add);
    d->mul = std::move(t.mul);
    d->one = t.one;
    d->names = std::move(t.names);
    if (d->names.size() != d->n) {
        d->names.resize(d->n);
        for (std::size_t i = 0; i < d->n; ++i) d->names[i] = "r" + std::to_string(i);
    }
    d->descriptor = t.descriptor.empty() ? "(tables " + std::to_string(d->n) + ")" : std::move(t.descriptor);
    d->kind = RingKind::tables;
    return from_trusted(std::move(d));
}

inline FiniteRing FiniteRing::integers_mod(std::int64_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidModulus, "Z n requires n >= 2, got " + std::to_string(n));
    if (n > 65536) throw Error(ErrorCode::CapExceeded, "modulus too large for table representation");
    auto d = std::make_shared<detail::RingData>();
    const auto un = static_cast<std::size_t>(n);
    d->n = un;
    d->add.resize(un * un);
    d->mul.resize(un * un);
    for (std::size_t a = 0; a < un; ++a)
        for (std::size_t b = 0; b < un; ++b) {
            d->add[a * un + b] = static_cast<elem_t>((a + b) % un);
            d->mul[a * un + b] = static_cast<elem_t>((a * b) % un);
        }
    d->one = 1;
    d->names.resize(un);
    for (std::size_t a = 0; a < un; ++a) d->names[a] = std::to_string(a);
    d->descriptor = "(Z " + std::to_string(n) + ")";
    d->kind = RingKind::integers;
    return from_trusted(std::move(d));
}

inline FiniteRing FiniteRing::product(std::span<const FiniteRing> factors) {
    if (factors.empty()) throw Error(ErrorCode::InvalidStructure, "product of zero rings");
    std::size_t n = 1;
    for (const auto& f : factors) n *= f.order();
    if (n > 65536) throw Error(ErrorCode::CapExceeded, "product ring too large");
    // Mixed-radix digits, first factor most significant.
    auto split = [&](std::size_t x) {
        std::vector<elem_t> digits(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            digits[i] = static_cast<elem_t>(x % factors[i].order());
            x /= factors[i].order();
        }
        return digits;
    };
    auto join = [&](const std::vector<elem_t>& digits) {
        std::size_t x = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i].order() + digits[i];
        return static_cast<elem_t>(x);
    };
    auto d = std::make_shared<detail::RingData>();
    d->n = n;
    d->add.resize(n * n);
    d->mul.resize(n * n);
    std::vector<std::vector<elem_t>> digits(n);
    for (std::size_t x = 0; x < n; ++x) digits[x] = split(x);
    std::vector<elem_t> tmp_add(factors.size()), tmp_mul(factors.size());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < factors.size(); ++i) {
                tmp_add[i] = factors[i].add(digits[a][i], digits[b][i]);
                tmp_mul[i] = factors[i].mul(digits[a][i], digits[b][i]);
            }
            d->add[a * n + b] = join(tmp_add);
            d->mul[a * n + b] = join(tmp_mul);
        }
    std::vector<elem_t> ones(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) ones[i] = factors[i].one();
    d->one = join(ones);
    d->names.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::string s = "[";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += ' ';
            s += factors[i].name(digits[x][i]);
        }
        d->names[x] = s + "]";
    }
    d->descriptor = "(prod";
    for (const auto& f : factors) d->descriptor += " " + f.descriptor();
    d->descriptor += ")";
    d->kind = RingKind::product;
    d->factors.assign(factors.begin(), factors.end());
    return from_trusted(std::move(d));
}

inline std::size_t FiniteRing::order() const noexcept { return data_->n; }
inline elem_t FiniteRing::one() const noexcept { return data_->one; }
inline elem_t FiniteRing::add(elem_t a, elem_t b) const noexcept { return data_->add[a * data_->n + b]; }
inline elem_t FiniteRing::mul(elem_t a, elem_t b) const noexcept { return data_->mul[a * data_->n + b]; }
inline elem_t FiniteRing::neg(elem_t a) const noexcept { return data_->neg[a]; }
inline const std::string& FiniteRing::name(elem_t a) const { return data_->names.at(a); }
inline const std::string& FiniteRing::descriptor() const { return data_->descriptor; }
inline RingKind FiniteRing::kind() const noexcept { return data_->kind; }
inline const std::vector<FiniteRing>& FiniteRing::factors() const { return data_->factors; }
inline const std::vector<std::pair<std::string, elem_t>>& FiniteRing::variables() const {
    return data_->variables;
}
inline const FiniteRing* FiniteRing::parent() const {
    return data_->parent ? &*data_->parent : nullptr;
}
inline const std::vector<elem_t>& FiniteRing::projection() const { return data_->projection; }

inline elem_t FiniteRing::pow(elem_t a, std::uint64_t k) const noexcept {
    elem_t r = one();
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

inline elem_t FiniteRing::from_integer(std::int64_t k) const {
    const bool negative = k < 0;
    std::uint64_t m = negative ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    // The additive order of one divides n, so reduce first.
    m %= order();
    elem_t r = 0;
    for (std::uint64_t i = 0; i < m; ++i) r = add(r, one());
    return negative ? neg(r) : r;
}

inline std::optional<elem_t> FiniteRing::find(std::string_view element_name) const {
    for (elem_t a = 0; a < order(); ++a)
        if (data_->names[a] == element_name) return a;
    return std::nullopt;
}

inline bool FiniteRing::same_as(const FiniteRing& other) const {
    if (data_ == other.data_) return true;
    if (!data_ || !other.data_) return false;
    return data_->n == other.data_->n && data_->one == other.data_->one && data_->add == other.data_->add &&
           data_->mul == other.data_->mul;
}

// ---------------------------------------------------------------------------
// Ideals
// ---------------------------------------------------------------------------

/// An ideal, compared by element set only.
struct Ideal {
    FiniteRing ring;
    Subset elements;
    std::optional<std::vector<elem_t>> generators;

    bool contains(elem_t a) const noexcept { return elements.contains(a); }
    std::size_t size() const noexcept { return elements.size(); }
    bool is_zero() const noexcept { return size() == 1; }
    bool is_whole() const noexcept { return size() == ring.order(); }
    bool is_proper() const noexcept { return !is_whole(); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.elements == b.elements; }
    friend bool operator<(const Ideal& a, const Ideal& b) { return presentation_less(a.elements, b.elements); }
};

inline void require_same_ring(const FiniteRing& a, const FiniteRing& b) {
    if (!a.same_as(b)) throw Error(ErrorCode::RingMismatch, a.descriptor() + " vs " + b.descriptor());
}

inline Subset additive_span(const FiniteRing& R, const std::vector<elem_t>& seeds) {
    return detail::additive_span(R.order(), [&](elem_t a, elem_t b) { return R.add(a, b); }, seeds);
}

/// Smallest ideal containing `gens`; the generator list is retained.
inline Ideal ideal_generate(const FiniteRing& R, const std::vector<elem_t>& gens) {
    std::vector<elem_t> seeds;
    Subset seen(R.order());
    for (elem_t g : gens)
        for (elem_t r = 0; r < R.order(); ++r) {
            const elem_t x = R.mul(r, g);
            if (!seen.contains(x)) {
                seen.insert(x);
                seeds.push_back(x);
            }
        }
    return Ideal{R, additive_span(R, seeds), gens};
}

inline Ideal zero_ideal(const FiniteRing& R) { return ideal_generate(R, {}); }
inline Ideal whole_ideal(const FiniteRing& R) { return Ideal{R, Subset::full(R.order()), std::vector<elem_t>{R.one()}}; }

/// Wraps an element set that is already known to be an ideal.
inline Ideal ideal_from_set(const FiniteRing& R, Subset s) { return Ideal{R, std::move(s), std::nullopt}; }

inline bool is_ideal_set(const FiniteRing& R, const Subset& s) {
    if (!s.contains(0)) return false;
    bool ok = true;
    s.for_each([&](elem_t a) {
        if (!ok) return;
        s.for_each([&](elem_t b) {
            if (!s.contains(R.add(a, b))) ok = false;
        });
        for (elem_t r = 0; r < R.order() && ok; ++r)
            if (!s.contains(R.mul(r, a))) ok = false;
    });
    return ok;
}

/// Enumeration limits shared by the lattice operations.
struct Caps {
    std::size_t max_carrier = 64;
    std::size_t max_submodules = 4096;
    std::size_t max_homs = 1'000'000;
    std::size_t max_poly_space = 10'000'000;
};

/// All ideals of R, ordered by size and then element list.
///
/// Starts from the principal ideals and repeatedly adds one generator to each known
/// ideal until nothing new appears; every ideal of a finite ring is reached this way.
inline std::vector<Ideal> enumerate_ideals(const FiniteRing& R, const Caps& caps = {}) {
    if (R.order() > caps.max_carrier)
        throw Error(ErrorCode::CapExceeded,
                    "ring order " + std::to_string(R.order()) + " exceeds cap " + std::to_string(caps.max_carrier));
    std::vector<Subset> found;
    std::vector<std::vector<elem_t>> gens;
    std::vector<Subset> principal(R.order());
    auto known = [&](const Subset& s) {
        return std::find(found.begin(), found.end(), s) != found.end();
    };
    for (elem_t a = 0; a < R.order(); ++a) {
        principal[a] = ideal_generate(R, {a}).elements;
        if (!known(principal[a])) {
            found.push_back(principal[a]);
            gens.push_back(a == 0 ? std::vector<elem_t>{} : std::vector<elem_t>{a});
        }
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (elem_t a = 0; a < R.order(); ++a) {
            if (found[i].contains(a)) continue;
            std::vector<elem_t> seeds = found[i].elements();
            principal[a].for_each([&](elem_t x) { seeds.push_back(x); });
            Subset joined = additive_span(R, seeds);
            if (!known(joined)) {
                found.push_back(joined);
                auto g = gens[i];
                g.push_back(a);
                gens.push_back(std::move(g));
            }
        }
    }
    std::vector<Ideal> out;
    out.reserve(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) out.push_back(Ideal{R, found[i], gens[i]});
    std::sort(out.begin(), out.end());
    return out;
}

enum class IdealOp { sum, product, intersection, quotient };

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring, J.ring);
    auto seeds = I.elements.elements();
    auto more = J.elements.elements();
    seeds.insert(seeds.end(), more.begin(), more.end());
    return ideal_from_set(I.ring, additive_span(I.ring, seeds));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring, J.ring);
    std::vector<elem_t> seeds;
    I.elements.for_each([&](elem_t a) { J.elements.for_each([&](elem_t b) { seeds.push_back(I.ring.mul(a, b)); }); });
    return ideal_from_set(I.ring, additive_span(I.ring, seeds));
}

inline Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring, J.ring);
    return ideal_from_set(I.ring, I.elements & J.elements);
}

/// (I : J) = { a : aJ ⊆ I }.
inline Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring, J.ring);
    const auto& R = I.ring;
    Subset out(R.order());
    for (elem_t a = 0; a < R.order(); ++a) {
        bool ok = true;
        J.elements.for_each([&](elem_t b) {
            if (ok && !I.contains(R.mul(a, b))) ok = false;
        });
        if (ok) out.insert(a);
    }
    return ideal_from_set(R, std::move(out));
}

inline Ideal ideal_arith(IdealOp op, const Ideal& I, const Ideal& J) {
    switch (op) {
    case IdealOp::sum: return ideal_sum(I, J);
    case IdealOp::product: return ideal_product(I, J);
    case IdealOp::intersection: return ideal_intersection(I, J);
    case IdealOp::quotient: return ideal_quotient(I, J);
    }
    throw Error(ErrorCode::InvalidStructure, "unknown ideal operation");
}

/// ann(S) = { a : as = 0 for every s in S }.
inline Ideal annihilator_in_ring(const FiniteRing& R, const std::vector<elem_t>& S) {
    Subset out(R.order());
    for (elem_t a = 0; a < R.order(); ++a) {
        bool kills = true;
        for (elem_t s : S)
            if (R.mul(a, s) != 0) {
                kills = false;
                break;
            }
        if (kills) out.insert(a);
    }
    return ideal_from_set(R, std::move(out));
}

// ---------------------------------------------------------------------------
// Special elements and classification
// ---------------------------------------------------------------------------

struct SpecialElements {
    Subset units;
    Subset idempotents;
    Subset nilpotents;
};

inline bool is_unit(const FiniteRing& R, elem_t a) {
    for (elem_t b = 0; b < R.order(); ++b)
        if (R.mul(a, b) == R.one()) return true;
    return false;
}

inline std::optional<elem_t> inverse(const FiniteRing& R, elem_t a) {
    for (elem_t b = 0; b < R.order(); ++b)
        if (R.mul(a, b) == R.one()) return b;
    return std::nullopt;
}

inline bool is_nilpotent(const FiniteRing& R, elem_t a) {
    elem_t p = a;
    for (std::size_t k = 0; k <= R.order(); ++k) {
        if (p == 0) return true;
        p = R.mul(p, a);
    }
    return false;
}

inline SpecialElements special_elements(const FiniteRing& R) {
    SpecialElements s{Subset(R.order()), Subset(R.order()), Subset(R.order())};
    for (elem_t a = 0; a < R.order(); ++a) {
        if (is_unit(R, a)) s.units.insert(a);
        if (R.mul(a, a) == a) s.idempotents.insert(a);
        if (is_nilpotent(R, a)) s.nilpotents.insert(a);
    }
    return s;
}

inline Subset nonunits(const FiniteRing& R) {
    Subset out(R.order());
    for (elem_t a = 0; a < R.order(); ++a)
        if (!is_unit(R, a)) out.insert(a);
    return out;
}

struct IdealClassification {
    bool is_prime = false;
    bool is_maximal = false;
    bool is_one_absorbing_prime = false;
    bool is_semiprime = false;
    bool is_principal = false;
};

inline bool is_prime_ideal(const Ideal& I) {
    if (!I.is_proper()) return false;
    const auto& R = I.ring;
    for (elem_t a = 0; a < R.order(); ++a) {
        if (I.contains(a)) continue;
        for (elem_t b = 0; b < R.order(); ++b)
            if (!I.contains(b) && I.contains(R.mul(a, b))) return false;
    }
    return true;
}

/// R/I is a field: every a outside I has some b with ab - 1 in I.
inline bool is_maximal_ideal(const Ideal& I) {
    if (!I.is_proper()) return false;
    const auto& R = I.ring;
    for (elem_t a = 0; a < R.order(); ++a) {
        if (I.contains(a)) continue;
        bool invertible = false;
        for (elem_t b = 0; b < R.order() && !invertible; ++b)
            invertible = I.contains(R.sub(R.mul(a, b), R.one()));
        if (!invertible) return false;
    }
    return true;
}

inline bool is_one_absorbing_prime_ideal(const Ideal& I) {
    if (!I.is_proper()) return false;
    const auto& R = I.ring;
    const auto nu = nonunits(R).elements();
    for (elem_t a : nu)
        for (elem_t b : nu) {
            const elem_t ab = R.mul(a, b);
            if (I.contains(ab)) continue;
            for (elem_t c : nu)
                if (!I.contains(c) && I.contains(R.mul(ab, c))) return false;
        }
    return true;
}

inline bool is_principal_ideal(const Ideal& I) {
    const auto& R = I.ring;
    bool found = false;
    I.elements.for_each([&](elem_t a) {
        if (!found && ideal_generate(R, {a}).elements == I.elements) found = true;
    });
    return found;
}

inline IdealClassification classify_ideal(const Ideal& I) {
    IdealClassification c;
    c.is_principal = is_principal_ideal(I);
    if (!I.is_proper()) return c;
    const auto& R = I.ring;
    c.is_prime = is_prime_ideal(I);
    c.is_maximal = is_maximal_ideal(I);
    c.is_one_absorbing_prime = is_one_absorbing_prime_ideal(I);
    c.is_semiprime = true;
    for (elem_t a = 0; a < R.order() && c.is_semiprime; ++a)
        if (!I.contains(a) && I.contains(R.mul(a, a))) c.is_semiprime = false;
    return c;
}

struct RingClassification {
    bool is_field = false;
    bool is_domain = false;
    bool is_reduced = false;
    bool is_vn_regular = false;
    bool is_baer_kist = false;
    bool is_principal_ideal_ring = false;
    bool is_local = false;
};

/// For ann(a) = bR with b idempotent, returns such a b (smallest index) per element.
inline std::vector<std::optional<elem_t>> baer_kist_witnesses(const FiniteRing& R) {
    std::vector<std::optional<elem_t>> out(R.order());
    const auto idem = special_elements(R).idempotents.elements();
    for (elem_t a = 0; a < R.order(); ++a) {
        const auto ann = annihilator_in_ring(R, {a});
        for (elem_t b : idem)
            if (ideal_generate(R, {b}).elements == ann.elements) {
                out[a] = b;
                break;
            }
    }
    return out;
}

inline std::vector<Ideal> maximal_ideals(const FiniteRing& R, const Caps& caps = {}) {
    std::vector<Ideal> out;
    for (auto& I : enumerate_ideals(R, caps))
        if (is_maximal_ideal(I)) out.push_back(I);
    return out;
}

inline RingClassification classify_ring(const FiniteRing& R, const Caps& caps = {}) {
    RingClassification c;
    const auto se = special_elements(R);
    c.is_field = se.units.size() == R.order() - 1;
    c.is_domain = true;
    for (elem_t a = 1; a < R.order() && c.is_domain; ++a)
        for (elem_t b = 1; b < R.order(); ++b)
            if (R.mul(a, b) == 0) {
                c.is_domain = false;
                break;
            }
    c.is_reduced = se.nilpotents.size() == 1;
    c.is_vn_regular = true;
    for (elem_t a = 0; a < R.order() && c.is_vn_regular; ++a) {
        bool ok = false;
        for (elem_t x = 0; x < R.order() && !ok; ++x) ok = R.mul(R.mul(a, x), a) == a;
        c.is_vn_regular = ok;
    }
    const auto bk = baer_kist_witnesses(R);
    c.is_baer_kist = std::all_of(bk.begin(), bk.end(), [](const auto& w) { return w.has_value(); });
    const auto ideals = enumerate_ideals(R, caps);
    c.is_principal_ideal_ring =
        std::all_of(ideals.begin(), ideals.end(), [](const Ideal& I) { return is_principal_ideal(I); });
    std::size_t maximal = 0;
    for (const auto& I : ideals)
        if (is_maximal_ideal(I)) ++maximal;
    c.is_local = maximal == 1;
    return c;
}

// ---------------------------------------------------------------------------
// Quotient rings and field decomposition
// ---------------------------------------------------------------------------

struct QuotientRing {
    FiniteRing ring;
    /// Parent element -> coset index.
    std::vector<elem_t> projection;
    /// Coset index -> smallest representative in the parent.
    std::vector<elem_t> representative;
};

/// Greedy generating set of an ideal: each step adds the element enlarging the span most.
inline std::vector<elem_t> ideal_generators(const Ideal& I) {
    if (I.generators) return *I.generators;
    std::vector<elem_t> gens;
    Subset current = zero_ideal(I.ring).elements;
    while (!(current == I.elements)) {
        elem_t best = 0;
        Subset best_span;
        I.elements.for_each([&](elem_t a) {
            if (current.contains(a)) return;
            auto g = gens;
            g.push_back(a);
            auto span = ideal_generate(I.ring, g).elements;
            if (span.size() > best_span.size()) {
                best = a;
                best_span = std::move(span);
            }
        });
        gens.push_back(best);
        current = std::move(best_span);
    }
    return gens;
}

/// R/I for a proper ideal I. Cosets are numbered by their smallest representative.
inline QuotientRing quotient_ring(const FiniteRing& R, const Ideal& I) {
    require_same_ring(R, I.ring);
    if (!I.is_proper()) throw Error(ErrorCode::Degenerate, "quotient by the whole ring is the zero ring");
    std::vector<elem_t> proj(R.order(), static_cast<elem_t>(-1));
    std::vector<elem_t> reps;
    for (elem_t a = 0; a < R.order(); ++a) {
        if (proj[a] != static_cast<elem_t>(-1)) continue;
        const auto idx = static_cast<elem_t>(reps.size());
        reps.push_back(a);
        I.elements.for_each([&](elem_t i) { proj[R.add(a, i)] = idx; });
    }
    const std::size_t m = reps.size();
    auto d = std::make_shared<detail::RingData>();
    d->n = m;
    d->add.resize(m * m);
    d->mul.resize(m * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            d->add[x * m + y] = proj[R.add(reps[x], reps[y])];
            d->mul[x * m + y] = proj[R.mul(reps[x], reps[y])];
        }
    d->one = proj[R.one()];
    d->names.resize(m);
    for (std::size_t x = 0; x < m; ++x) d->names[x] = R.name(reps[x]);
    std::string gens;
    for (elem_t e : ideal_generators(I)) gens += " " + R.name(e);
    d->descriptor = "(quot " + R.descriptor() + " (ideal" + gens + "))";
    d->kind = RingKind::quotient;
    d->parent = R;
    d->projection = proj;
    return QuotientRing{FiniteRing::from_trusted(std::move(d)), std::move(proj), std::move(reps)};
}

struct FieldDecomposition {
    std::vector<FiniteRing> factors;
    /// projections[i][a] is the image of a in factors[i].
    std::vector<std::vector<elem_t>> projections;
};

/// Splits a reduced ring into fields R/Q_1 x ... x R/Q_k over its maximal ideals.
inline FieldDecomposition field_decompose(const FiniteRing& R, const Caps& caps = {}) {
    if (special_elements(R).nilpotents.size() != 1)
        throw Error(ErrorCode::NotSemisimple, R.descriptor() + " has a nonzero nilpotent");
    FieldDecomposition out;
    for (const auto& Q : maximal_ideals(R, caps)) {
        auto q = quotient_ring(R, Q);
        out.factors.push_back(std::move(q.ring));
        out.projections.push_back(std::move(q.projection));
    }
    return out;
}

/// Checks that a -> (pi_1(a), ..., pi_k(a)) is a bijective ring map onto the product.
inline bool decomposition_reconstructs(const FiniteRing& R, const FieldDecomposition& fd) {
    std::size_t product_order = 1;
    for (const auto& f : fd.factors) product_order *= f.order();
    if (product_order != R.order()) return false;
    const auto P = FiniteRing::product(fd.factors);
    std::vector<elem_t> image(R.order());
    Subset hit(P.order());
    for (elem_t a = 0; a < R.order(); ++a) {
        std::size_t x = 0;
        for (std::size_t i = 0; i < fd.factors.size(); ++i) x = x * fd.factors[i].order() + fd.projections[i][a];
        image[a] = static_cast<elem_t>(x);
        if (hit.contains(image[a])) return false;
        hit.insert(image[a]);
    }
    if (image[R.one()] != P.one()) return false;
    for (elem_t a = 0; a < R.order(); ++a)
        for (elem_t b = 0; b < R.order(); ++b)
            if (image[R.add(a, b)] != P.add(image[a], image[b]) || image[R.mul(a, b)] != P.mul(image[a], image[b]))
                return false;
    return true;
}

inline std::string ideal_to_string(const Ideal& I) {
    std::string s = "{";
    bool first = true;
    I.elements.for_each([&](elem_t a) {
        if (!first) s += ", ";
        first = false;
        s += I.ring.name(a);
    });
    return s + "}";
}

} // namespace annmul
