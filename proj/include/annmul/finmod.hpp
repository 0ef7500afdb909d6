#pragma once

/**
 * @file finmod.hpp
 * @brief Finite unital modules over finite rings, their submodule lattices and residuals.
 *
 * A module stores its addition table and the full action table act[a*n + e].
 * Like rings, modules are immutable values over shared storage. Index 0 is the
 * zero element of every module.
 */

#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "annmul/finring.hpp"

namespace annmul {

/// Three-valued classifier outcome. `degenerate` marks a precondition failure
/// (zero module, improper submodule) and is never folded into yes or no.
enum class Flag { no, yes, degenerate };

constexpr Flag to_flag(bool b) { return b ? Flag::yes : Flag::no; }
constexpr bool is_yes(Flag f) { return f == Flag::yes; }

constexpr std::string_view to_string(Flag f) {
    switch (f) {
    case Flag::no: return "false";
    case Flag::yes: return "true";
    case Flag::degenerate: return "degenerate";
    }
    return "?";
}

enum class ModuleKind { self, cyclic, free, direct_sum, product, quotient, submodule, restricted, tables };

namespace detail {
struct ModuleData;
}

class FiniteModule {
public:
    struct Tables {
        FiniteRing ring;
        std::size_t order = 0;
        std::vector<elem_t> add;
        /// act[a * order + e] = a·e
        std::vector<elem_t> act;
        std::vector<std::string> names;
        std::string descriptor;
    };

    FiniteModule() = default;

    static FiniteModule from_tables(Tables t);

    static FiniteModule self(const FiniteRing& R);
    static FiniteModule cyclic(const Ideal& I);
    static FiniteModule free(const FiniteRing& R, std::size_t rank);
    static FiniteModule direct_sum(std::span<const FiniteModule> parts);
    /// E_1 x ... x E_k over A_1 x ... x A_k with componentwise action.
    static FiniteModule product(std::span<const FiniteModule> parts);

    const FiniteRing& ring() const;
    std::size_t order() const noexcept;
    elem_t zero() const noexcept { return 0; }
    elem_t add(elem_t e, elem_t f) const noexcept;
    elem_t neg(elem_t e) const noexcept;
    elem_t sub(elem_t e, elem_t f) const noexcept { return add(e, neg(f)); }
    elem_t act(elem_t a, elem_t e) const noexcept;

    const std::string& name(elem_t e) const;
    const std::string& descriptor() const;
    ModuleKind kind() const noexcept;
    const std::vector<FiniteModule>& parts() const;
    const FiniteModule* parent() const;
    /// Parent element -> this module's element (quotients), or this -> parent (submodules).
    const std::vector<elem_t>& structure_map() const;
    std::optional<elem_t> find(std::string_view element_name) const;

    bool valid() const noexcept { return data_ != nullptr; }
    bool same_as(const FiniteModule& other) const;

    static FiniteModule from_trusted(std::shared_ptr<detail::ModuleData> data);

private:
    std::shared_ptr<const detail::ModuleData> data_;
};

namespace detail {

struct ModuleData {
    FiniteRing ring;
    std::size_t n = 0;
    std::vector<elem_t> add;
    std::vector<elem_t> neg;
    std::vector<elem_t> act;
    std::vector<std::string> names;
    std::string descriptor;
    ModuleKind kind = ModuleKind::tables;
    std::vector<FiniteModule> parts;
    std::optional<FiniteModule> parent;
    std::vector<elem_t> structure_map;

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

inline std::optional<std::string> verify_module_axioms(const FiniteModule::Tables& t) {
    const std::size_t n = t.order;
    const auto& R = t.ring;
    const std::size_t r = R.order();
    if (n == 0) return "empty carrier";
    if (t.add.size() != n * n || t.act.size() != r * n) return "table size mismatch";
    for (auto v : t.add)
        if (v >= n) return "addition leaves the carrier";
    for (auto v : t.act)
        if (v >= n) return "action leaves the carrier";
    auto A = [&](elem_t e, elem_t f) { return t.add[e * n + f]; };
    auto S = [&](elem_t a, elem_t e) { return t.act[a * n + e]; };
    for (elem_t e = 0; e < n; ++e) {
        if (A(0, e) != e) return "0 is not an additive identity";
        if (S(R.one(), e) != e) return "1e != e";
        bool inv = false;
        for (elem_t f = 0; f < n; ++f) {
            if (A(e, f) != A(f, e)) return "addition not commutative";
            if (A(e, f) == 0) inv = true;
        }
        if (!inv) return "missing additive inverse";
    }
    for (elem_t e = 0; e < n; ++e)
        for (elem_t f = 0; f < n; ++f)
            for (elem_t g = 0; g < n; ++g)
                if (A(A(e, f), g) != A(e, A(f, g))) return "addition not associative";
    for (elem_t a = 0; a < r; ++a)
        for (elem_t e = 0; e < n; ++e) {
            for (elem_t f = 0; f < n; ++f)
                if (S(a, A(e, f)) != A(S(a, e), S(a, f))) return "a(e+f) != ae+af";
            for (elem_t b = 0; b < r; ++b) {
                if (S(R.add(a, b), e) != A(S(a, e), S(b, e))) return "(a+b)e != ae+be";
                if (S(R.mul(a, b), e) != S(a, S(b, e))) return "(ab)e != a(be)";
            }
        }
    return std::nullopt;
}

inline FiniteModule FiniteModule::from_trusted(std::shared_ptr<detail::ModuleData> data) {
    if (data->neg.empty()) data->fill_negation();
    FiniteModule m;
    m.data_ = std::move(data);
    return m;
}

inline FiniteModule FiniteModule::from_tables(Tables t) {
    if (auto bad = verify_module_axioms(t)) throw Error(ErrorCode::InvalidStructure, *bad);
    auto d = std::make_shared<detail::ModuleData>();
    d->ring = t.ring;
    d->n = t.order;
    d->add = std::move(t.add);
    d->act = std::move(t.act);
    d->names = std::move(t.names);
    if (d->names.size() != d->n) {
        d->names.resize(d->n);
        for (std::size_t i = 0; i < d->n; ++i) d->names[i] = "m" + std::to_string(i);
    }
    d->descriptor = t.descriptor.empty() ? "(tables " + std::to_string(d->n) + ")" : std::move(t.descriptor);
    return from_trusted(std::move(d));
}

inline FiniteModule FiniteModule::self(const FiniteRing& R) {
    auto d = std::make_shared<detail::ModuleData>();
    const std::size_t n = R.order();
    d->ring = R;
    d->n = n;
    d->add.resize(n * n);
    d->act.resize(n * n);
    for (elem_t a = 0; a < n; ++a)
        for (elem_t b = 0; b < n; ++b) {
            d->add[a * n + b] = R.add(a, b);
            d->act[a * n + b] = R.mul(a, b);
        }
    d->names.resize(n);
    for (elem_t a = 0; a < n; ++a) d->names[a] = R.name(a);
    d->descriptor = "(self " + R.descriptor() + ")";
    d->kind = ModuleKind::self;
    return from_trusted(std::move(d));
}

inline FiniteModule FiniteModule::direct_sum(std::span<const FiniteModule> parts) {
    if (parts.empty()) throw Error(ErrorCode::InvalidStructure, "direct sum of no modules");
    for (const auto& p : parts)
        if (!p.ring().same_as(parts[0].ring()))
            throw Error(ErrorCode::RingMismatch, "direct sum over different rings");
    const FiniteRing& R = parts[0].ring();
    std::size_t n = 1;
    for (const auto& p : parts) n *= p.order();
    if (n > 65536) throw Error(ErrorCode::CapExceeded, "direct sum too large");
    const std::size_t k = parts.size();
    std::vector<std::vector<elem_t>> digits(n, std::vector<elem_t>(k));
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t rest = x;
        for (std::size_t i = k; i-- > 0;) {
            digits[x][i] = static_cast<elem_t>(rest % parts[i].order());
            rest /= parts[i].order();
        }
    }
    auto join = [&](const std::vector<elem_t>& dg) {
        std::size_t x = 0;
        for (std::size_t i = 0; i < k; ++i) x = x * parts[i].order() + dg[i];
        return static_cast<elem_t>(x);
    };
    auto d = std::make_shared<detail::ModuleData>();
    d->ring = R;
    d->n = n;
    d->add.resize(n * n);
    d->act.resize(R.order() * n);
    std::vector<elem_t> tmp(k);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t i = 0; i < k; ++i) tmp[i] = parts[i].add(digits[x][i], digits[y][i]);
            d->add[x * n + y] = join(tmp);
        }
    for (elem_t a = 0; a < R.order(); ++a)
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t i = 0; i < k; ++i) tmp[i] = parts[i].act(a, digits[x][i]);
            d->act[a * n + x] = join(tmp);
        }
    d->names.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::string s = "[";
        for (std::size_t i = 0; i < k; ++i) s += (i ? " " : "") + parts[i].name(digits[x][i]);
        d->names[x] = s + "]";
    }
    d->descriptor = "(dsum";
    for (const auto& p : parts) d->descriptor += " " + p.descriptor();
    d->descriptor += ")";
    d->kind = ModuleKind::direct_sum;
    d->parts.assign(parts.begin(), parts.end());
    return from_trusted(std::move(d));
}

inline FiniteModule FiniteModule::free(const FiniteRing& R, std::size_t rank) {
    if (rank == 0) throw Error(ErrorCode::InvalidStructure, "free module of rank 0");
    std::vector<FiniteModule> copies(rank, self(R));
    auto m = direct_sum(copies);
    auto d = std::make_shared<detail::ModuleData>(*std::shared_ptr<const detail::ModuleData>(m.data_));
    d->descriptor = "(free " + R.descriptor() + " " + std::to_string(rank) + ")";
    d->kind = ModuleKind::free;
    return from_trusted(std::move(d));
}

inline FiniteModule FiniteModule::product(std::span<const FiniteModule> parts) {
    if (parts.empty()) throw Error(ErrorCode::InvalidStructure, "product of no modules");
    std::vector<FiniteRing> rings;
    for (const auto& p : parts) rings.push_back(p.ring());
    const FiniteRing R = FiniteRing::product(rings);
    const std::size_t k = parts.size();
    std::size_t n = 1;
    for (const auto& p : parts) n *= p.order();
    if (n > 65536) throw Error(ErrorCode::CapExceeded, "product module too large");
    auto split = [](std::size_t x, auto sizes) {
        std::vector<elem_t> dg(sizes.size());
        for (std::size_t i = sizes.size(); i-- > 0;) {
            dg[i] = static_cast<elem_t>(x % sizes[i]);
            x /= sizes[i];
        }
        return dg;
    };
    std::vector<std::size_t> msizes, rsizes;
    for (const auto& p : parts) {
        msizes.push_back(p.order());
        rsizes.push_back(p.ring().order());
    }
    auto join = [&](const std::vector<elem_t>& dg) {
        std::size_t x = 0;
        for (std::size_t i = 0; i < k; ++i) x = x * msizes[i] + dg[i];
        return static_cast<elem_t>(x);
    };
    std::vector<std::vector<elem_t>> mdig(n);
    for (std::size_t x = 0; x < n; ++x) mdig[x] = split(x, msizes);
    auto d = std::make_shared<detail::ModuleData>();
    d->ring = R;
    d->n = n;
    d->add.resize(n * n);
    d->act.resize(R.order() * n);
    std::vector<elem_t> tmp(k);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t i = 0; i < k; ++i) tmp[i] = parts[i].add(mdig[x][i], mdig[y][i]);
            d->add[x * n + y] = join(tmp);
        }
    for (std::size_t a = 0; a < R.order(); ++a) {
        const auto rd = split(a, rsizes);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t i = 0; i < k; ++i) tmp[i] = parts[i].act(rd[i], mdig[x][i]);
            d->act[a * n + x] = join(tmp);
        }
    }
    d->names.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::string s = "[";
        for (std::size_t i = 0; i < k; ++i) s += (i ? " " : "") + parts[i].name(mdig[x][i]);
        d->names[x] = s + "]";
    }
    d->descriptor = "(prod";
    for (const auto& p : parts) d->descriptor += " " + p.descriptor();
    d->descriptor += ")";
    d->kind = ModuleKind::product;
    d->parts.assign(parts.begin(), parts.end());
    return from_trusted(std::move(d));
}

inline const FiniteRing& FiniteModule::ring() const { return data_->ring; }
inline std::size_t FiniteModule::order() const noexcept { return data_->n; }
inline elem_t FiniteModule::add(elem_t e, elem_t f) const noexcept { return data_->add[e * data_->n + f]; }
inline elem_t FiniteModule::neg(elem_t e) const noexcept { return data_->neg[e]; }
inline elem_t FiniteModule::act(elem_t a, elem_t e) const noexcept { return data_->act[a * data_->n + e]; }
inline const std::string& FiniteModule::name(elem_t e) const { return data_->names.at(e); }
inline const std::string& FiniteModule::descriptor() const { return data_->descriptor; }
inline ModuleKind FiniteModule::kind() const noexcept { return data_->kind; }
inline const std::vector<FiniteModule>& FiniteModule::parts() const { return data_->parts; }
inline const FiniteModule* FiniteModule::parent() const { return data_->parent ? &*data_->parent : nullptr; }
inline const std::vector<elem_t>& FiniteModule::structure_map() const { return data_->structure_map; }

inline std::optional<elem_t> FiniteModule::find(std::string_view element_name) const {
    for (elem_t e = 0; e < order(); ++e)
        if (data_->names[e] == element_name) return e;
    return std::nullopt;
}

inline bool FiniteModule::same_as(const FiniteModule& other) const {
    if (data_ == other.data_) return true;
    if (!data_ || !other.data_) return false;
    return data_->n == other.data_->n && data_->ring.same_as(other.data_->ring) && data_->add == other.data_->add &&
           data_->act == other.data_->act;
}

// ---------------------------------------------------------------------------
// Submodules
// ---------------------------------------------------------------------------

struct Submodule {
    FiniteModule module;
    Subset elements;
    std::optional<std::vector<elem_t>> generators;

    bool contains(elem_t e) const noexcept { return elements.contains(e); }
    std::size_t size() const noexcept { return elements.size(); }
    bool is_zero() const noexcept { return size() == 1; }
    bool is_whole() const noexcept { return size() == module.order(); }
    bool is_proper() const noexcept { return !is_whole(); }

    friend bool operator==(const Submodule& a, const Submodule& b) { return a.elements == b.elements; }
    friend bool operator<(const Submodule& a, const Submodule& b) {
        return presentation_less(a.elements, b.elements);
    }
};

inline void require_same_module(const FiniteModule& a, const FiniteModule& b) {
    if (!a.same_as(b)) throw Error(ErrorCode::ModuleMismatch, a.descriptor() + " vs " + b.descriptor());
}

inline Subset additive_span(const FiniteModule& E, const std::vector<elem_t>& seeds) {
    return detail::additive_span(E.order(), [&](elem_t a, elem_t b) { return E.add(a, b); }, seeds);
}

inline Submodule submodule_generate(const FiniteModule& E, const std::vector<elem_t>& gens) {
    std::vector<elem_t> seeds;
    Subset seen(E.order());
    for (elem_t g : gens)
        for (elem_t a = 0; a < E.ring().order(); ++a) {
            const elem_t x = E.act(a, g);
            if (!seen.contains(x)) {
                seen.insert(x);
                seeds.push_back(x);
            }
        }
    return Submodule{E, additive_span(E, seeds), gens};
}

inline Submodule zero_submodule(const FiniteModule& E) { return submodule_generate(E, {}); }
inline Submodule whole_submodule(const FiniteModule& E) { return Submodule{E, Subset::full(E.order()), std::nullopt}; }
inline Submodule submodule_from_set(const FiniteModule& E, Subset s) { return Submodule{E, std::move(s), std::nullopt}; }

inline bool is_submodule_set(const FiniteModule& E, const Subset& s) {
    if (!s.contains(0)) return false;
    bool ok = true;
    s.for_each([&](elem_t e) {
        if (!ok) return;
        s.for_each([&](elem_t f) {
            if (!s.contains(E.add(e, f))) ok = false;
        });
        for (elem_t a = 0; a < E.ring().order() && ok; ++a)
            if (!s.contains(E.act(a, e))) ok = false;
    });
    return ok;
}

/// Greedy generating set: repeatedly adds the element that enlarges the span most.
inline std::vector<elem_t> greedy_generators(const FiniteModule& E, const Subset& target) {
    std::vector<elem_t> gens;
    Subset current = zero_submodule(E).elements;
    while (!(current == target)) {
        elem_t best = 0;
        std::size_t best_size = 0;
        Subset best_span;
        target.for_each([&](elem_t e) {
            if (current.contains(e)) return;
            auto g = gens;
            g.push_back(e);
            auto span = submodule_generate(E, g).elements;
            if (span.size() > best_size) {
                best_size = span.size();
                best = e;
                best_span = std::move(span);
            }
        });
        gens.push_back(best);
        current = std::move(best_span);
    }
    return gens;
}

inline std::vector<elem_t> generators_of(const Submodule& V) {
    return V.generators ? *V.generators : greedy_generators(V.module, V.elements);
}

inline Submodule submodule_sum(const Submodule& V, const Submodule& W) {
    require_same_module(V.module, W.module);
    auto seeds = V.elements.elements();
    auto more = W.elements.elements();
    seeds.insert(seeds.end(), more.begin(), more.end());
    return submodule_from_set(V.module, additive_span(V.module, seeds));
}

inline Submodule submodule_intersection(const Submodule& V, const Submodule& W) {
    require_same_module(V.module, W.module);
    return submodule_from_set(V.module, V.elements & W.elements);
}

/// I·S: additive span of { a s : a in I, s in S } for a submodule S.
inline Submodule ideal_times(const Ideal& I, const Submodule& V) {
    require_same_ring(I.ring, V.module.ring());
    std::vector<elem_t> seeds;
    Subset seen(V.module.order());
    I.elements.for_each([&](elem_t a) {
        V.elements.for_each([&](elem_t e) {
            const elem_t x = V.module.act(a, e);
            if (!seen.contains(x)) {
                seen.insert(x);
                seeds.push_back(x);
            }
        });
    });
    return submodule_from_set(V.module, additive_span(V.module, seeds));
}

inline Submodule ideal_times(const Ideal& I, const FiniteModule& E) { return ideal_times(I, whole_submodule(E)); }

/// aV, which is already a submodule for commutative rings.
inline Submodule scalar_times(elem_t a, const Submodule& V) {
    Subset out(V.module.order());
    V.elements.for_each([&](elem_t e) { out.insert(V.module.act(a, e)); });
    return submodule_from_set(V.module, std::move(out));
}

/// All submodules, ordered by size then element list.
///
/// Cyclic submodules are joined pairwise with every known submodule until a fixpoint;
/// the count cap aborts the closure early.
inline std::vector<Submodule> enumerate_submodules(const FiniteModule& E, const Caps& caps = {}) {
    if (E.order() > caps.max_carrier)
        throw Error(ErrorCode::CapExceeded,
                    "module order " + std::to_string(E.order()) + " exceeds cap " + std::to_string(caps.max_carrier));
    std::unordered_set<Subset, SubsetHash> seen;
    std::vector<Subset> found;
    std::vector<std::vector<elem_t>> gens;
    std::vector<Subset> cyclics;
    std::vector<elem_t> cyclic_gen;
    auto record = [&](Subset s, std::vector<elem_t> g) {
        if (seen.insert(s).second) {
            found.push_back(std::move(s));
            gens.push_back(std::move(g));
            if (found.size() > caps.max_submodules)
                throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(caps.max_submodules) + " submodules");
            return true;
        }
        return false;
    };
    for (elem_t e = 0; e < E.order(); ++e) {
        auto c = submodule_generate(E, {e}).elements;
        if (record(c, e == 0 ? std::vector<elem_t>{} : std::vector<elem_t>{e})) {
            if (e != 0) {
                cyclics.push_back(c);
                cyclic_gen.push_back(e);
            }
        }
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t c = 0; c < cyclics.size(); ++c) {
            if (cyclics[c].subset_of(found[i])) continue;
            auto seeds = found[i].elements();
            auto more = cyclics[c].elements();
            seeds.insert(seeds.end(), more.begin(), more.end());
            auto g = gens[i];
            g.push_back(cyclic_gen[c]);
            record(additive_span(E, seeds), std::move(g));
        }
    }
    std::vector<Submodule> out;
    out.reserve(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) out.push_back(Submodule{E, found[i], gens[i]});
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Residuals and annihilators
// ---------------------------------------------------------------------------

/// (V :_A K) = { a : aK ⊆ V } for an element set K.
inline Ideal residual_ideal(const Submodule& V, const Subset& K) {
    const auto& E = V.module;
    const auto& R = E.ring();
    Subset out(R.order());
    for (elem_t a = 0; a < R.order(); ++a) {
        bool ok = true;
        K.for_each([&](elem_t e) {
            if (ok && !V.contains(E.act(a, e))) ok = false;
        });
        if (ok) out.insert(a);
    }
    return ideal_from_set(R, std::move(out));
}

inline Ideal residual_ideal(const Submodule& V, const Submodule& K) {
    require_same_module(V.module, K.module);
    return residual_ideal(V, K.elements);
}

inline Ideal annihilator(const FiniteModule& E, const Subset& S) { return residual_ideal(zero_submodule(E), S); }
inline Ideal annihilator(const Submodule& V) { return annihilator(V.module, V.elements); }
inline Ideal annihilator(const FiniteModule& E) { return annihilator(E, Subset::full(E.order())); }

inline Ideal annihilator_of_element(const FiniteModule& E, elem_t e) {
    const auto& R = E.ring();
    Subset out(R.order());
    for (elem_t a = 0; a < R.order(); ++a)
        if (E.act(a, e) == 0) out.insert(a);
    return ideal_from_set(R, std::move(out));
}

/// (V :_E J) = { e : Je ⊆ V }.
inline Submodule residual_submodule(const Submodule& V, const Ideal& J) {
    const auto& E = V.module;
    require_same_ring(E.ring(), J.ring);
    Subset out(E.order());
    for (elem_t e = 0; e < E.order(); ++e) {
        bool ok = true;
        J.elements.for_each([&](elem_t a) {
            if (ok && !V.contains(E.act(a, e))) ok = false;
        });
        if (ok) out.insert(e);
    }
    return submodule_from_set(E, std::move(out));
}

/// ann_E(J) = (0 :_E J).
inline Submodule annihilator_in_module(const FiniteModule& E, const Ideal& J) {
    return residual_submodule(zero_submodule(E), J);
}

struct TorsionInfo {
    Subset torsion;
    bool is_torsion = false;
    bool is_non_torsion = false;
};

/// T(E) = { e : ann(e) != 0 }.
inline TorsionInfo torsion_set(const FiniteModule& E) {
    TorsionInfo t{Subset(E.order())};
    for (elem_t e = 0; e < E.order(); ++e)
        if (!annihilator_of_element(E, e).is_zero()) t.torsion.insert(e);
    t.is_torsion = t.torsion.size() == E.order();
    t.is_non_torsion = !t.is_torsion;
    return t;
}

struct BasicModuleFlags {
    Flag faithful = Flag::degenerate;
    Flag torsion_free = Flag::degenerate;
    Flag simple = Flag::degenerate;
};

inline BasicModuleFlags classify_module_basic(const FiniteModule& E) {
    BasicModuleFlags f;
    if (E.order() == 1) return f;
    f.faithful = to_flag(annihilator(E).is_zero());
    bool tf = true;
    bool simple = true;
    for (elem_t e = 1; e < E.order(); ++e) {
        if (!annihilator_of_element(E, e).is_zero()) tf = false;
        // Simple: exactly two submodules, i.e. every nonzero element generates E.
        if (simple && submodule_generate(E, {e}).size() != E.order()) simple = false;
    }
    f.torsion_free = to_flag(tf);
    f.simple = to_flag(simple);
    return f;
}

// ---------------------------------------------------------------------------
// Submodule classification
// ---------------------------------------------------------------------------

struct SubmoduleClassification {
    Flag is_prime = Flag::degenerate;
    Flag is_classical_prime = Flag::degenerate;
    Flag is_classical_one_absorbing_prime = Flag::degenerate;
    Flag is_second = Flag::degenerate;
    Flag is_pure = Flag::degenerate;
    Flag is_essential = Flag::degenerate;
};

/// ae ∈ V implies a ∈ (V:E) or e ∈ V. Proper submodules only.
inline Flag is_prime_submodule(const Submodule& V) {
    if (!V.is_proper()) return Flag::degenerate;
    const auto& E = V.module;
    const auto colon = residual_ideal(V, Subset::full(E.order()));
    for (elem_t a = 0; a < E.ring().order(); ++a) {
        if (colon.contains(a)) continue;
        for (elem_t e = 0; e < E.order(); ++e)
            if (!V.contains(e) && V.contains(E.act(a, e))) return Flag::no;
    }
    return Flag::yes;
}

/// abe ∈ V implies ae ∈ V or be ∈ V.
inline Flag is_classical_prime_submodule(const Submodule& V) {
    if (!V.is_proper()) return Flag::degenerate;
    const auto& E = V.module;
    const auto& R = E.ring();
    for (elem_t e = 0; e < E.order(); ++e)
        for (elem_t a = 0; a < R.order(); ++a) {
            const elem_t ae = E.act(a, e);
            if (V.contains(ae)) continue;
            for (elem_t b = 0; b < R.order(); ++b)
                if (V.contains(E.act(b, ae)) && !V.contains(E.act(b, e))) return Flag::no;
        }
    return Flag::yes;
}

/// For nonunits a, b, c: abce ∈ V implies abe ∈ V or ce ∈ V.
inline Flag is_classical_one_absorbing_prime_submodule(const Submodule& V) {
    if (!V.is_proper()) return Flag::degenerate;
    const auto& E = V.module;
    const auto& R = E.ring();
    const auto nu = nonunits(R).elements();
    // Only the product ab matters, so range over the distinct products of two nonunits.
    Subset products(R.order());
    for (elem_t a : nu)
        for (elem_t b : nu) products.insert(R.mul(a, b));
    bool ok = true;
    products.for_each([&](elem_t ab) {
        if (!ok) return;
        for (elem_t e = 0; e < E.order() && ok; ++e) {
            const elem_t abe = E.act(ab, e);
            if (V.contains(abe)) continue;
            for (elem_t c : nu)
                if (!V.contains(E.act(c, e)) && V.contains(E.act(c, abe))) {
                    ok = false;
                    break;
                }
        }
    });
    return to_flag(ok);
}

/// Nonzero V with aV ∈ {0, V} for every a.
inline Flag is_second_submodule(const Submodule& V) {
    if (V.is_zero()) return Flag::degenerate;
    for (elem_t a = 0; a < V.module.ring().order(); ++a) {
        const auto aV = scalar_times(a, V);
        if (!aV.is_zero() && !(aV.elements == V.elements)) return Flag::no;
    }
    return Flag::yes;
}

/// IE ∩ V = IV for every ideal I.
inline Flag is_pure_submodule(const Submodule& V, const std::vector<Ideal>& ideals) {
    const auto E = whole_submodule(V.module);
    for (const auto& I : ideals) {
        const auto IE = ideal_times(I, E);
        const auto IV = ideal_times(I, V);
        if (!((IE.elements & V.elements) == IV.elements)) return Flag::no;
    }
    return Flag::yes;
}

/// Nonzero V meeting every nonzero submodule; checking nonzero cyclic submodules suffices.
inline Flag is_essential_submodule(const Submodule& V) {
    if (V.is_zero()) return Flag::degenerate;
    const auto& E = V.module;
    for (elem_t e = 1; e < E.order(); ++e) {
        const auto Ae = submodule_generate(E, {e});
        if ((Ae.elements & V.elements).size() == 1) return Flag::no;
    }
    return Flag::yes;
}

inline SubmoduleClassification classify_submodule(const Submodule& V, const Caps& caps = {}) {
    SubmoduleClassification c;
    c.is_prime = is_prime_submodule(V);
    c.is_classical_prime = is_classical_prime_submodule(V);
    c.is_classical_one_absorbing_prime = is_classical_one_absorbing_prime_submodule(V);
    c.is_second = is_second_submodule(V);
    c.is_pure = is_pure_submodule(V, enumerate_ideals(V.module.ring(), caps));
    c.is_essential = is_essential_submodule(V);
    return c;
}

/// Spec(E): the prime submodules.
inline std::vector<Submodule> spec_enumerate(const FiniteModule& E, const Caps& caps = {}) {
    std::vector<Submodule> out;
    for (auto& V : enumerate_submodules(E, caps))
        if (is_prime_submodule(V) == Flag::yes) out.push_back(std::move(V));
    return out;
}

// ---------------------------------------------------------------------------
// Derived modules
// ---------------------------------------------------------------------------

struct QuotientModule {
    FiniteModule module;
    /// Parent element -> coset index.
    std::vector<elem_t> projection;
    /// Coset index -> smallest representative.
    std::vector<elem_t> representative;
};

inline QuotientModule quotient_module(const Submodule& V) {
    const auto& E = V.module;
    std::vector<elem_t> proj(E.order(), static_cast<elem_t>(-1));
    std::vector<elem_t> reps;
    for (elem_t e = 0; e < E.order(); ++e) {
        if (proj[e] != static_cast<elem_t>(-1)) continue;
        const auto idx = static_cast<elem_t>(reps.size());
        reps.push_back(e);
        V.elements.for_each([&](elem_t v) { proj[E.add(e, v)] = idx; });
    }
    const std::size_t m = reps.size();
    const auto& R = E.ring();
    auto d = std::make_shared<detail::ModuleData>();
    d->ring = R;
    d->n = m;
    d->add.resize(m * m);
    d->act.resize(R.order() * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) d->add[x * m + y] = proj[E.add(reps[x], reps[y])];
    for (elem_t a = 0; a < R.order(); ++a)
        for (std::size_t x = 0; x < m; ++x) d->act[a * m + x] = proj[E.act(a, reps[x])];
    d->names.resize(m);
    for (std::size_t x = 0; x < m; ++x) d->names[x] = E.name(reps[x]);
    std::string gens;
    for (elem_t g : generators_of(V)) gens += " " + E.name(g);
    d->descriptor = "(quot " + E.descriptor() + " (sub" + gens + "))";
    d->kind = ModuleKind::quotient;
    d->parent = E;
    d->structure_map = proj;
    return QuotientModule{FiniteModule::from_trusted(std::move(d)), std::move(proj), std::move(reps)};
}

/// R/I as an R-module.
inline FiniteModule FiniteModule::cyclic(const Ideal& I) {
    const auto S = self(I.ring);
    auto q = quotient_module(Submodule{S, I.elements, I.generators});
    auto d = std::make_shared<detail::ModuleData>(*std::shared_ptr<const detail::ModuleData>(q.module.data_));
    std::string gens;
    for (elem_t e : ideal_generators(I)) gens += " " + I.ring.name(e);
    d->descriptor = "(cyclic " + I.ring.descriptor() + " (ideal" + gens + "))";
    d->kind = ModuleKind::cyclic;
    return from_trusted(std::move(d));
}

struct SubmoduleAsModule {
    FiniteModule module;
    /// Element of the new module -> element of the ambient module.
    std::vector<elem_t> inclusion;
};

/// V viewed as a module in its own right.
inline SubmoduleAsModule submodule_as_module(const Submodule& V) {
    const auto& E = V.module;
    const auto& R = E.ring();
    std::vector<elem_t> incl = V.elements.elements();
    std::vector<elem_t> index(E.order(), 0);
    for (std::size_t i = 0; i < incl.size(); ++i) index[incl[i]] = static_cast<elem_t>(i);
    const std::size_t m = incl.size();
    auto d = std::make_shared<detail::ModuleData>();
    d->ring = R;
    d->n = m;
    d->add.resize(m * m);
    d->act.resize(R.order() * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) d->add[x * m + y] = index[E.add(incl[x], incl[y])];
    for (elem_t a = 0; a < R.order(); ++a)
        for (std::size_t x = 0; x < m; ++x) d->act[a * m + x] = index[E.act(a, incl[x])];
    d->names.resize(m);
    for (std::size_t x = 0; x < m; ++x) d->names[x] = E.name(incl[x]);
    std::string gens;
    for (elem_t g : generators_of(V)) gens += " " + E.name(g);
    d->descriptor = "(sub " + E.descriptor() + gens + ")";
    d->kind = ModuleKind::submodule;
    d->parent = E;
    d->structure_map = incl;
    return SubmoduleAsModule{FiniteModule::from_trusted(std::move(d)), std::move(incl)};
}

/// E as a module over R/I, for an ideal I ⊆ ann(E).
inline FiniteModule restrict_to_quotient(const FiniteModule& E, const QuotientRing& Q, const Ideal& I) {
    const auto annE = annihilator(E);
    if (!I.elements.subset_of(annE.elements))
        throw Error(ErrorCode::InvalidStructure, "ideal does not annihilate the module");
    auto d = std::make_shared<detail::ModuleData>();
    d->ring = Q.ring;
    d->n = E.order();
    d->add.resize(E.order() * E.order());
    for (elem_t x = 0; x < E.order(); ++x)
        for (elem_t y = 0; y < E.order(); ++y) d->add[x * E.order() + y] = E.add(x, y);
    d->act.resize(Q.ring.order() * E.order());
    for (elem_t q = 0; q < Q.ring.order(); ++q)
        for (elem_t e = 0; e < E.order(); ++e) d->act[q * E.order() + e] = E.act(Q.representative[q], e);
    d->names.resize(E.order());
    for (elem_t e = 0; e < E.order(); ++e) d->names[e] = E.name(e);
    d->descriptor = "(over " + Q.ring.descriptor() + " " + E.descriptor() + ")";
    d->kind = ModuleKind::restricted;
    d->parent = E;
    return FiniteModule::from_trusted(std::move(d));
}

inline std::string submodule_to_string(const Submodule& V) {
    std::string s = "{";
    bool first = true;
    V.elements.for_each([&](elem_t e) {
        if (!first) s += ", ";
        first = false;
        s += V.module.name(e);
    });
    return s + "}";
}

} // namespace annmul
