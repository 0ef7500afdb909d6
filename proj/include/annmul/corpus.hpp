#pragma once

/**
 * @file corpus.hpp
 * @brief Deterministic instance corpora: fixed reference instances plus seeded random ones.
 */

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "annmul/classify.hpp"
#include "annmul/polyquot.hpp"

namespace annmul {

struct InstanceBudget {
    std::size_t max_ring_order = 12;
    std::size_t max_module_order = 16;
    std::size_t max_instances = 200;
    std::uint64_t seed = 1;
    std::size_t degree_bound = 2;
    Caps caps{};

    void validate() const {
        if (max_ring_order < 2) throw Error(ErrorCode::InvalidStructure, "max ring order must be at least 2");
        if (max_module_order < 2) throw Error(ErrorCode::InvalidStructure, "max module order must be at least 2");
    }
};

struct Instance {
    std::string descriptor;
    FiniteModule module;
    bool reference = false;
};

inline FiniteRing local_ring_xy() {
    return polynomial_quotient(2, std::vector<std::string>{"x", "y"}, std::vector<std::string>{"x^2", "x*y", "y^2"});
}

inline FiniteRing truncated_f2(unsigned n) {
    return polynomial_quotient(2, std::vector<std::string>{"X"}, std::vector<std::string>{"X^" + std::to_string(n)});
}

/// The fixed instances every corpus starts with, independent of the budget.
inline std::vector<Instance> reference_instances() {
    std::vector<Instance> out;
    auto add = [&](FiniteModule m) { out.push_back(Instance{m.descriptor(), std::move(m), true}); };
    const auto Z = [](std::int64_t n) { return FiniteRing::integers_mod(n); };

    {
        const auto Z8 = Z(8);
        const FiniteModule parts[2] = {FiniteModule::cyclic(ideal_generate(Z8, {2})),
                                       FiniteModule::cyclic(ideal_generate(Z8, {4}))};
        add(FiniteModule::direct_sum(parts));
    }
    {
        const auto A = local_ring_xy();
        add(tvon_witness_module(A, ideal_generate(A, {*A.find("x")})));
    }
    {
        const auto A = truncated_f2(3);
        add(FiniteModule::cyclic(ideal_generate(A, {*A.find("X^2")})));
    }
    for (std::int64_t n : {12, 6, 4, 8}) add(FiniteModule::self(Z(n)));
    {
        const auto Z4 = Z(4);
        add(tvon_witness_module(Z4, ideal_generate(Z4, {2})));
        add(FiniteModule::cyclic(ideal_generate(Z4, {2})));
    }
    add(FiniteModule::free(Z(2), 2));
    add(FiniteModule::free(Z(3), 2));
    add(FiniteModule::self(Z(5)));
    add(FiniteModule::self(Z(2)));
    add(FiniteModule::free(Z(12), 2));
    {
        const FiniteRing f[2] = {Z(2), Z(3)};
        const auto R = FiniteRing::product(f);
        for (const auto& I : enumerate_ideals(R))
            if (I.is_proper()) add(tvon_witness_module(R, I));
    }
    return out;
}

/// Rings available to the random generator, all of order at most `max_order`.
inline std::vector<FiniteRing> ring_pool(std::size_t max_order) {
    std::vector<FiniteRing> pool;
    for (std::int64_t n = 2; n <= static_cast<std::int64_t>(max_order); ++n) pool.push_back(FiniteRing::integers_mod(n));
    for (std::int64_t a = 2; a <= static_cast<std::int64_t>(max_order); ++a)
        for (std::int64_t b = a; a * b <= static_cast<std::int64_t>(max_order); ++b) {
            const FiniteRing f[2] = {FiniteRing::integers_mod(a), FiniteRing::integers_mod(b)};
            pool.push_back(FiniteRing::product(f));
        }
    for (std::int64_t c : {2, 3}) {
        if (4 * c > static_cast<std::int64_t>(max_order)) continue;
        const FiniteRing f[3] = {FiniteRing::integers_mod(2), FiniteRing::integers_mod(2), FiniteRing::integers_mod(c)};
        pool.push_back(FiniteRing::product(f));
    }
    struct PolySpec {
        std::int64_t p;
        std::vector<std::string> vars, gens;
    };
    const std::vector<PolySpec> polys = {
        {2, {"X"}, {"X^2"}},          {2, {"X"}, {"X^3"}},          {2, {"X"}, {"X^2+X+1"}},
        {3, {"X"}, {"X^2"}},          {3, {"X"}, {"X^2+1"}},        {2, {"x", "y"}, {"x^2", "x*y", "y^2"}},
        {2, {"x", "y"}, {"x^2", "y^2"}}, {2, {"X"}, {"X^4"}},
    };
    for (const auto& s : polys) {
        auto R = polynomial_quotient(s.p, s.vars, s.gens);
        if (R.order() <= max_order) pool.push_back(std::move(R));
    }
    return pool;
}

namespace detail {

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline std::vector<Ideal> proper_ideals(const FiniteRing& R, const Caps& caps) {
    std::vector<Ideal> out;
    for (auto& I : enumerate_ideals(R, caps))
        if (I.is_proper()) out.push_back(std::move(I));
    return out;
}

} // namespace detail

/// Reference instances followed by `max_instances` random ones drawn from cyclic modules,
/// direct sums of up to three cyclics, quotients of such sums, and product-ring modules.
/// The same budget always yields the same descriptor list.
inline std::vector<Instance> generate_instances(const InstanceBudget& budget) {
    budget.validate();
    auto out = reference_instances();
    if (budget.max_instances == 0) return out;
    std::mt19937_64 rng(budget.seed);
    const auto pool = ring_pool(budget.max_ring_order);
    std::vector<std::vector<Ideal>> ideals;
    for (const auto& R : pool) ideals.push_back(detail::proper_ideals(R, budget.caps));
    std::vector<std::size_t> product_rings;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (pool[i].kind() == RingKind::product) product_rings.push_back(i);

    auto random_cyclic = [&](std::size_t r) {
        const auto& I = ideals[r][detail::pick(rng, ideals[r].size())];
        return FiniteModule::cyclic(I);
    };

    std::size_t made = 0;
    const std::size_t max_attempts = 100 * budget.max_instances + 100;
    for (std::size_t attempt = 0; attempt < max_attempts && made < budget.max_instances; ++attempt) {
        const std::size_t kind = detail::pick(rng, 8);
        std::optional<FiniteModule> m;
        if (kind <= 2) {
            m = random_cyclic(detail::pick(rng, pool.size()));
        } else if (kind <= 4) {
            const std::size_t r = detail::pick(rng, pool.size());
            const std::size_t k = 2 + detail::pick(rng, 2);
            std::vector<FiniteModule> parts;
            std::size_t order = 1;
            for (std::size_t i = 0; i < k; ++i) {
                parts.push_back(random_cyclic(r));
                order *= parts.back().order();
            }
            if (order > budget.max_module_order) continue;
            m = FiniteModule::direct_sum(parts);
        } else if (kind == 5) {
            const std::size_t r = detail::pick(rng, pool.size());
            const FiniteModule parts[2] = {random_cyclic(r), random_cyclic(r)};
            if (parts[0].order() * parts[1].order() > 4 * budget.max_module_order) continue;
            const auto E = FiniteModule::direct_sum(parts);
            const elem_t g = static_cast<elem_t>(1 + detail::pick(rng, E.order() - 1));
            const auto V = submodule_generate(E, {g});
            if (V.is_whole()) continue;
            auto q = quotient_module(V);
            if (q.module.order() > budget.max_module_order) continue;
            m = std::move(q.module);
        } else {
            if (product_rings.empty()) continue;
            const auto& R = pool[product_rings[detail::pick(rng, product_rings.size())]];
            std::vector<FiniteModule> parts;
            std::size_t order = 1;
            for (const auto& F : R.factors()) {
                auto I = detail::proper_ideals(F, budget.caps);
                parts.push_back(FiniteModule::cyclic(I[detail::pick(rng, I.size())]));
                order *= parts.back().order();
            }
            if (order > budget.max_module_order) continue;
            m = FiniteModule::product(parts);
        }
        if (!m || m->order() > budget.max_module_order || m->order() < 2) continue;
        out.push_back(Instance{m->descriptor(), std::move(*m), false});
        ++made;
    }
    return out;
}

} // namespace annmul
