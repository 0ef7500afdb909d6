#pragma once

/** @file homs.hpp
 *  @brief Module homomorphisms between finite modules.
 */

#include <deque>
#include <vector>

#include "annmul/finmod.hpp"

namespace annmul {

struct ModuleHom {
    FiniteModule source;
    FiniteModule target;
    /// map[e] is the image of source element e.
    std::vector<elem_t> map;

    Submodule kernel() const {
        Subset k(source.order());
        for (elem_t e = 0; e < source.order(); ++e)
            if (map[e] == 0) k.insert(e);
        return submodule_from_set(source, std::move(k));
    }
    Submodule image() const {
        Subset im(target.order());
        for (elem_t y : map) im.insert(y);
        return submodule_from_set(target, std::move(im));
    }
    bool injective() const { return kernel().is_zero(); }
    bool surjective() const { return image().is_whole(); }
};

inline bool is_module_hom(const FiniteModule& E, const FiniteModule& F, const std::vector<elem_t>& map) {
    if (map.size() != E.order() || map[0] != 0) return false;
    for (elem_t x = 0; x < E.order(); ++x) {
        for (elem_t y = 0; y < E.order(); ++y)
            if (map[E.add(x, y)] != F.add(map[x], map[y])) return false;
        for (elem_t a = 0; a < E.ring().order(); ++a)
            if (map[E.act(a, x)] != F.act(a, map[x])) return false;
    }
    return true;
}

/// Extends generator images along x -> x + a g_i, rejecting inconsistent assignments.
/// Consistency on every such edge already forces additivity and linearity.
inline std::optional<std::vector<elem_t>> extend_from_generators(const FiniteModule& E, const FiniteModule& F,
                                                                 const std::vector<elem_t>& gens,
                                                                 const std::vector<elem_t>& images) {
    constexpr auto unset = static_cast<elem_t>(-1);
    std::vector<elem_t> map(E.order(), unset);
    map[0] = 0;
    std::deque<elem_t> queue{0};
    const auto& R = E.ring();
    while (!queue.empty()) {
        const elem_t x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (elem_t a = 0; a < R.order(); ++a) {
                const elem_t y = E.add(x, E.act(a, gens[i]));
                const elem_t fy = F.add(map[x], F.act(a, images[i]));
                if (map[y] == unset) {
                    map[y] = fy;
                    queue.push_back(y);
                } else if (map[y] != fy) {
                    return std::nullopt;
                }
            }
    }
    return map;
}

/// All A-linear maps E -> F, in lexicographic order of their tables.
///
/// Generator images are restricted to ann_F(ann(g)), the only admissible targets.
inline std::vector<ModuleHom> enumerate_homs(const FiniteModule& E, const FiniteModule& F, const Caps& caps = {}) {
    require_same_ring(E.ring(), F.ring());
    const auto gens = greedy_generators(E, Subset::full(E.order()));
    std::vector<std::vector<elem_t>> choices;
    double space = 1;
    for (elem_t g : gens) {
        choices.push_back(annihilator_in_module(F, annihilator_of_element(E, g)).elements.elements());
        space *= static_cast<double>(choices.back().size());
    }
    if (space > static_cast<double>(caps.max_homs))
        throw Error(ErrorCode::CapExceeded, "hom search space exceeds cap " + std::to_string(caps.max_homs));
    std::vector<ModuleHom> out;
    std::vector<std::size_t> pick(gens.size(), 0);
    std::vector<elem_t> images(gens.size());
    while (true) {
        for (std::size_t i = 0; i < gens.size(); ++i) images[i] = choices[i][pick[i]];
        if (auto m = extend_from_generators(E, F, gens, images)) out.push_back(ModuleHom{E, F, std::move(*m)});
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const ModuleHom& a, const ModuleHom& b) { return a.map < b.map; });
    return out;
}

inline ModuleHom identity_hom(const FiniteModule& E) {
    std::vector<elem_t> m(E.order());
    for (elem_t e = 0; e < E.order(); ++e) m[e] = e;
    return ModuleHom{E, E, std::move(m)};
}

inline ModuleHom projection_hom(const FiniteModule& E, const QuotientModule& Q) {
    return ModuleHom{E, Q.module, Q.projection};
}

inline ModuleHom inclusion_hom(const SubmoduleAsModule& S, const FiniteModule& E) {
    return ModuleHom{S.module, E, S.inclusion};
}

} // namespace annmul
