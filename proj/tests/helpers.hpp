#pragma once

#include <string>
#include <vector>

#include "annmul/corpus.hpp"

namespace th {

using namespace annmul;

inline FiniteRing Z(std::int64_t n) { return FiniteRing::integers_mod(n); }

inline std::vector<std::string> names(const FiniteRing& R, const Subset& s) {
    std::vector<std::string> out;
    s.for_each([&](elem_t x) { out.push_back(R.name(x)); });
    return out;
}

inline std::vector<std::string> names(const Ideal& I) { return names(I.ring, I.elements); }

inline std::vector<std::string> names(const FiniteModule& E, const Subset& s) {
    std::vector<std::string> out;
    s.for_each([&](elem_t x) { out.push_back(E.name(x)); });
    return out;
}

inline std::vector<std::string> names(const Submodule& V) { return names(V.module, V.elements); }

inline elem_t el(const FiniteRing& R, const std::string& n) { return R.find(n).value(); }
inline elem_t el(const FiniteModule& E, const std::string& n) { return E.find(n).value(); }

inline Ideal ideal(const FiniteRing& R, std::vector<std::string> gens) {
    std::vector<elem_t> g;
    for (const auto& n : gens) g.push_back(el(R, n));
    return ideal_generate(R, g);
}

inline FiniteModule z2_z4_over_z8() {
    const auto R = Z(8);
    const FiniteModule parts[2] = {FiniteModule::cyclic(ideal_generate(R, {2})),
                                   FiniteModule::cyclic(ideal_generate(R, {4}))};
    return FiniteModule::direct_sum(parts);
}

inline FiniteModule f2_squared() { return FiniteModule::free(Z(2), 2); }

using S = std::vector<std::string>;

} // namespace th
