#pragma once

/** @file analysis.hpp
 *  @brief Per-instance memo of the classifier results shared by the property checks.
 */

#include <optional>
#include <vector>

#include "annmul/classify.hpp"
#include "annmul/corpus.hpp"

namespace annmul {

class Analysis {
public:
    Analysis(Instance inst, Caps caps) : inst_(std::move(inst)), caps_(caps) {}

    const Instance& instance() const { return inst_; }
    const FiniteModule& module() const { return inst_.module; }
    const FiniteRing& ring() const { return inst_.module.ring(); }
    const std::string& descriptor() const { return inst_.descriptor; }
    const Caps& caps() const { return caps_; }
    bool is_zero() const { return module().order() == 1; }

    const Verdict& annmult() { return get(annmult_, [&] { return is_annihilator_multiplication(module(), caps_); }); }
    const AnnihilatorLattice& lattice() { return get(lattice_, [&] { return annihilator_lattice(module()); }); }
    const Verdict& multiplication() { return get(mult_, [&] { return is_multiplication(module(), caps_); }); }
    const Verdict& comultiplication() { return get(comult_, [&] { return is_comultiplication(module(), caps_); }); }
    const Verdict& vn_regular() { return get(vn_, [&] { return is_vn_regular_module(module()); }); }
    const Verdict& baer() { return get(baer_, [&] { return is_baer_module(module()); }); }
    const BasicModuleFlags& basic() { return get(basic_, [&] { return classify_module_basic(module()); }); }
    const TorsionInfo& torsion() { return get(torsion_, [&] { return torsion_set(module()); }); }
    const Ideal& annihilator_ideal() { return get(ann_, [&] { return annihilator(module()); }); }

    /// Throws CapExceeded on every call once the lattice proved too large.
    const std::vector<Submodule>& submodules() {
        if (submodules_capped_) throw Error(ErrorCode::CapExceeded, *submodules_capped_);
        if (!submodules_) {
            try {
                submodules_ = enumerate_submodules(module(), caps_);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::CapExceeded) submodules_capped_ = e.what();
                throw;
            }
        }
        return *submodules_;
    }

    /// Annihilators of all nonzero submodules: the intersection closure of { ann(e) : e != 0 },
    /// since ann(Ae_1 + ... + Ae_k) = ∩ ann(e_i). Needs no lattice enumeration.
    const std::vector<Ideal>& submodule_annihilators() {
        return get(sub_anns_, [&] {
            std::vector<Subset> found;
            auto known = [&](const Subset& s) { return std::find(found.begin(), found.end(), s) != found.end(); };
            for (elem_t e = 1; e < module().order(); ++e) {
                auto s = annihilator_of_element(module(), e).elements;
                if (!known(s)) found.push_back(std::move(s));
            }
            for (std::size_t i = 0; i < found.size(); ++i)
                for (std::size_t j = 0; j < i; ++j) {
                    auto s = found[i] & found[j];
                    if (!known(s)) found.push_back(std::move(s));
                }
            std::vector<Ideal> out;
            for (auto& s : found) out.push_back(ideal_from_set(ring(), std::move(s)));
            std::sort(out.begin(), out.end());
            return out;
        });
    }

private:
    template <class T, class F>
    const T& get(std::optional<T>& slot, F&& make) {
        if (!slot) slot = make();
        return *slot;
    }

    Instance inst_;
    Caps caps_;
    std::optional<Verdict> annmult_, mult_, comult_, vn_, baer_;
    std::optional<AnnihilatorLattice> lattice_;
    std::optional<BasicModuleFlags> basic_;
    std::optional<TorsionInfo> torsion_;
    std::optional<Ideal> ann_;
    std::optional<std::vector<Submodule>> submodules_;
    std::optional<std::string> submodules_capped_;
    std::optional<std::vector<Ideal>> sub_anns_;
};

} // namespace annmul
