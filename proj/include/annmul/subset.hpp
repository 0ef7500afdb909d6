#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace annmul {

/// Index of an element inside a finite carrier. Index 0 is always the zero element.
using elem_t = std::uint32_t;

/// Dense bitset over a carrier {0, ..., n-1}.
class Subset {
public:
    Subset() = default;
    explicit Subset(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static Subset full(std::size_t universe) {
        Subset s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<elem_t>(i));
        return s;
    }

    template <class Range>
    static Subset of(std::size_t universe, const Range& elems) {
        Subset s(universe);
        for (auto e : elems) s.insert(static_cast<elem_t>(e));
        return s;
    }

    std::size_t universe() const noexcept { return n_; }

    bool contains(elem_t i) const noexcept {
        return i < n_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
    }
    void insert(elem_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void erase(elem_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    bool subset_of(const Subset& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }

    Subset& operator|=(const Subset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Subset& operator&=(const Subset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }

    friend bool operator==(const Subset&, const Subset&) = default;

    /// Total order used for deduplication only.
    friend bool operator<(const Subset& a, const Subset& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.words_ < b.words_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                f(static_cast<elem_t>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<elem_t> elements() const {
        std::vector<elem_t> out;
        out.reserve(size());
        for_each([&](elem_t e) { out.push_back(e); });
        return out;
    }

    std::size_t hash() const noexcept {
        std::size_t h = n_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Presentation order for lattices: smaller sets first, then by sorted element list.
inline bool presentation_less(const Subset& a, const Subset& b) {
    const auto sa = a.size();
    const auto sb = b.size();
    if (sa != sb) return sa < sb;
    return a.elements() < b.elements();
}

struct SubsetHash {
    std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

namespace detail {

/// Subgroup of a finite abelian group generated by `seeds`, with `add(a, b)` the group law.
template <class Add>
Subset additive_span(std::size_t n, Add&& add, const std::vector<elem_t>& seeds) {
    Subset group(n);
    group.insert(0);
    std::vector<elem_t> members{0};
    for (elem_t s : seeds) {
        if (group.contains(s)) continue;
        // Extend the group by the cyclic subgroup of s: H + <s> = union of cosets H + ks.
        std::vector<elem_t> fresh;
        elem_t shift = s;
        while (!group.contains(shift)) {
            for (elem_t h : members) {
                const elem_t x = add(h, shift);
                if (!group.contains(x)) {
                    group.insert(x);
                    fresh.push_back(x);
                }
            }
            shift = add(shift, s);
        }
        members.insert(members.end(), fresh.begin(), fresh.end());
    }
    return group;
}

} // namespace detail
} // namespace annmul
