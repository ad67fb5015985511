#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace indep {

using Element = std::uint32_t;

/// Subset of {0, ..., n-1} stored as a bitset.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<Element> members)
        : ElementSet(universe) {
        for (Element e : members) insert(e);
    }
    template <class Range>
    static ElementSet of(std::size_t universe, const Range& members) {
        ElementSet s(universe);
        for (auto e : members) s.insert(static_cast<Element>(e));
        return s;
    }
    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Element e) const noexcept {
        return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u);
    }
    void insert(Element e);
    void erase(Element e) noexcept {
        if (e < universe_) words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Members in ascending order.
    std::vector<Element> elements() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    bool is_subset_of(const ElementSet& other) const noexcept;
    ElementSet& operator|=(const ElementSet& other);
    ElementSet& operator&=(const ElementSet& other);
    ElementSet& operator-=(const ElementSet& other);
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    /// Canonical order: by cardinality, then lexicographically on the sorted
    /// member lists.
    friend bool canonical_less(const ElementSet& a, const ElementSet& b);

    std::size_t hash() const noexcept;
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

bool canonical_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace indep
