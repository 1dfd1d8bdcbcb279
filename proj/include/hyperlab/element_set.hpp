#pragma once

/**
 * @file element_set.hpp
 * @brief Fixed-width subset of a finite carrier {0..n-1}.
 *
 * Every set-valued quantity in the engine (hyperproducts, powers,
 * hyperideals, members of the product classes) is an ElementSet.
 * Iteration is always in ascending index order.
 */

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperlab {

using Element = std::uint32_t;

class ElementSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;
    static constexpr std::size_t kWords = 4;
    /// Largest carrier the engine accepts.
    static constexpr std::size_t kCapacity = kWords * kWordBits;

    constexpr ElementSet() = default;

    ElementSet(std::initializer_list<Element> members) {
        for (Element e : members) insert(e);
    }

    static ElementSet singleton(Element e) {
        ElementSet s;
        s.insert(e);
        return s;
    }

    /// {0..n-1}
    static ElementSet full(std::size_t n) {
        ElementSet s;
        for (std::size_t w = 0; w < kWords && n > 0; ++w) {
            const std::size_t take = n < kWordBits ? n : kWordBits;
            s.words_[w] = take == kWordBits ? ~Word{0} : ((Word{1} << take) - 1);
            n -= take;
        }
        return s;
    }

    template <class Range>
    static ElementSet from_range(const Range& r) {
        ElementSet s;
        for (auto e : r) s.insert(static_cast<Element>(e));
        return s;
    }

    bool contains(Element e) const { return (words_[e / kWordBits] >> (e % kWordBits)) & 1U; }
    void insert(Element e) { words_[e / kWordBits] |= Word{1} << (e % kWordBits); }
    void erase(Element e) { words_[e / kWordBits] &= ~(Word{1} << (e % kWordBits)); }

    bool empty() const {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    std::size_t size() const {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Least member; undefined on the empty set.
    Element min() const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w]) return static_cast<Element>(w * kWordBits + std::countr_zero(words_[w]));
        return 0;
    }

    bool subset_of(const ElementSet& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    bool intersects(const ElementSet& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    ElementSet& operator-=(const ElementSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < kWords; ++w) {
            Word bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(static_cast<Element>(w * kWordBits + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Element> members() const {
        std::vector<Element> out;
        out.reserve(size());
        for_each([&](Element e) { out.push_back(e); });
        return out;
    }

    bool operator==(const ElementSet&) const = default;

    /// Lexicographic order on the ascending member lists.
    friend bool lex_less(const ElementSet& a, const ElementSet& b) {
        // The least index in exactly one set decides. The set holding it is
        // smaller unless the other set has no members beyond it (a prefix).
        for (std::size_t w = 0; w < kWords; ++w) {
            const Word diff = a.words_[w] ^ b.words_[w];
            if (!diff) continue;
            const Word low = diff & (~diff + 1);
            const bool a_has = (a.words_[w] & low) != 0;
            const ElementSet& other = a_has ? b : a;
            bool other_continues = false;
            const Word above = ~((low << 1) - 1);
            if (other.words_[w] & above) other_continues = true;
            for (std::size_t v = w + 1; v < kWords && !other_continues; ++v)
                if (other.words_[v]) other_continues = true;
            return other_continues ? a_has : !a_has;
        }
        return false;
    }

    /// Ascending by size, then lexicographic.
    friend bool size_lex_less(const ElementSet& a, const ElementSet& b) {
        const auto sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        return lex_less(a, b);
    }

    const std::array<Word, kWords>& words() const { return words_; }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](Element e) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        });
        return s + "}";
    }

private:
    std::array<Word, kWords> words_{};
};

/// Namespace-scope declarations so the orderings can be passed by name.
bool lex_less(const ElementSet& a, const ElementSet& b);
bool size_lex_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : s.words()) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace hyperlab
