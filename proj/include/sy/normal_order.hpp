#pragma once

#include <shared_mutex>
#include <unordered_map>

#include "sy/element.hpp"

namespace sy {

/// PBW straightening over a Z2-graded alphabet. A concrete algebra supplies
/// the supercommutator of two generators; words are then rewritten with
///     y x  ->  (-1)^{|x||y|} x y + [y, x]     (y > x)
///     x x  ->  1/2 [x, x]                      (x odd)
/// until every word is nondecreasing with no repeated odd letter.
///
/// The rewrite result for each (normal word, letter) pair is memoized. The
/// cache is shared between threads; a key always maps to the same value, so
/// racing insertions are harmless.
class NormalOrdering {
public:
    virtual ~NormalOrdering() = default;

    /// Throws std::invalid_argument when s is not a generator of this algebra.
    virtual void validate(Symbol s) const = 0;
    /// The supercommutator [y, x] of two generators as an (unnormalized)
    /// combination of words of length <= 2.
    virtual Element bracket(Symbol y, Symbol x) const = 0;

    /// Unique normal-form representative of x.
    Element normalize(const Element& x) const;
    /// normalize(x * y).
    Element multiply(const Element& x, const Element& y) const;
    /// normalize(x y - (-1)^{|x||y|} y x).
    Element bracket_normalized(const Element& x, const Element& y) const;
    /// Expansion of the two-letter word a*b by one rewrite step.
    Element rewrite_pair(Symbol a, Symbol b) const;

    static bool is_normal(const Word& w);
    void validate(const Element& x) const;

    std::size_t cache_size() const;
    void clear_cache() const;

private:
    void mul_letter_into(TermAccumulator& acc, const Word& m, Symbol x, const Rational& c) const;
    void fold_into(TermAccumulator& acc, const Word& m, const Word& w, const Rational& c) const;
    Element compute_mul_letter(const Word& m, Symbol x) const;

    static constexpr std::size_t kCacheLimit = 300000;

    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<Word, Element, WordHash> cache_;
};

/// Ordered pair test used by the normal form: true when a*b is already in order.
inline bool in_order(Symbol a, Symbol b) { return a < b || (a == b && a.parity() == 0); }

}  // namespace sy
