#pragma once

// Z2-graded free associative algebra over the rationals: finite linear
// combinations of words in generator symbols.

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sy/rational.hpp"
#include "sy/symbol.hpp"

namespace sy {

using Word = boost::container::small_vector<Symbol, 6>;

int word_parity(const Word& w);
int word_loop_degree(const Word& w);
std::string word_str(const Word& w);
/// Storage order: shorter words first, then lexicographic by symbol code.
bool word_less(const Word& x, const Word& y);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

struct Term {
    Word word;
    Rational coeff;
};

class Element {
public:
    Element() = default;
    Element(Rational scalar);  // NOLINT(implicit)
    Element(std::int64_t scalar) : Element(Rational(scalar)) {}  // NOLINT(implicit)
    static Element symbol(Symbol s, Rational coeff = 1);
    static Element word(Word w, Rational coeff = 1);
    /// Builds an element from terms in any order; merges duplicates and drops zeros.
    static Element from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of the empty word.
    Rational constant_term() const;
    Alphabet alphabet() const { return alphabet_; }

    /// Parity shared by all terms, or nullopt when mixed. Zero is even.
    std::optional<int> parity() const;
    /// Parity, throwing std::invalid_argument when not homogeneous.
    int homogeneous_parity() const;
    int max_loop_degree() const;
    /// Terms of loop degree exactly k.
    Element degree_part(int k) const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rational& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rational& c) { return a *= c; }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    /// Free product: concatenation of words, no reordering.
    friend Element operator*(const Element& a, const Element& b);

    friend bool operator==(const Element& a, const Element& b);

    /// Canonical rendering, e.g. "t[2,2,1] - t[1,1,1]" or "1/2*t[1,2,1]*t[2,1,1]".
    std::string str() const;

private:
    void refresh_alphabet();

    std::vector<Term> terms_;  // sorted by word_less, nonzero coefficients
    Alphabet alphabet_ = Alphabet::none;
};

/// x*y - (-1)^{p(x)p(y)} y*x without normalization. Both arguments must be
/// parity-homogeneous.
Element supercommutator(const Element& x, const Element& y);

/// Hash-based accumulator used by the hot paths.
class TermAccumulator {
public:
    void add(const Word& w, const Rational& c);
    void add(const Element& e, const Rational& scale = 1);
    Element finish();
    bool empty() const { return map_.empty(); }

private:
    std::unordered_map<Word, Rational, WordHash> map_;
};

}  // namespace sy
