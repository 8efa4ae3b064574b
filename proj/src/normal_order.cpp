#include "sy/normal_order.hpp"

#include <mutex>
#include <stdexcept>

namespace sy {

bool NormalOrdering::is_normal(const Word& w) {
    for (std::size_t k = 1; k < w.size(); ++k)
        if (!in_order(w[k - 1], w[k])) return false;
    return true;
}

void NormalOrdering::validate(const Element& x) const {
    for (const auto& t : x.terms())
        for (Symbol s : t.word) validate(s);
}

std::size_t NormalOrdering::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

void NormalOrdering::clear_cache() const {
    std::unique_lock lock(mutex_);
    cache_.clear();
}

Element NormalOrdering::rewrite_pair(Symbol a, Symbol b) const {
    validate(a);
    validate(b);
    if (a == b && a.parity() == 1) return bracket(a, a) * Rational(1, 2);
    Element swapped = Element::word(Word{b, a}, (a.parity() & b.parity()) ? -1 : 1);
    return swapped + bracket(a, b);
}

void NormalOrdering::mul_letter_into(TermAccumulator& acc, const Word& m, Symbol x, const Rational& c) const {
    if (m.empty() || in_order(m.back(), x)) {
        Word w = m;
        w.push_back(x);
        acc.add(w, c);
        return;
    }
    Word key = m;
    key.push_back(x);
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            acc.add(it->second, c);
            return;
        }
    }
    Element value = compute_mul_letter(m, x);
    acc.add(value, c);
    std::unique_lock lock(mutex_);
    // long random words can fill memory; start over past the bound
    if (cache_.size() >= kCacheLimit) cache_.clear();
    cache_.try_emplace(std::move(key), std::move(value));
}

Element NormalOrdering::compute_mul_letter(const Word& m, Symbol x) const {
    Symbol y = m.back();
    Word head(m.begin(), m.end() - 1);
    TermAccumulator acc;
    if (y == x) {
        // odd square
        Element sq = bracket(x, x);
        for (const auto& t : sq.terms()) fold_into(acc, head, t.word, t.coeff * Rational(1, 2));
        return acc.finish();
    }
    Rational sign = (x.parity() & y.parity()) ? -1 : 1;
    TermAccumulator inner;
    mul_letter_into(inner, head, x, 1);
    Element moved = inner.finish();
    for (const auto& t : moved.terms()) mul_letter_into(acc, t.word, y, t.coeff * sign);
    Element br = bracket(y, x);
    for (const auto& t : br.terms()) fold_into(acc, head, t.word, t.coeff);
    return acc.finish();
}

void NormalOrdering::fold_into(TermAccumulator& acc, const Word& m, const Word& w, const Rational& c) const {
    if (w.empty()) {
        acc.add(m, c);
        return;
    }
    if (w.size() == 1) {
        mul_letter_into(acc, m, w[0], c);
        return;
    }
    if ((m.empty() || in_order(m.back(), w.front())) && is_normal(w)) {
        Word out = m;
        out.insert(out.end(), w.begin(), w.end());
        acc.add(out, c);
        return;
    }
    Element cur = Element::word(m, c);
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        TermAccumulator step;
        for (const auto& t : cur.terms()) mul_letter_into(step, t.word, w[k], t.coeff);
        cur = step.finish();
    }
    for (const auto& t : cur.terms()) mul_letter_into(acc, t.word, w.back(), t.coeff);
}

Element NormalOrdering::normalize(const Element& x) const {
    validate(x);
    TermAccumulator acc;
    for (const auto& t : x.terms()) fold_into(acc, Word{}, t.word, t.coeff);
    return acc.finish();
}

Element NormalOrdering::multiply(const Element& x, const Element& y) const {
    if (x.is_zero() || y.is_zero()) return {};
    Element nx = x;
    for (const auto& t : x.terms())
        if (!is_normal(t.word)) {
            nx = normalize(x);
            break;
        }
    validate(y);
    TermAccumulator acc;
    for (const auto& a : nx.terms())
        for (const auto& b : y.terms()) fold_into(acc, a.word, b.word, a.coeff * b.coeff);
    return acc.finish();
}

Element NormalOrdering::bracket_normalized(const Element& x, const Element& y) const {
    int px = x.homogeneous_parity();
    int py = y.homogeneous_parity();
    Element r = multiply(x, y);
    Element yx = multiply(y, x);
    if (px & py)
        r += yx;
    else
        r -= yx;
    return r;
}

}  // namespace sy
