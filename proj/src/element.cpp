#include "sy/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace sy {

int word_parity(const Word& w) {
    int p = 0;
    for (Symbol s : w) p ^= s.parity();
    return p;
}

int word_loop_degree(const Word& w) {
    int d = 0;
    for (Symbol s : w) d += s.loop_degree();
    return d;
}

std::string word_str(const Word& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += "*";
        s += w[k].str();
    }
    return s;
}

bool word_less(const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
    for (Symbol s : w) {
        std::uint64_t k = s.code();
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        h = (h ^ k) * 0x100000001b3ULL + 0x7f4a7c15;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

namespace {

Alphabet merge_alphabet(Alphabet x, Alphabet y) {
    if (x == Alphabet::none) return y;
    if (y == Alphabet::none || x == y) return x;
    throw std::invalid_argument("cannot combine elements over different alphabets");
}

Alphabet word_alphabet(const Word& w) {
    Alphabet a = Alphabet::none;
    for (Symbol s : w) a = merge_alphabet(a, alphabet_of(s.family()));
    return a;
}

}  // namespace

Element::Element(Rational scalar) {
    if (!scalar.is_zero()) terms_.push_back({Word{}, std::move(scalar)});
}

Element Element::symbol(Symbol s, Rational coeff) { return word(Word{s}, std::move(coeff)); }

Element Element::word(Word w, Rational coeff) {
    Element e;
    if (coeff.is_zero()) return e;
    e.alphabet_ = word_alphabet(w);
    e.terms_.push_back({std::move(w), std::move(coeff)});
    return e;
}

Element Element::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return word_less(x.word, y.word); });
    Element e;
    for (auto& t : terms) {
        if (!e.terms_.empty() && e.terms_.back().word == t.word) {
            e.terms_.back().coeff += t.coeff;
            if (e.terms_.back().coeff.is_zero()) e.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            e.terms_.push_back(std::move(t));
        }
    }
    e.refresh_alphabet();
    return e;
}

void Element::refresh_alphabet() {
    alphabet_ = Alphabet::none;
    for (const auto& t : terms_) alphabet_ = merge_alphabet(alphabet_, word_alphabet(t.word));
}

Rational Element::constant_term() const {
    if (!terms_.empty() && terms_.front().word.empty()) return terms_.front().coeff;
    return 0;
}

std::optional<int> Element::parity() const {
    if (terms_.empty()) return 0;
    int p = word_parity(terms_.front().word);
    for (const auto& t : terms_)
        if (word_parity(t.word) != p) return std::nullopt;
    return p;
}

int Element::homogeneous_parity() const {
    auto p = parity();
    if (!p) throw std::invalid_argument("element is not parity-homogeneous: " + str());
    return *p;
}

int Element::max_loop_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, word_loop_degree(t.word));
    return d;
}

Element Element::degree_part(int k) const {
    Element e;
    for (const auto& t : terms_)
        if (word_loop_degree(t.word) == k) e.terms_.push_back(t);
    e.alphabet_ = e.terms_.empty() ? Alphabet::none : alphabet_;
    return e;
}

Element Element::operator-() const {
    Element e = *this;
    for (auto& t : e.terms_) t.coeff = -t.coeff;
    return e;
}

Element& Element::operator+=(const Element& o) {
    if (o.terms_.empty()) return *this;
    alphabet_ = merge_alphabet(alphabet_, o.alphabet_);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && word_less(i->word, j->word))) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || word_less(j->word, i->word)) {
            out.push_back(*j++);
        } else {
            Rational c = i->coeff + j->coeff;
            if (!c.is_zero()) out.push_back({std::move(i->word), std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    if (terms_.empty()) alphabet_ = Alphabet::none;
    return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element& Element::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        alphabet_ = Alphabet::none;
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    if (a.is_zero() || b.is_zero()) return {};
    merge_alphabet(a.alphabet_, b.alphabet_);
    TermAccumulator acc;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            Word w = x.word;
            w.insert(w.end(), y.word.begin(), y.word.end());
            acc.add(w, x.coeff * y.coeff);
        }
    }
    return acc.finish();
}

bool operator==(const Element& a, const Element& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].word != b.terms_[k].word || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
    return true;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
        int dx = word_loop_degree(x->word), dy = word_loop_degree(y->word);
        if (dx != dy) return dx > dy;
        if (x->word.size() != y->word.size()) return x->word.size() > y->word.size();
        return std::lexicographical_compare(y->word.begin(), y->word.end(), x->word.begin(), x->word.end());
    });
    std::string s;
    bool first = true;
    for (const Term* t : order) {
        Rational c = t->coeff;
        if (first) {
            if (c.sign() < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (t->word.empty()) {
            s += c.str();
        } else {
            if (!c.is_one()) s += c.str() + "*";
            s += word_str(t->word);
        }
    }
    return s;
}

Element supercommutator(const Element& x, const Element& y) {
    int px = x.homogeneous_parity();
    int py = y.homogeneous_parity();
    Element r = x * y;
    Element yx = y * x;
    if (px & py)
        r += yx;
    else
        r -= yx;
    return r;
}

void TermAccumulator::add(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) map_.erase(it);
    }
}

void TermAccumulator::add(const Element& e, const Rational& scale) {
    if (scale.is_zero()) return;
    for (const auto& t : e.terms()) add(t.word, scale.is_one() ? t.coeff : t.coeff * scale);
}

Element TermAccumulator::finish() {
    std::vector<Term> terms;
    terms.reserve(map_.size());
    for (auto& [w, c] : map_) terms.push_back({w, std::move(c)});
    map_.clear();
    return Element::from_terms(std::move(terms));
}

}  // namespace sy
