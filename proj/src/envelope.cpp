#include "sy/envelope.hpp"

#include <stdexcept>

#include "sy/rtt.hpp"

namespace sy {

LieContext::LieContext(ZeroOneSequence seq, bool loop) : seq_(std::move(seq)), loop_(loop) {}

Symbol LieContext::e_symbol(int i, int j) const {
    if (loop_) throw std::invalid_argument("e[i,j] is not a generator of the loop algebra; use x[i,j,r]");
    if (i < 1 || j < 1 || i > dim() || j > dim()) throw std::out_of_range("e index outside 1.." + std::to_string(dim()));
    return Symbol::e(i, j, parity(i) ^ parity(j));
}

Symbol LieContext::x_symbol(int i, int j, int r) const {
    if (!loop_) throw std::invalid_argument("x[i,j,r] needs the loop algebra");
    if (i < 1 || j < 1 || i > dim() || j > dim()) throw std::out_of_range("x index outside 1.." + std::to_string(dim()));
    if (r < 0) throw std::invalid_argument("x[i,j,r] needs r >= 0");
    return Symbol::x(i, j, r, parity(i) ^ parity(j));
}

void LieContext::validate(Symbol s) const {
    Family want = loop_ ? Family::X_LOOP : Family::E_LIE;
    if (s.family() != want)
        throw std::invalid_argument("symbol " + s.str() + " is not in the alphabet of " +
                                    (loop_ ? "U(gl[x])" : "U(gl)"));
    if (s.i() < 1 || s.j() < 1 || s.i() > dim() || s.j() > dim())
        throw std::invalid_argument("symbol " + s.str() + " outside gl(" + seq_.str() + ")");
    if (s.parity() != (parity(s.i()) ^ parity(s.j())))
        throw std::invalid_argument("symbol " + s.str() + " carries the wrong parity");
}

Element LieContext::lie_bracket(Symbol a, Symbol b) const {
    validate(a);
    validate(b);
    const int i = a.i(), j = a.j(), h = b.i(), k = b.j();
    const int r = loop_ ? a.r() + b.r() : 0;
    auto gen = [&](int p, int q) {
        return Element::symbol(loop_ ? Symbol::x(p, q, r, parity(p) ^ parity(q)) : Symbol::e(p, q, parity(p) ^ parity(q)));
    };
    Element out;
    if (j == h) out += gen(i, k);
    if (k == i) {
        bool odd = (parity(i) ^ parity(j)) & (parity(h) ^ parity(k));
        out += gen(h, j) * Rational(odd ? 1 : -1);
    }
    return out;
}

Element gr_image(const YangianContext& yctx, const LieContext& loop, const Element& x, int k) {
    if (!loop.loop()) throw std::invalid_argument("gr_image needs a loop-algebra context");
    if (!(loop.sequence() == yctx.sequence())) throw std::invalid_argument("gr_image: sequences differ");
    yctx.validate(x);
    for (const auto& t : x.terms())
        if (!NormalOrdering::is_normal(t.word))
            throw std::invalid_argument("gr_image: element is not normal-ordered (" + word_str(t.word) + ")");
    std::vector<Term> mapped;
    for (const auto& t : x.terms()) {
        if (word_loop_degree(t.word) != k) continue;
        Word w;
        Rational c = t.coeff;
        for (Symbol s : t.word) {
            if (yctx.parity(s.i())) c = -c;
            w.push_back(loop.x_symbol(s.i(), s.j(), s.r() - 1));
        }
        mapped.push_back({std::move(w), std::move(c)});
    }
    return loop.normalize(Element::from_terms(std::move(mapped)));
}

}  // namespace sy
