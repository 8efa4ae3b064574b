#include "sy/rtt.hpp"

#include <algorithm>
#include <stdexcept>

namespace sy {

YangianContext::YangianContext(ZeroOneSequence seq) : seq_(std::move(seq)) {}

Symbol YangianContext::t_symbol(int i, int j, int r) const {
    if (i < 1 || j < 1 || i > dim() || j > dim()) throw std::out_of_range("t index outside 1.." + std::to_string(dim()));
    if (r < 1) throw std::invalid_argument("t[i,j,0] is the scalar delta_ij, not a generator");
    return Symbol::t(i, j, r, parity(i) ^ parity(j));
}

Element YangianContext::t(int i, int j, int r) const {
    if (r == 0) {
        if (i < 1 || j < 1 || i > dim() || j > dim()) throw std::out_of_range("t index out of range");
        return Element(i == j ? 1 : 0);
    }
    return Element::symbol(t_symbol(i, j, r));
}

void YangianContext::validate(Symbol s) const {
    if (s.family() != Family::T)
        throw std::invalid_argument("symbol " + s.str() + " is not an RTT generator t[i,j,r]");
    if (s.r() < 1) throw std::invalid_argument("t[i,j,0] must be collapsed to delta_ij before rewriting");
    if (s.i() < 1 || s.j() < 1 || s.i() > dim() || s.j() > dim())
        throw std::invalid_argument("symbol " + s.str() + " outside Y(" + seq_.str() + ")");
    if (s.parity() != (parity(s.i()) ^ parity(s.j())))
        throw std::invalid_argument("symbol " + s.str() + " carries the wrong parity");
}

// [t_ij^(r), t_hk^(s)] = (-1)^{|i||j|+|i||h|+|j||h|}
//     sum_{g=0}^{min(r,s)-1} (t_hj^(g) t_ik^(r+s-1-g) - t_hj^(r+s-1-g) t_ik^(g))
Element YangianContext::bracket(Symbol y, Symbol x) const {
    const int i = y.i(), j = y.j(), r = y.r();
    const int h = x.i(), k = x.j(), s = x.r();
    const int pi = parity(i), pj = parity(j), ph = parity(h);
    const Rational sign = ((pi & pj) ^ (pi & ph) ^ (pj & ph)) ? -1 : 1;
    std::vector<Term> terms;
    auto product = [&](int g1, int g2, const Rational& c) {
        // t_hj^(g1) t_ik^(g2) with delta collapse at degree zero
        Word w;
        Rational coeff = c;
        if (g1 == 0) {
            if (h != j) return;
        } else {
            w.push_back(t_symbol(h, j, g1));
        }
        if (g2 == 0) {
            if (i != k) return;
        } else {
            w.push_back(t_symbol(i, k, g2));
        }
        terms.push_back({std::move(w), std::move(coeff)});
    };
    for (int g = 0; g < std::min(r, s); ++g) {
        product(g, r + s - 1 - g, sign);
        product(r + s - 1 - g, g, -sign);
    }
    return Element::from_terms(std::move(terms));
}

}  // namespace sy
