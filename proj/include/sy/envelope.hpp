#pragma once

// U(gl(M|N)) and U(gl(M|N)[x]) as rewrite systems, and the associated
// graded map from the loop filtration of the Yangian.

#include "sy/grading.hpp"
#include "sy/normal_order.hpp"

namespace sy {

class YangianContext;

/// Enveloping algebra of gl(M|N) (alphabet e[i,j]) or, with loop = true, of
/// the loop superalgebra gl(M|N)[x] (alphabet x[i,j,r] = e_ij x^r, r >= 0).
class LieContext : public NormalOrdering {
public:
    LieContext(ZeroOneSequence seq, bool loop);

    const ZeroOneSequence& sequence() const { return seq_; }
    bool loop() const { return loop_; }
    int dim() const { return seq_.size(); }
    int parity(int i) const { return seq_.parity(i); }

    Symbol e_symbol(int i, int j) const;
    Symbol x_symbol(int i, int j, int r) const;
    Element e(int i, int j) const { return Element::symbol(e_symbol(i, j)); }
    Element x(int i, int j, int r) const { return Element::symbol(x_symbol(i, j, r)); }

    /// [a, b] = delta_jh e_ik - (-1)^{(|i|+|j|)(|h|+|k|)} delta_ki e_hj, with
    /// loop exponents adding.
    Element lie_bracket(Symbol a, Symbol b) const;

    using NormalOrdering::validate;
    void validate(Symbol s) const override;
    Element bracket(Symbol y, Symbol x) const override { return lie_bracket(y, x); }

private:
    ZeroOneSequence seq_;
    bool loop_;
};

/// Degree-k part of a normal-ordered Yangian element sent to U(gl[x]) by
/// t[i,j,r] -> (-1)^{|i|} x[i,j,r-1], then normal-ordered there.
/// Throws std::invalid_argument if x is not in normal form.
Element gr_image(const YangianContext& yctx, const LieContext& loop, const Element& x, int k);

}  // namespace sy
