#pragma once

#include "sy/grading.hpp"
#include "sy/normal_order.hpp"

namespace sy {

/// The super Yangian Y(M|N) attached to a 01-sequence, presented by the
/// RTT generators t[i,j,r] (r >= 1) with t[i,j,0] = delta_ij.
class YangianContext : public NormalOrdering {
public:
    explicit YangianContext(ZeroOneSequence seq);

    const ZeroOneSequence& sequence() const { return seq_; }
    int dim() const { return seq_.size(); }
    int parity(int i) const { return seq_.parity(i); }

    /// t[i,j,r] as a generator; r must be positive.
    Symbol t_symbol(int i, int j, int r) const;
    /// t[i,j,r] as an element; r = 0 collapses to the scalar delta_ij.
    Element t(int i, int j, int r) const;

    using NormalOrdering::validate;
    void validate(Symbol s) const override;
    Element bracket(Symbol y, Symbol x) const override;

private:
    ZeroOneSequence seq_;
};

}  // namespace sy
