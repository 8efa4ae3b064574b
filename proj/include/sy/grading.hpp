#pragma once

// 01-sequences, compositions and the parity bookkeeping shared by every
// other module. All public indices are 1-based.

#include <string>
#include <string_view>
#include <vector>

namespace sy {

class ZeroOneSequence {
public:
    enum class Transform { check, reverse, dagger };

    ZeroOneSequence() = default;
    explicit ZeroOneSequence(std::vector<int> digits);
    /// Parses a raw digit string such as "0110".
    static ZeroOneSequence parse(std::string_view text);
    /// 0^M 1^N.
    static ZeroOneSequence standard(int m, int n);

    int size() const { return static_cast<int>(digits_.size()); }
    int zeros() const { return zeros_; }
    int ones() const { return size() - zeros_; }
    /// i-th digit, 1 <= i <= M+N.
    int parity(int i) const;
    const std::vector<int>& digits() const { return digits_; }

    ZeroOneSequence transform(Transform kind) const;
    ZeroOneSequence check() const { return transform(Transform::check); }
    ZeroOneSequence reversed() const { return transform(Transform::reverse); }
    ZeroOneSequence dagger() const { return transform(Transform::dagger); }
    ZeroOneSequence concat(const ZeroOneSequence& tail) const;
    ZeroOneSequence slice(int start, int length) const;

    std::string str() const;
    friend bool operator==(const ZeroOneSequence&, const ZeroOneSequence&) = default;

private:
    std::vector<int> digits_;
    int zeros_ = 0;
};

/// A composition mu of M+N together with the 01-sequence it partitions.
class Composition {
public:
    Composition(ZeroOneSequence seq, std::vector<int> parts);
    /// Parses "2,4,3".
    static Composition parse(const ZeroOneSequence& seq, std::string_view text);
    /// The single-block composition (M+N).
    static Composition trivial(const ZeroOneSequence& seq);

    const ZeroOneSequence& sequence() const { return seq_; }
    const std::vector<int>& parts() const { return parts_; }
    int blocks() const { return static_cast<int>(parts_.size()); }
    int total() const { return seq_.size(); }
    /// mu_a, 1 <= a <= n.
    int part(int a) const;
    /// n_{a-1} = mu_1 + ... + mu_{a-1}.
    int block_start(int a) const;
    /// |i|_a, the parity of digit n_{a-1}+i.
    int restricted_parity(int a, int i) const;
    /// Global 1-based row index of entry i of block a.
    int global_index(int a, int i) const { return block_start(a) + i; }
    /// Block a as its own 01-sequence s_a.
    ZeroOneSequence block_sequence(int a) const;
    std::vector<ZeroOneSequence> split() const;
    /// The reversed composition (mu_n, ..., mu_1) over s^dagger.
    Composition reversed_dagger() const;
    /// The composition (mu_a, ..., mu_n) over s_a ... s_n.
    Composition tail(int first_block) const;

    std::string parts_str() const;
    friend bool operator==(const Composition&, const Composition&) = default;

private:
    ZeroOneSequence seq_;
    std::vector<int> parts_;
    std::vector<int> starts_;
};

std::vector<ZeroOneSequence> split_sequence(const ZeroOneSequence& seq, const Composition& mu);

}  // namespace sy
