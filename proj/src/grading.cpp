#include "sy/grading.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sy {

ZeroOneSequence::ZeroOneSequence(std::vector<int> digits) : digits_(std::move(digits)) {
    for (int d : digits_) {
        if (d != 0 && d != 1) throw std::invalid_argument("01-sequence digits must be 0 or 1");
        zeros_ += d == 0;
    }
}

ZeroOneSequence ZeroOneSequence::parse(std::string_view text) {
    std::vector<int> digits;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("invalid 01-sequence '" + std::string(text) + "'");
        digits.push_back(c - '0');
    }
    if (digits.empty()) throw std::invalid_argument("empty 01-sequence");
    return ZeroOneSequence(std::move(digits));
}

ZeroOneSequence ZeroOneSequence::standard(int m, int n) {
    std::vector<int> digits(m, 0);
    digits.insert(digits.end(), n, 1);
    return ZeroOneSequence(std::move(digits));
}

int ZeroOneSequence::parity(int i) const {
    if (i < 1 || i > size())
        throw std::out_of_range("parity index " + std::to_string(i) + " outside 1.." + std::to_string(size()));
    return digits_[i - 1];
}

ZeroOneSequence ZeroOneSequence::transform(Transform kind) const {
    std::vector<int> d = digits_;
    if (kind == Transform::check || kind == Transform::dagger)
        for (int& x : d) x = 1 - x;
    if (kind == Transform::reverse || kind == Transform::dagger) std::reverse(d.begin(), d.end());
    return ZeroOneSequence(std::move(d));
}

ZeroOneSequence ZeroOneSequence::concat(const ZeroOneSequence& tail) const {
    std::vector<int> d = digits_;
    d.insert(d.end(), tail.digits_.begin(), tail.digits_.end());
    return ZeroOneSequence(std::move(d));
}

ZeroOneSequence ZeroOneSequence::slice(int start, int length) const {
    if (start < 0 || length < 0 || start + length > size()) throw std::out_of_range("01-sequence slice");
    return ZeroOneSequence(std::vector<int>(digits_.begin() + start, digits_.begin() + start + length));
}

std::string ZeroOneSequence::str() const {
    std::string s;
    for (int d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

Composition::Composition(ZeroOneSequence seq, std::vector<int> parts)
    : seq_(std::move(seq)), parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
    int sum = 0;
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        starts_.push_back(sum);
        sum += p;
    }
    if (sum != seq_.size())
        throw std::invalid_argument("composition " + parts_str() + " does not partition a sequence of length " +
                                    std::to_string(seq_.size()));
}

Composition Composition::parse(const ZeroOneSequence& seq, std::string_view text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("invalid composition '" + std::string(text) + "'");
        for (char c : cur)
            if (c < '0' || c > '9') throw std::invalid_argument("invalid composition '" + std::string(text) + "'");
        parts.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (c != ' ')
            cur.push_back(c);
    }
    flush();
    return Composition(seq, std::move(parts));
}

Composition Composition::trivial(const ZeroOneSequence& seq) { return Composition(seq, {seq.size()}); }

int Composition::part(int a) const {
    if (a < 1 || a > blocks()) throw std::out_of_range("block index " + std::to_string(a));
    return parts_[a - 1];
}

int Composition::block_start(int a) const {
    if (a < 1 || a > blocks()) throw std::out_of_range("block index " + std::to_string(a));
    return starts_[a - 1];
}

int Composition::restricted_parity(int a, int i) const {
    if (i < 1 || i > part(a)) throw std::out_of_range("entry index " + std::to_string(i) + " in block " + std::to_string(a));
    return seq_.parity(block_start(a) + i);
}

ZeroOneSequence Composition::block_sequence(int a) const { return seq_.slice(block_start(a), part(a)); }

std::vector<ZeroOneSequence> Composition::split() const {
    std::vector<ZeroOneSequence> out;
    for (int a = 1; a <= blocks(); ++a) out.push_back(block_sequence(a));
    return out;
}

Composition Composition::reversed_dagger() const {
    std::vector<int> rev(parts_.rbegin(), parts_.rend());
    return Composition(seq_.dagger(), std::move(rev));
}

Composition Composition::tail(int first_block) const {
    int start = block_start(first_block);
    return Composition(seq_.slice(start, seq_.size() - start),
                       std::vector<int>(parts_.begin() + (first_block - 1), parts_.end()));
}

std::string Composition::parts_str() const {
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(parts_[k]);
    }
    return s;
}

std::vector<ZeroOneSequence> split_sequence(const ZeroOneSequence& seq, const Composition& mu) {
    if (!(seq == mu.sequence())) throw std::invalid_argument("composition belongs to a different sequence");
    return mu.split();
}

}  // namespace sy
