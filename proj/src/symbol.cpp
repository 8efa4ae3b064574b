#include "sy/symbol.hpp"

#include <stdexcept>

namespace sy {

Alphabet alphabet_of(Family f) {
    switch (f) {
        case Family::T:
        case Family::TPRIME: return Alphabet::rtt;
        case Family::E_LIE: return Alphabet::lie;
        case Family::X_LOOP: return Alphabet::loop;
        default: return Alphabet::parabolic;
    }
}

const char* family_name(Family f) {
    switch (f) {
        case Family::T: return "t";
        case Family::TPRIME: return "tp";
        case Family::E_LIE: return "e";
        case Family::X_LOOP: return "x";
        case Family::F: return "F";
        case Family::D: return "D";
        case Family::DPRIME: return "Dp";
        case Family::E: return "E";
    }
    return "?";
}

Symbol Symbol::make(Family f, int a, int b, int i, int j, int r, int parity) {
    auto in = [](int v, int hi) { return v >= 0 && v <= hi; };
    if (!in(a, 0xff) || !in(b, 0xff) || !in(i, 0xff) || !in(j, 0xff) || !in(r, 0xffff) || !in(parity, 1))
        throw std::out_of_range("generator index out of encodable range");
    std::uint64_t c = (std::uint64_t(f) << 60) | (std::uint64_t(a) << 52) | (std::uint64_t(b) << 44) |
                      (std::uint64_t(i) << 36) | (std::uint64_t(j) << 28) | (std::uint64_t(r) << 12) |
                      std::uint64_t(parity);
    return Symbol(c);
}

int Symbol::loop_degree() const {
    switch (family()) {
        case Family::E_LIE: return 0;
        case Family::X_LOOP: return r();
        default: return r() > 0 ? r() - 1 : 0;
    }
}

std::string Symbol::str() const {
    auto n = [](int v) { return std::to_string(v); };
    std::string s = family_name(family());
    switch (family()) {
        case Family::T:
        case Family::TPRIME:
        case Family::X_LOOP: return s + "[" + n(i()) + "," + n(j()) + "," + n(r()) + "]";
        case Family::E_LIE: return s + "[" + n(i()) + "," + n(j()) + "]";
        case Family::D:
        case Family::DPRIME: return s + "[" + n(a()) + "," + n(i()) + "," + n(j()) + "," + n(r()) + "]";
        case Family::E:
        case Family::F: return s + "[" + n(a()) + "," + n(b()) + "," + n(i()) + "," + n(j()) + "," + n(r()) + "]";
    }
    return s;
}

}  // namespace sy
