#pragma once

#include <cstdint>
#include <string>

namespace sy {

/// Generator families. The numeric value is the family rank used by the
/// monomial order, so F < D < Dp < E inside the parabolic alphabet.
enum class Family : std::uint8_t {
    T = 0,       // t[i,j,r]
    TPRIME = 1,  // tp[i,j,r], coefficients of T(u)^{-1}
    E_LIE = 2,   // e[i,j] in gl(M|N)
    X_LOOP = 3,  // x[i,j,r] = e_ij x^r in gl(M|N)[x]
    F = 4,       // F[b,a,i,j,r], b > a
    D = 5,       // D[a,i,j,r]
    DPRIME = 6,  // Dp[a,i,j,r]
    E = 7,       // E[a,b,i,j,r], a < b
};

/// Families that may be multiplied together.
enum class Alphabet : std::uint8_t { none, rtt, lie, loop, parabolic };

Alphabet alphabet_of(Family f);
const char* family_name(Family f);

/// A generator packed into one 64-bit word:
///   family:4 | a:8 | b:8 | i:8 | j:8 | r:16 | unused | parity:1
/// Comparing codes compares (family rank, a, b, i, j, r); the parity bit
/// is a function of the other fields within one algebra context.
class Symbol {
public:
    constexpr Symbol() = default;
    static Symbol make(Family f, int a, int b, int i, int j, int r, int parity);

    static Symbol t(int i, int j, int r, int parity) { return make(Family::T, 0, 0, i, j, r, parity); }
    static Symbol tp(int i, int j, int r, int parity) { return make(Family::TPRIME, 0, 0, i, j, r, parity); }
    static Symbol e(int i, int j, int parity) { return make(Family::E_LIE, 0, 0, i, j, 0, parity); }
    static Symbol x(int i, int j, int r, int parity) { return make(Family::X_LOOP, 0, 0, i, j, r, parity); }
    static Symbol d(int a, int i, int j, int r, int parity) { return make(Family::D, a, 0, i, j, r, parity); }
    static Symbol dp(int a, int i, int j, int r, int parity) { return make(Family::DPRIME, a, 0, i, j, r, parity); }
    static Symbol ee(int a, int b, int i, int j, int r, int parity) { return make(Family::E, a, b, i, j, r, parity); }
    static Symbol f(int b, int a, int i, int j, int r, int parity) { return make(Family::F, b, a, i, j, r, parity); }

    constexpr std::uint64_t code() const { return code_; }
    static constexpr Symbol from_code(std::uint64_t c) { return Symbol(c); }

    Family family() const { return static_cast<Family>(code_ >> 60); }
    int a() const { return static_cast<int>((code_ >> 52) & 0xff); }
    int b() const { return static_cast<int>((code_ >> 44) & 0xff); }
    int i() const { return static_cast<int>((code_ >> 36) & 0xff); }
    int j() const { return static_cast<int>((code_ >> 28) & 0xff); }
    int r() const { return static_cast<int>((code_ >> 12) & 0xffff); }
    int parity() const { return static_cast<int>(code_ & 1); }
    /// Loop degree r-1 for series families, 0 for e[i,j], r for x[i,j,r].
    int loop_degree() const;

    /// Canonical text: t[1,2,3], D[2,1,1,4], E[1,2,1,1,3], F[2,1,1,1,3], ...
    std::string str() const;

    friend constexpr bool operator==(Symbol x, Symbol y) { return x.code_ == y.code_; }
    friend constexpr auto operator<=>(Symbol x, Symbol y) { return x.code_ <=> y.code_; }

private:
    constexpr explicit Symbol(std::uint64_t c) : code_(c) {}
    std::uint64_t code_ = 0;
};

}  // namespace sy
