#pragma once

// Randomized and exhaustive property checks of the RTT normal form.

#include <cstdint>
#include <random>

#include "sy/envelope.hpp"
#include "sy/report.hpp"
#include "sy/rtt.hpp"

namespace sy {

/// A random word of 1..max_len generators t[i,j,r] with r <= max_r.
Word random_t_word(const YangianContext& ctx, std::mt19937_64& rng, int max_len, int max_r);

/// For `samples` random triples of words: associativity of normal-ordered
/// multiplication, idempotence of normalize, homogeneous parity and the
/// loop filtration bound on the normalized product.
ClaimReport check_confluence(const YangianContext& ctx, int samples, std::uint64_t seed, int max_len = 3,
                             int max_r = 3);

/// For every generator pair with r + s <= max_total: the degree r+s-2 part of
/// the normalized bracket, sent to U(gl[x]), equals the loop bracket of the
/// images (-1)^{|i|} x[i,j,r-1] and (-1)^{|h|} x[h,k,s-1].
ClaimReport check_gr_brackets(const YangianContext& ctx, int max_total);

/// Super Jacobi identity for random homogeneous triples.
ClaimReport check_super_jacobi(const YangianContext& ctx, int samples, std::uint64_t seed, int max_len = 2,
                               int max_r = 2);

}  // namespace sy
