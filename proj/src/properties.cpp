#include "sy/properties.hpp"

namespace sy {

Word random_t_word(const YangianContext& ctx, std::mt19937_64& rng, int max_len, int max_r) {
    std::uniform_int_distribution<int> len(1, max_len), idx(1, ctx.dim()), deg(1, max_r);
    Word w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
        int i = idx(rng), j = idx(rng), r = deg(rng);
        w.push_back(ctx.t_symbol(i, j, r));
    }
    return w;
}

ClaimReport check_confluence(const YangianContext& ctx, int samples, std::uint64_t seed, int max_len, int max_r) {
    ClaimReport rep("confluence", "s=" + ctx.sequence().str(),
                    "samples=" + std::to_string(samples) + ",len<=" + std::to_string(max_len) +
                        ",r<=" + std::to_string(max_r) + ",seed=" + std::to_string(seed));
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) {
        Element a = Element::word(random_t_word(ctx, rng, max_len, max_r));
        Element b = Element::word(random_t_word(ctx, rng, max_len, max_r));
        Element c = Element::word(random_t_word(ctx, rng, max_len, max_r));
        const std::string tag = word_str(a.terms()[0].word) + " | " + word_str(b.terms()[0].word) + " | " +
                                word_str(c.terms()[0].word);
        ++rep.checked;
        Element left = ctx.multiply(ctx.multiply(a, b), c);
        Element right = ctx.multiply(a, ctx.multiply(b, c));
        if (!(left == right)) rep.fail("associativity fails on " + tag);
        Element free = a * b * c;
        Element nf = ctx.normalize(free);
        if (!(nf == left)) rep.fail("normalize(abc) differs from (ab)c on " + tag);
        if (!(ctx.normalize(nf) == nf)) rep.fail("normalize is not idempotent on " + tag);
        const int p = word_parity(free.terms()[0].word);
        const int deg = word_loop_degree(free.terms()[0].word);
        for (const auto& t : nf.terms()) {
            if (!NormalOrdering::is_normal(t.word)) rep.fail("non-normal word in result for " + tag);
            if (word_parity(t.word) != p) rep.fail("parity changes on " + tag);
            if (word_loop_degree(t.word) > deg) rep.fail("loop degree grows on " + tag);
        }
    }
    return rep;
}

ClaimReport check_gr_brackets(const YangianContext& ctx, int max_total) {
    ClaimReport rep("gr-brackets", "s=" + ctx.sequence().str(), "r+s<=" + std::to_string(max_total));
    LieContext loop(ctx.sequence(), true);
    const int n = ctx.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int h = 1; h <= n; ++h)
                for (int k = 1; k <= n; ++k)
                    for (int r = 1; r < max_total; ++r)
                        for (int s = 1; r + s <= max_total; ++s) {
                            ++rep.checked;
                            Element br = ctx.bracket_normalized(ctx.t(i, j, r), ctx.t(h, k, s));
                            Element top = gr_image(ctx, loop, br, r + s - 2);
                            Rational sign = (ctx.parity(i) + ctx.parity(h)) % 2 ? -1 : 1;
                            Element want =
                                loop.normalize(loop.lie_bracket(loop.x_symbol(i, j, r - 1), loop.x_symbol(h, k, s - 1))) *
                                sign;
                            if (!(top == want))
                                rep.fail("[t[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) +
                                         "], t[" + std::to_string(h) + "," + std::to_string(k) + "," +
                                         std::to_string(s) + "]]: gr part " + top.str() + ", loop bracket " +
                                         want.str());
                        }
    return rep;
}

ClaimReport check_super_jacobi(const YangianContext& ctx, int samples, std::uint64_t seed, int max_len, int max_r) {
    ClaimReport rep("super-jacobi", "s=" + ctx.sequence().str(),
                    "samples=" + std::to_string(samples) + ",seed=" + std::to_string(seed));
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) {
        Element x = ctx.normalize(Element::word(random_t_word(ctx, rng, max_len, max_r)));
        Element y = ctx.normalize(Element::word(random_t_word(ctx, rng, max_len, max_r)));
        Element z = ctx.normalize(Element::word(random_t_word(ctx, rng, max_len, max_r)));
        if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
        ++rep.checked;
        const int px = x.homogeneous_parity(), py = y.homogeneous_parity(), pz = z.homogeneous_parity();
        // (-1)^{|x||z|}[x,[y,z]] + cyclic = 0
        auto term = [&](const Element& a, const Element& b, const Element& c, int pa, int pc) {
            Element v = ctx.bracket_normalized(a, ctx.bracket_normalized(b, c));
            return (pa & pc) ? -v : v;
        };
        Element sum = term(x, y, z, px, pz) + term(y, z, x, py, px) + term(z, x, y, pz, py);
        if (!sum.is_zero()) rep.fail("Jacobi sum " + sum.str() + " on " + x.str() + " | " + y.str() + " | " + z.str());
    }
    return rep;
}

}  // namespace sy
