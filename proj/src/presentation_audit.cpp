#include <algorithm>
#include <set>
#include <sstream>

#include "sy/presentation.hpp"

namespace sy {

std::vector<Symbol> parabolic_generators(const Composition& mu, int rmax) {
    std::vector<Symbol> out;
    const int n = mu.blocks();
    for (int r = 1; r <= rmax; ++r)
        for (int a = 1; a <= n; ++a) {
            for (int i = 1; i <= mu.part(a); ++i)
                for (int j = 1; j <= mu.part(a); ++j) out.push_back(Symbol::d(a, i, j, r, parabolic_parity_D(mu, a, i, j)));
            for (int b = a + 1; b <= n; ++b)
                for (int i = 1; i <= mu.part(a); ++i)
                    for (int j = 1; j <= mu.part(b); ++j) {
                        out.push_back(Symbol::ee(a, b, i, j, r, parabolic_parity_E(mu, a, b, i, j)));
                        out.push_back(Symbol::f(b, a, j, i, r, parabolic_parity_F(mu, b, a, j, i)));
                    }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> ordered_supermonomials(std::vector<Symbol> letters, int weight_bound) {
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    std::vector<Word> out;
    Word cur;
    auto rec = [&](auto&& self, std::size_t from, int budget) -> void {
        for (std::size_t k = from; k < letters.size(); ++k) {
            Symbol s = letters[k];
            int w = s.loop_degree() + 1;
            if (w > budget) continue;
            cur.push_back(s);
            out.push_back(cur);
            // an odd letter may not repeat
            self(self, s.parity() ? k + 1 : k, budget - w);
            cur.pop_back();
        }
    };
    rec(rec, 0, weight_bound);
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

Element gamma_word(const Word& w, const GaussFactors& g, const YangianContext& ctx) {
    Element acc(1);
    for (Symbol s : w) {
        Element x;
        switch (s.family()) {
            case Family::D: x = g.D_coeff(s.a(), s.i(), s.j(), s.r()); break;
            case Family::DPRIME: x = g.Dp_coeff(s.a(), s.i(), s.j(), s.r()); break;
            case Family::E: x = g.E_coeff(s.a(), s.b(), s.i(), s.j(), s.r()); break;
            case Family::F: x = g.F_coeff(s.a(), s.b(), s.i(), s.j(), s.r()); break;
            default: throw std::invalid_argument("gamma_word: not a parabolic generator: " + s.str());
        }
        acc = ctx.multiply(acc, x);
    }
    return acc;
}

Element gr_leading(const Word& w, const GaussFactors& g, const YangianContext& ctx, const LieContext& loop) {
    Element img = gr_image(ctx, loop, gamma_word(w, g, ctx), word_loop_degree(w));
    std::size_t longest = 0;
    for (const auto& t : img.terms()) longest = std::max(longest, t.word.size());
    std::vector<Term> top;
    for (const auto& t : img.terms())
        if (t.word.size() == longest) top.push_back(t);
    return Element::from_terms(std::move(top));
}

namespace {

// Global row / column of a parabolic generator.
std::pair<int, int> global_entry(const Composition& mu, Symbol s) {
    switch (s.family()) {
        case Family::D: return {mu.global_index(s.a(), s.i()), mu.global_index(s.a(), s.j())};
        case Family::E:
        case Family::F: return {mu.global_index(s.a(), s.i()), mu.global_index(s.b(), s.j())};
        default: throw std::invalid_argument("not a parabolic generator");
    }
}

}  // namespace

PbwReport pbw_audit(const YangianContext& ctx, const Composition& mu, int degree_bound) {
    PbwReport rep;
    rep.degree_bound = degree_bound;
    const int W = degree_bound + 1;
    LieContext loop(ctx.sequence(), true);
    GaussFactors g = decompose(ctx, mu, W);
    std::ostringstream detail;

    auto gens = parabolic_generators(mu, W);
    // predicted images of single generators
    std::vector<Symbol> x_letters;
    for (Symbol s : gens) {
        auto [gi, gj] = global_entry(mu, s);
        Element want = Element::symbol(loop.x_symbol(gi, gj, s.r() - 1), ctx.parity(gi) ? -1 : 1);
        Element got = gr_image(ctx, loop, gamma_word(Word{s}, g, ctx), s.r() - 1);
        if (!(got == want)) {
            if (!rep.mismatched_generators++)
                detail << "gr image of " << s.str() << " is " << got.str() << ", expected " << want.str() << "; ";
        }
        x_letters.push_back(loop.x_symbol(gi, gj, s.r() - 1));
    }

    std::set<Word, decltype(&word_less)> leading(word_less);
    for (const Word& m : ordered_supermonomials(gens, W)) {
        ++rep.monomials;
        Element lead = gr_leading(m, g, ctx, loop);
        if (lead.size() != 1 || !(lead.terms()[0].coeff == Rational(1) || lead.terms()[0].coeff == Rational(-1))) {
            if (!rep.bad_leading++) detail << "leading part of " << word_str(m) << " is " << lead.str() << "; ";
            continue;
        }
        leading.insert(lead.terms()[0].word);
    }
    rep.distinct_leading = leading.size();

    // the loop side: all x[i,j,s] with s + 1 <= W
    std::vector<Symbol> all_x;
    for (int i = 1; i <= ctx.dim(); ++i)
        for (int j = 1; j <= ctx.dim(); ++j)
            for (int s = 0; s < W; ++s) all_x.push_back(loop.x_symbol(i, j, s));
    rep.loop_count = ordered_supermonomials(all_x, W).size();

    std::sort(x_letters.begin(), x_letters.end());
    std::sort(all_x.begin(), all_x.end());
    if (x_letters != all_x) detail << "generator images do not cover the loop alphabet; ";

    rep.ok = rep.mismatched_generators == 0 && rep.bad_leading == 0 && rep.distinct_leading == rep.monomials &&
             rep.monomials == rep.loop_count && x_letters == all_x;
    rep.detail = detail.str();
    return rep;
}

LeviReport levi_audit(const YangianContext& ctx, const Composition& mu, int cap) {
    LeviReport rep;
    GaussFactors g = decompose(ctx, mu, std::max(1, 2 * cap - 1));
    for_each_instance("R7.3", mu, cap, [&](RelationInstance inst) {
        if (inst.degrees[0] == 0 || inst.degrees[1] == 0) return;
        ++rep.checked;
        Element res = evaluate_under_gamma(inst, g, ctx);
        if (!res.is_zero() && !rep.failures++) rep.first_failure = inst.key() + ": " + res.str();
    });
    return rep;
}

}  // namespace sy
