#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sy/properties.hpp"
#include "sy/rtt.hpp"

using namespace sy;

namespace {

// [t_ij^(r), t_hk^(s)] written out term by term, t^(0) = delta.
Element rtt_rhs(const YangianContext& ctx, int i, int j, int h, int k, int r, int s) {
    auto p = [&](int x) { return ctx.parity(x); };
    int e = p(i) * p(j) + p(i) * p(h) + p(j) * p(h);
    auto gen = [&](int a, int b, int d) -> Element {
        if (d == 0) return a == b ? Element(1) : Element();
        return ctx.t(a, b, d);
    };
    Element sum;
    for (int g = 0; g < std::min(r, s); ++g) {
        sum += gen(h, j, g) * gen(i, k, r + s - 1 - g);
        sum -= gen(h, j, r + s - 1 - g) * gen(i, k, g);
    }
    return e % 2 ? -sum : sum;
}

Element w(const YangianContext& ctx, std::initializer_list<std::array<int, 3>> letters, Rational c = 1) {
    Word word;
    for (auto [i, j, r] : letters) word.push_back(ctx.t_symbol(i, j, r));
    return Element::word(word, c);
}

}  // namespace

TEST_CASE("bracket of generators matches the written-out relation") {
    for (const char* s : {"01", "10", "010", "0011"}) {
        YangianContext ctx(ZeroOneSequence::parse(s));
        const int n = ctx.dim();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int h = 1; h <= n; ++h)
                    for (int k = 1; k <= n; ++k)
                        for (int r = 1; r <= 3; ++r)
                            for (int q = 1; q <= 3; ++q) {
                                Element got = ctx.bracket(ctx.t_symbol(i, j, r), ctx.t_symbol(h, k, q));
                                CHECK_MESSAGE(got == rtt_rhs(ctx, i, j, h, k, r, q), s, " ", i, j, h, k, r, q);
                            }
    }
}

TEST_CASE("single rewrite in Y(01)") {
    YangianContext ctx(ZeroOneSequence::parse("01"));
    Element want = w(ctx, {{1, 2, 1}, {2, 1, 1}}, -1) + ctx.t(2, 2, 1) - ctx.t(1, 1, 1);
    CHECK(ctx.rewrite_pair(ctx.t_symbol(2, 1, 1), ctx.t_symbol(1, 2, 1)) == want);
    CHECK(ctx.normalize(w(ctx, {{2, 1, 1}, {1, 2, 1}})) == want);
    CHECK(ctx.bracket_normalized(ctx.t(1, 2, 1), ctx.t(2, 1, 1)) == ctx.t(2, 2, 1) - ctx.t(1, 1, 1));
    CHECK(ctx.bracket_normalized(ctx.t(1, 2, 1), ctx.t(2, 1, 1)).str() == "t[2,2,1] - t[1,1,1]");
}

TEST_CASE("odd square and commuting pairs") {
    YangianContext y01(ZeroOneSequence::parse("01"));
    // [t12, t12] has no delta terms left, so the square vanishes
    CHECK(y01.normalize(w(y01, {{1, 2, 1}, {1, 2, 1}})).is_zero());
    CHECK(y01.normalize(w(y01, {{1, 2, 1}, {1, 2, 1}})) ==
          y01.normalize(rtt_rhs(y01, 1, 2, 1, 2, 1, 1) * Rational(1, 2)));
    CHECK(y01.bracket_normalized(y01.t(1, 1, 1), y01.t(1, 1, 1)).is_zero());

    YangianContext y00(ZeroOneSequence::parse("00"));
    CHECK(y00.bracket_normalized(y00.t(1, 1, 1), y00.t(2, 2, 1)).is_zero());
    CHECK(y00.normalize(w(y00, {{2, 2, 1}, {1, 1, 1}})) == w(y00, {{1, 1, 1}, {2, 2, 1}}));

    YangianContext y0(ZeroOneSequence::parse("0"));
    CHECK(y0.normalize(w(y0, {{1, 1, 2}, {1, 1, 1}})) == w(y0, {{1, 1, 1}, {1, 1, 2}}));
}

TEST_CASE("normal words are fixed points") {
    YangianContext ctx(ZeroOneSequence::parse("010"));
    Element x = w(ctx, {{1, 1, 1}, {1, 2, 1}, {2, 1, 2}});
    REQUIRE(NormalOrdering::is_normal(x.terms()[0].word));
    CHECK(ctx.normalize(x) == x);
}

TEST_CASE("out-of-range generators and degree zero") {
    YangianContext ctx(ZeroOneSequence::parse("01"));
    CHECK_THROWS_AS(ctx.t(3, 1, 1), std::out_of_range);
    CHECK_THROWS_AS(ctx.t_symbol(1, 1, 0), std::invalid_argument);
    CHECK(ctx.t(1, 1, 0) == Element(1));
    CHECK(ctx.t(1, 2, 0).is_zero());
}

TEST_CASE("normal form has the same matrix image as the word") {
    struct Case {
        const char* seq;
        std::vector<int> shifts;
    };
    for (const Case& c : {Case{"01", {0, 2, 5}}, Case{"10", {0, 3}}, Case{"010", {1, 4}}, Case{"0011", {0, 3}}}) {
        YangianContext ctx(ZeroOneSequence::parse(c.seq));
        oracle::EvalRep rep(ctx.sequence(), c.shifts);
        std::mt19937_64 rng(11);
        for (int k = 0; k < 40; ++k) {
            Word word = random_t_word(ctx, rng, 4, 3);
            Element x = Element::word(word);
            Element nf = ctx.normalize(x);
            CHECK_MESSAGE(rep.element(nf) == rep.word(word), c.seq, " ", x.str());
        }
    }
}

TEST_CASE("matrix image respects every RTT relation") {
    YangianContext ctx(ZeroOneSequence::parse("011"));
    oracle::EvalRep rep(ctx.sequence(), {0, 2});
    const int n = ctx.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int h = 1; h <= n; ++h)
                for (int k = 1; k <= n; ++k)
                    for (int r = 1; r <= 2; ++r)
                        for (int s = 1; s <= 2; ++s) {
                            oracle::Mat x = rep.t(i, j, r), y = rep.t(h, k, s);
                            bool odd = (ctx.parity(i) ^ ctx.parity(j)) & (ctx.parity(h) ^ ctx.parity(k));
                            oracle::Mat br = x * y;
                            if (odd)
                                br += y * x;
                            else
                                br -= y * x;
                            CHECK(br == rep.element(rtt_rhs(ctx, i, j, h, k, r, s)));
                        }
}
