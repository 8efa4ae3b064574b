#include <doctest.h>

#include "oracle.hpp"
#include "sy/gauss.hpp"

using namespace sy;

namespace {

struct Config {
    const char* seq;
    const char* mu;
    std::vector<int> shifts;
};

const std::vector<Config> kConfigs = {
    {"01", "1,1", {0, 2, 5}}, {"10", "1,1", {0, 3}},    {"010", "1,1,1", {1, 4}},
    {"001", "2,1", {0, 3}},   {"0101", "1,2,1", {0, 3}}, {"0110", "2,2", {2, 5}},
};

}  // namespace

TEST_CASE("factors agree with block LDU of the matrix image") {
    const int cap = 3;
    for (const auto& c : kConfigs) {
        YangianContext ctx(ZeroOneSequence::parse(c.seq));
        Composition mu = Composition::parse(ctx.sequence(), c.mu);
        GaussFactors g = decompose(ctx, mu, cap);
        oracle::EvalRep rep(ctx.sequence(), c.shifts);
        oracle::GaussOracle want(rep, mu, cap);
        INFO(c.seq, " mu=", c.mu);
        for (int a = 1; a <= mu.blocks(); ++a)
            for (int i = 1; i <= mu.part(a); ++i)
                for (int j = 1; j <= mu.part(a); ++j)
                    for (int r = 0; r <= cap; ++r) {
                        CHECK(rep.element(g.D_coeff(a, i, j, r)) == want.D(a, i, j, r));
                        CHECK(rep.element(g.Dp_coeff(a, i, j, r)) == want.Dp(a, i, j, r));
                    }
        for (int a = 1; a <= mu.blocks(); ++a)
            for (int b = a + 1; b <= mu.blocks(); ++b)
                for (int r = 1; r <= cap; ++r) {
                    for (int i = 1; i <= mu.part(a); ++i)
                        for (int j = 1; j <= mu.part(b); ++j)
                            CHECK(rep.element(g.E_coeff(a, b, i, j, r)) == want.E(a, b, i, j, r));
                    for (int i = 1; i <= mu.part(b); ++i)
                        for (int j = 1; j <= mu.part(a); ++j)
                            CHECK(rep.element(g.F_coeff(b, a, i, j, r)) == want.F(b, a, i, j, r));
                }
    }
}

TEST_CASE("D2 coefficient in Y(01)") {
    YangianContext ctx(ZeroOneSequence::parse("01"));
    GaussFactors g = decompose(ctx, Composition::parse(ctx.sequence(), "1,1"), 2);
    // t22^(2) - t21^(1) t12^(1), here in normal order
    Element want = ctx.normalize(ctx.t(2, 2, 2) - ctx.t(2, 1, 1) * ctx.t(1, 2, 1));
    CHECK(g.D_coeff(2, 1, 1, 2) == want);
    CHECK(g.D_coeff(2, 1, 1, 2).str() == "t[2,2,2] + t[1,2,1]*t[2,1,1] - t[2,2,1] + t[1,1,1]");
    CHECK(g.E_coeff(1, 2, 1, 1, 1) == ctx.t(1, 2, 1));
    CHECK(g.F_coeff(2, 1, 1, 1, 1) == ctx.t(2, 1, 1));
    CHECK(g.D_coeff(1, 1, 1, 0) == Element(1));
    CHECK(g.E_coeff(1, 2, 1, 1, 0).is_zero());
    CHECK_THROWS_AS(g.D_coeff(1, 1, 1, 3), std::out_of_range);
}

TEST_CASE("first block and first superdiagonal come straight from T") {
    YangianContext ctx(ZeroOneSequence::parse("0101"));
    Composition mu = Composition::parse(ctx.sequence(), "1,2,1");
    GaussFactors g = decompose(ctx, mu, 3);
    for (int i = 1; i <= 1; ++i)
        for (int r = 1; r <= 3; ++r) CHECK(g.D_coeff(1, i, i, r) == ctx.t(i, i, r));
    // E_{b-1}^(1) = T_{b-1,b}^(1)
    for (int b = 2; b <= 3; ++b)
        for (int i = 1; i <= mu.part(b - 1); ++i)
            for (int j = 1; j <= mu.part(b); ++j)
                CHECK(g.E_coeff(b - 1, b, i, j, 1) == ctx.t(mu.global_index(b - 1, i), mu.global_index(b, j), 1));
}

TEST_CASE("reconstruction and quasideterminants") {
    for (const auto& c : kConfigs) {
        YangianContext ctx(ZeroOneSequence::parse(c.seq));
        Composition mu = Composition::parse(ctx.sequence(), c.mu);
        ClaimReport a = check_gauss_reconstruction(ctx, mu, 3);
        ClaimReport b = check_quasidet_agreement(ctx, mu, 3);
        CHECK_MESSAGE(a.ok(), a.counterexample);
        CHECK_MESSAGE(b.ok(), b.counterexample);
        CHECK(a.checked == (mu.blocks() == 2 ? 9u : 1u));
    }
}

TEST_CASE("quasideterminant over scalars") {
    TruncatedSeries z = TruncatedSeries::single("u", 1);
    auto scalar = [&](Rational c) {
        MatrixSeries m(1, 1, z);
        m.at(1, 1).set(0, Element(c));
        return m;
    };
    MatrixSeries A = MatrixSeries::identity(1, z);
    CHECK(quasideterminant(A, scalar(3), scalar(5), scalar(7), nullptr) == scalar(7 - 15));
    CHECK(quasideterminant(A, scalar(0), scalar(5), scalar(7), nullptr) == scalar(7));
    CHECK(quasideterminant(A, scalar(3), scalar(0), scalar(7), nullptr) == scalar(7));
    CHECK_THROWS_AS(quasideterminant(scalar(2), scalar(3), scalar(5), scalar(7), nullptr), std::invalid_argument);
}

TEST_CASE("parity of parabolic generators") {
    YangianContext ctx(ZeroOneSequence::parse("0101"));
    Composition mu = Composition::parse(ctx.sequence(), "1,2,1");
    // blocks 0 | 10 | 1
    CHECK(parabolic_parity_D(mu, 2, 1, 2) == 1);
    CHECK(parabolic_parity_D(mu, 2, 2, 2) == 0);
    CHECK(parabolic_parity_E(mu, 1, 2, 1, 1) == 1);
    CHECK(parabolic_parity_E(mu, 1, 3, 1, 1) == 1);
    CHECK(parabolic_parity_F(mu, 3, 2, 1, 2) == 1);
    CHECK(parabolic_parity_F(mu, 3, 2, 1, 1) == 0);
}

TEST_CASE("a sign flip in a factor is detected") {
    YangianContext ctx(ZeroOneSequence::parse("010"));
    Composition mu = Composition::parse(ctx.sequence(), "1,1,1");
    GaussFactors g = decompose(ctx, mu, 2);
    g.E.at({1, 2}).at(1, 1).set(2, -g.E.at({1, 2}).at(1, 1).coeff(2));
    MatrixSeries T = t_matrix(ctx, 2);
    CHECK_FALSE(multiply(multiply(g.full_F(), g.full_D(), &ctx), g.full_E(), &ctx) == T);
}
