#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sy/envelope.hpp"
#include "sy/rtt.hpp"

using namespace sy;

namespace {

// e_ij -> elementary matrix E_ij; the supercommutator of matrices is the oracle
oracle::Mat unit(int n, int i, int j) {
    oracle::Mat m(n);
    m(i - 1, j - 1) = 1;
    return m;
}

oracle::Mat image(const LieContext& lie, const Element& x) {
    const int n = lie.dim();
    oracle::Mat out(n);
    for (const auto& t : x.terms()) {
        oracle::Mat m = oracle::Mat::identity(n);
        for (Symbol s : t.word) m = m * unit(n, s.i(), s.j());
        out += m * t.coeff.to_mpq();
    }
    return out;
}

}  // namespace

TEST_CASE("brackets in gl") {
    LieContext gl(ZeroOneSequence::parse("01"), false);
    CHECK(gl.lie_bracket(gl.e_symbol(1, 2), gl.e_symbol(2, 1)) == gl.e(1, 1) + gl.e(2, 2));
    CHECK(gl.lie_bracket(gl.e_symbol(1, 1), gl.e_symbol(1, 1)).is_zero());
    CHECK(gl.normalize(gl.e(2, 1) * gl.e(1, 2)) == gl.e(1, 2) * gl.e(2, 1) * Rational(-1) + gl.e(1, 1) + gl.e(2, 2));
    CHECK(gl.normalize(gl.e(1, 2) * gl.e(1, 2)).is_zero());

    LieContext loop(ZeroOneSequence::parse("001"), true);
    CHECK(loop.lie_bracket(loop.x_symbol(1, 2, 1), loop.x_symbol(2, 3, 2)) == loop.x(1, 3, 3));
    CHECK_THROWS(gl.e(3, 1));
}

TEST_CASE("structure constants match supermatrix commutators") {
    for (const char* s : {"01", "10", "001", "0101"}) {
        LieContext gl(ZeroOneSequence::parse(s), false);
        const int n = gl.dim();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int h = 1; h <= n; ++h)
                    for (int k = 1; k <= n; ++k) {
                        oracle::Mat a = unit(n, i, j), b = unit(n, h, k);
                        int pa = gl.parity(i) ^ gl.parity(j), pb = gl.parity(h) ^ gl.parity(k);
                        oracle::Mat want = a * b;
                        if (pa & pb)
                            want += b * a;
                        else
                            want -= b * a;
                        CHECK(image(gl, gl.lie_bracket(gl.e_symbol(i, j), gl.e_symbol(h, k))) == want);
                    }
    }
}

TEST_CASE("normal ordering in U(gl) keeps the matrix image") {
    LieContext gl(ZeroOneSequence::parse("011"), false);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> idx(1, 3), len(1, 5);
    for (int k = 0; k < 100; ++k) {
        Word w;
        for (int l = len(rng); l > 0; --l) w.push_back(gl.e_symbol(idx(rng), idx(rng)));
        Element x = Element::word(w);
        CHECK(image(gl, gl.normalize(x)) == image(gl, x));
    }
}

TEST_CASE("graded images of Yangian elements") {
    YangianContext y(ZeroOneSequence::parse("01"));
    LieContext loop(y.sequence(), true);
    CHECK(gr_image(y, loop, y.t(1, 2, 3), 2) == loop.x(1, 2, 2));
    CHECK(gr_image(y, loop, y.t(2, 1, 1), 0) == loop.x(2, 1, 0) * Rational(-1));
    Element mixed = y.t(1, 1, 3) + y.t(2, 2, 1);
    CHECK(gr_image(y, loop, mixed, 2) == loop.x(1, 1, 2));
    CHECK(gr_image(y, loop, mixed, 1).is_zero());
    CHECK_THROWS_AS(gr_image(y, loop, y.t(2, 1, 1) * y.t(1, 2, 1), 0), std::invalid_argument);
}
