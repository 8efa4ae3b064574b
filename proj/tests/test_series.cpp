#include <doctest.h>

#include "sy/gauss.hpp"
#include "sy/series.hpp"

using namespace sy;

namespace {

TruncatedSeries one_plus(const Element& a, int cap) {
    TruncatedSeries s = TruncatedSeries::single("u", cap);
    s.set(0, Element(1));
    s.set(1, a);
    return s;
}

// S0(u) = sum_{r=1..cap} c_r u^-r in two variables
TruncatedSeries in_var(const std::vector<Element>& c, int cap, int which) {
    TruncatedSeries s({"u", "v"}, {cap, cap});
    for (int r = 1; r <= cap && r < static_cast<int>(c.size()); ++r)
        s.set(which == 0 ? Exponents{r, 0} : Exponents{0, r}, c[r]);
    return s;
}

}  // namespace

TEST_CASE("addition and truncated products") {
    YangianContext y(ZeroOneSequence::parse("0"));  // commutative: t's are central
    Element a = y.t(1, 1, 1), b = y.t(1, 1, 2);
    TruncatedSeries zero = TruncatedSeries::single("u", 2);
    TruncatedSeries p = one_plus(a, 2);
    CHECK(p + zero == p);

    TruncatedSeries prod = multiply(one_plus(a, 2), one_plus(-a, 2), &y);
    CHECK(prod.coeff(0) == Element(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == y.normalize(a * a) * Rational(-1));

    TruncatedSeries cut = multiply(one_plus(a, 1), one_plus(b, 1), &y);
    CHECK(cut.coeff(1) == a + b);
    CHECK_THROWS(extract_coefficient(cut, {2}));
}

TEST_CASE("inversion") {
    YangianContext y(ZeroOneSequence::parse("01"));
    TruncatedSeries z = TruncatedSeries::single("u", 2);
    CHECK(invert(MatrixSeries::identity(2, z), &y) == MatrixSeries::identity(2, z));

    MatrixSeries m(1, 1, z);
    m.at(1, 1) = one_plus(y.t(1, 1, 1), 2);
    MatrixSeries inv = invert(m, &y);
    CHECK(inv.at(1, 1).coeff(1) == y.t(1, 1, 1) * Rational(-1));
    CHECK(inv.at(1, 1).coeff(2) == y.normalize(y.t(1, 1, 1) * y.t(1, 1, 1)));

    MatrixSeries T = t_matrix(y, 2);
    MatrixSeries Tp = invert(T, &y);
    CHECK(Tp.at(1, 2).coeff(1) == y.t(1, 2, 1) * Rational(-1));
    CHECK(multiply(T, Tp, &y) == MatrixSeries::identity(2, z));
    CHECK(multiply(Tp, T, &y) == MatrixSeries::identity(2, z));
    CHECK(extract_coefficient(T.at(2, 1), {2}) == y.t(2, 1, 2));
    CHECK(extract_coefficient(T.at(2, 2), {0}) == Element(1));

    MatrixSeries bad(1, 1, z);
    CHECK_THROWS_AS(invert(bad, &y), std::invalid_argument);
}

TEST_CASE("division by u - v") {
    const int cap = 4;
    // v^-1 - u^-1 = (u - v) u^-1 v^-1
    TruncatedSeries s({"u", "v"}, {cap, cap});
    s.set({0, 1}, Element(1));
    s.set({1, 0}, Element(-1));
    TruncatedSeries q = divide_by_difference(s);
    for (const auto& e : q.exponents()) CHECK(q.coeff(e) == (e == Exponents{1, 1} ? Element(1) : Element()));

    CHECK(divide_by_difference(TruncatedSeries({"u", "v"}, {cap, cap})).is_zero());

    // (S0(v) - S0(u)) / (u - v) has (r,s) coefficient c_{r+s-1}
    YangianContext y(ZeroOneSequence::parse("01"));
    std::vector<Element> c(cap + 1);
    for (int r = 1; r <= cap; ++r) c[r] = y.t(1, 2, r);
    TruncatedSeries diff = in_var(c, cap, 1) - in_var(c, cap, 0);
    TruncatedSeries conv = divide_by_difference(diff);
    for (int r = 1; r <= cap; ++r)
        for (int t = 1; r + t <= cap + 1; ++t) CHECK(conv.coeff({r, t}) == c[r + t - 1]);

    // and multiplying back recovers the input on the exact range
    TruncatedSeries back = multiply_by_difference(conv);
    for (int r = 0; r < cap; ++r)
        for (int t = 0; t < cap; ++t)
            if (r + t <= cap) CHECK(back.coeff({r, t}) == diff.coeff({r, t}));

    TruncatedSeries nonzero({"u", "v"}, {cap, cap});
    nonzero.set({1, 0}, Element(1));
    CHECK_THROWS_AS(divide_by_difference(nonzero), std::domain_error);
}

TEST_CASE("supercommutator of series") {
    YangianContext y(ZeroOneSequence::parse("01"));
    MatrixSeries T = t_matrix(y, 2);
    TruncatedSeries br = supercommutator(T.at(1, 2), T.at(2, 1), &y);
    CHECK(br.coeff(2) == y.bracket_normalized(y.t(1, 2, 1), y.t(2, 1, 1)));
    CHECK(series_parity(T.at(1, 2)) == 1);
    CHECK(series_parity(T.at(1, 1)) == 0);
}
