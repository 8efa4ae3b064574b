#include <doctest.h>

#include <random>

#include "sy/element.hpp"

using namespace sy;

namespace {

// t-symbols over the sequence 01
Element t(int i, int j, int r) {
    static const int par[] = {0, 0, 1};
    return Element::symbol(Symbol::t(i, j, r, par[i] ^ par[j]));
}

Element random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> idx(1, 2), deg(1, 2), len(0, 2), coef(-3, 3), nterms(1, 3);
    Element x;
    for (int k = nterms(rng); k > 0; --k) {
        Element w(coef(rng));
        for (int l = len(rng); l > 0; --l) w = w * t(idx(rng), idx(rng), deg(rng));
        x += w;
    }
    return x;
}

}  // namespace

TEST_CASE("free products") {
    Element a = t(1, 2, 1), b = t(2, 1, 1), c = t(1, 1, 2);
    CHECK(Element(1) * a == a);
    CHECK((a * b).size() == 1);
    CHECK((a * b).terms()[0].word.size() == 2);
    CHECK(!((a * b) == (b * a)));
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b).str() == "t[1,2,1]*t[2,1,1]");
}

TEST_CASE("unnormalized supercommutators") {
    Element even = t(1, 1, 1), odd = t(1, 2, 1);
    CHECK(supercommutator(even, even).is_zero());
    CHECK(supercommutator(odd, odd) == odd * odd * Rational(2));
    Element e2 = t(2, 2, 1);
    CHECK(supercommutator(even, e2) == even * e2 - e2 * even);
    CHECK_THROWS_AS(supercommutator(even + odd, even), std::invalid_argument);
}

TEST_CASE("scalars") {
    Element x = t(1, 2, 1);
    CHECK(x * Rational(2) == x + x);
    CHECK((x + (-x)).is_zero());
    CHECK((x + x) * Rational(1, 2) == x);
    CHECK((x * Rational(-1, 3)).str() == "-1/3*t[1,2,1]");
    CHECK(Element(Rational(5)).constant_term() == Rational(5));
}

TEST_CASE("parity and degree bookkeeping") {
    Element x = t(1, 2, 3) * t(2, 2, 1);
    CHECK(x.homogeneous_parity() == 1);
    CHECK(x.max_loop_degree() == 2);
    Element mixed = t(1, 2, 1) + t(1, 1, 1);
    CHECK_FALSE(mixed.parity().has_value());
    CHECK_THROWS_AS(mixed.homogeneous_parity(), std::invalid_argument);
    Element y = t(1, 1, 3) + t(1, 1, 1) * t(2, 2, 1);
    CHECK(y.degree_part(2) == t(1, 1, 3));
    CHECK(y.degree_part(0) == t(1, 1, 1) * t(2, 2, 1));
    CHECK(Element().parity() == 0);
}

TEST_CASE("storage order and rendering") {
    Element x = t(1, 1, 1) * t(1, 1, 1) + t(2, 2, 1) + Element(3);
    REQUIRE(x.size() == 3);
    CHECK(x.terms()[0].word.empty());
    CHECK(x.terms()[1].word.size() == 1);
    CHECK(x.str() == "t[1,1,1]*t[1,1,1] + t[2,2,1] + 3");
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        Element a = random_element(rng), b = random_element(rng), c = random_element(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
    }
}
