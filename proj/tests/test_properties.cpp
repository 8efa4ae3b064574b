#include <doctest.h>

#include "oracle.hpp"
#include "sy/properties.hpp"

using namespace sy;

TEST_CASE("random words stay in range") {
    YangianContext y(ZeroOneSequence::parse("010"));
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        Word w = random_t_word(y, rng, 4, 2);
        REQUIRE(!w.empty());
        CHECK(w.size() <= 4);
        for (Symbol s : w) {
            CHECK(s.family() == Family::T);
            CHECK(s.r() >= 1);
            CHECK(s.r() <= 2);
            CHECK(s.i() <= 3);
            CHECK(s.j() <= 3);
        }
    }
}

TEST_CASE("normal ordering is confluent on small samples") {
    for (const char* s : {"01", "10", "001"}) {
        YangianContext y(ZeroOneSequence::parse(s));
        ClaimReport r = check_confluence(y, 20, 7, 2, 2);
        CHECK_MESSAGE(r.ok(), s, ": ", r.counterexample);
        CHECK(r.checked == 20);
    }
}

TEST_CASE("confluence reports are reproducible") {
    YangianContext a(ZeroOneSequence::parse("01")), b(ZeroOneSequence::parse("01"));
    ClaimReport x = check_confluence(a, 15, 42, 2, 2), z = check_confluence(b, 15, 42, 2, 2);
    CHECK(x.ok() == z.ok());
    CHECK(x.checked == z.checked);
    CHECK(x.counterexample == z.counterexample);
}

TEST_CASE("associated graded brackets") {
    for (const char* s : {"01", "010"}) {
        YangianContext y(ZeroOneSequence::parse(s));
        ClaimReport r = check_gr_brackets(y, 4);
        CHECK_MESSAGE(r.ok(), s, ": ", r.counterexample);
        CHECK(r.checked > 0);
    }
}

TEST_CASE("super Jacobi") {
    for (const char* s : {"01", "011"}) {
        YangianContext y(ZeroOneSequence::parse(s));
        ClaimReport r = check_super_jacobi(y, 40, 3);
        CHECK_MESSAGE(r.ok(), s, ": ", r.counterexample);
    }
}

TEST_CASE("normalized words act like their matrix images") {
    // independent of the library's associativity check: compare with the representation
    YangianContext y(ZeroOneSequence::parse("011"));
    oracle::EvalRep rep(y.sequence(), {0, 2});
    std::mt19937_64 rng(9);
    for (int k = 0; k < 30; ++k) {
        Word w = random_t_word(y, rng, 4, 2);
        CHECK(rep.element(y.normalize(Element::word(w))) == rep.word(w));
    }
}
