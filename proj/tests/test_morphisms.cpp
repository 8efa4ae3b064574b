#include <doctest.h>

#include "oracle.hpp"
#include "sy/gauss.hpp"
#include "sy/morphisms.hpp"

using namespace sy;

namespace {

// image of a free element, mapped letter by letter into matrices of the target
oracle::Mat mapped(const Morphism& m, oracle::EvalRep& target, const Element& x) {
    oracle::Mat out(target.dim());
    for (const auto& term : x.terms()) {
        oracle::Mat w = oracle::Mat::identity(target.dim());
        for (Symbol s : term.word) w = w * target.element(m.image(s.i(), s.j(), s.r()));
        out += w * term.coeff.to_mpq();
    }
    return out;
}

}  // namespace

TEST_CASE("evaluation map on generators") {
    Morphism ev(MorphismKind::ev, ZeroOneSequence::parse("01"), 3);
    const LieContext& gl = ev.lie_target();
    CHECK(ev.image(1, 2, 1) == gl.e(1, 2));
    CHECK(ev.image(2, 1, 1) == gl.e(2, 1) * Rational(-1));
    CHECK(ev.image(2, 2, 1) == gl.e(2, 2) * Rational(-1));
    CHECK(ev.image(1, 2, 2).is_zero());
    CHECK(ev.image(1, 1, 0) == Element(1));
}

TEST_CASE("coproduct of degree one generators") {
    Morphism delta(MorphismKind::delta, ZeroOneSequence::parse("010"), 2);
    const YangianContext& y = delta.source();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(delta.tensor_image(i, j, 1) == TensorElement::pure(y.t(i, j, 1), Element(1)) +
                                                     TensorElement::pure(Element(1), y.t(i, j, 1)));
    CHECK(delta.tensor_image(1, 2, 1).str() == "1 (x) t[1,2,1] + t[1,2,1] (x) 1");
}

TEST_CASE("tensor products carry the super sign") {
    YangianContext y(ZeroOneSequence::parse("01"));
    Element odd = y.t(1, 2, 1), odd2 = y.t(2, 1, 1);
    TensorElement a = TensorElement::pure(Element(1), odd);
    TensorElement b = TensorElement::pure(odd2, Element(1));
    TensorElement ab = TensorElement::multiply(a, b, y);
    TensorElement want = TensorElement::pure(odd2, odd);
    want *= Rational(-1);
    CHECK(ab == want);
    TensorElement ba = TensorElement::multiply(b, a, y);
    CHECK(ba == TensorElement::pure(odd2, odd));
}

TEST_CASE("psi shifts the inverse matrix") {
    const ZeroOneSequence s = ZeroOneSequence::parse("01"), prefix = ZeroOneSequence::parse("10");
    const int cap = 3, L = 2;
    Morphism psi(MorphismKind::psi, s, cap, prefix);
    REQUIRE(psi.shift() == L);
    MatrixSeries small = invert(t_matrix(psi.source(), cap), &psi.source());
    MatrixSeries big = invert(t_matrix(psi.target(), cap), &psi.target());
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int r = 1; r <= cap; ++r)
                CHECK(psi.apply(small.at(i, j).coeff(r)) == big.at(L + i, L + j).coeff(r));
}

TEST_CASE("maps respect the RTT relations on matrix images") {
    struct Case {
        MorphismKind kind;
        const char* seq;
        const char* prefix;
    };
    const int cap = 3;
    for (const Case& c : {Case{MorphismKind::rho, "01", ""}, Case{MorphismKind::omega, "01", ""},
                          Case{MorphismKind::zeta, "010", ""}, Case{MorphismKind::phi, "01", "1"},
                          Case{MorphismKind::psi, "01", "0"}, Case{MorphismKind::omega, "001", ""}}) {
        Morphism m(c.kind, ZeroOneSequence::parse(c.seq), cap, ZeroOneSequence::parse(*c.prefix ? c.prefix : "0"));
        oracle::EvalRep target(m.target().sequence(), {0, 3});
        const YangianContext& y = m.source();
        const int n = y.dim();
        INFO(m.str());
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int h = 1; h <= n; ++h)
                    for (int k = 1; k <= n; ++k)
                        for (int r = 1; r <= 2; ++r)
                            for (int s = 1; s <= 2; ++s)
                                CHECK(mapped(m, target, rtt_relation(y, i, j, h, k, r, s)).is_zero());
    }
}

TEST_CASE("omega and zeta need generators within the cap") {
    Morphism omega(MorphismKind::omega, ZeroOneSequence::parse("01"), 2);
    CHECK_NOTHROW(omega.image(1, 2, 2));
    CHECK_THROWS_AS(omega.image(1, 2, 3), std::out_of_range);
    CHECK_THROWS_AS(parse_morphism_kind("sigma"), std::invalid_argument);
    CHECK(std::string(morphism_name(MorphismKind::zeta)) == "zeta");
}

TEST_CASE("homomorphism and transport checks") {
    YangianContext y01(ZeroOneSequence::parse("01"));
    Composition mu11 = Composition::parse(y01.sequence(), "1,1");
    for (const ClaimReport& r :
         {check_zeta_flip(y01, mu11, 3), check_zeta_composition(y01, 3), check_ev_homomorphism(y01, 3),
          check_delta_homomorphism(y01, 2), check_psi_transport(y01, mu11, 3)}) {
        CHECK_MESSAGE(r.ok(), r.claim, ": ", r.counterexample);
        CHECK(r.checked > 0);
    }

    YangianContext y001(ZeroOneSequence::parse("001"));
    ClaimReport flip = check_zeta_flip(y001, Composition::parse(y001.sequence(), "2,1"), 2);
    CHECK_MESSAGE(flip.ok(), flip.counterexample);

    YangianContext y010(ZeroOneSequence::parse("010"));
    ClaimReport transport = check_psi_transport(y010, Composition::parse(y010.sequence(), "1,1,1"), 3);
    CHECK_MESSAGE(transport.ok(), transport.counterexample);

    // t[1,1,r] inside Y(001) against psi_1 of Y(01)
    ClaimReport commute = check_commuting_subalgebras(ZeroOneSequence::parse("0"), ZeroOneSequence::parse("01"), 3);
    CHECK_MESSAGE(commute.ok(), commute.counterexample);
    CHECK(commute.checked > 0);

    ClaimReport qd = check_psi_quasidet(ZeroOneSequence::parse("1"), ZeroOneSequence::parse("01"), 3);
    CHECK_MESSAGE(qd.ok(), qd.counterexample);
}
