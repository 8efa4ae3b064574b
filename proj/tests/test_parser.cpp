#include <doctest.h>

#include <random>

#include "sy/parser.hpp"

using namespace sy;

namespace {

Expr atom(Family f, std::vector<int> idx) { return Expr::atom(Atom{f, std::move(idx)}); }

Expr random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1), small(1, 3), num(-4, 4), den(1, 3);
    switch (pick(rng)) {
        case 0:
            return Expr::number(Rational(num(rng), den(rng)));
        case 1: {
            static const Family fams[] = {Family::T, Family::TPRIME, Family::D, Family::E, Family::F, Family::E_LIE};
            Family f = fams[std::uniform_int_distribution<int>(0, 5)(rng)];
            std::vector<int> idx(Atom::arity(f));
            for (int& v : idx) v = small(rng);
            return atom(f, idx);
        }
        case 2:
            return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
        case 3:
            return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
        case 4:
            return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
        default:
            return bracket(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    }
}

}  // namespace

TEST_CASE("atoms and arithmetic") {
    CHECK(parse_expression("t[1,2,1]") == atom(Family::T, {1, 2, 1}));
    CHECK(parse_expression("  E[1,2,1,1,3] ") == atom(Family::E, {1, 2, 1, 1, 3}));
    CHECK(parse_expression("e[2,1]") == atom(Family::E_LIE, {2, 1}));
    Expr a = atom(Family::T, {1, 2, 1}), b = atom(Family::T, {2, 1, 1});
    CHECK(parse_expression("[t[1,2,1], t[2,1,1]]") == bracket(a, b));
    CHECK(parse_expression("t[1,2,1]*t[2,1,1] - 1/2") == a * b - Expr::number(Rational(1, 2)));
    CHECK(parse_expression("-(t[1,2,1])") == -a);
    CHECK(parse_expression("2*3*t[1,2,1]").str() == "6*t[1,2,1]");
    CHECK(parse_expression("[t[1,2,1], t[2,1,1]]").str() == "[t[1,2,1], t[2,1,1]]");
    CHECK(family_from_name("Dp") == Family::DPRIME);
    CHECK_THROWS_AS(family_from_name("G"), std::invalid_argument);
}

TEST_CASE("errors carry a position") {
    auto where = [](const char* text) {
        try {
            parse_expression(text);
        } catch (const ParseError& e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair{0, 0};
    };
    CHECK(where("t[1,2]") != std::pair{0, 0});
    CHECK(where("q[1,2,1]") == std::pair{1, 1});
    CHECK(where("t[1,1,1] +\n  t[1,2") == std::pair{2, 8});
    CHECK(where("t[1,1,1] )").first == 1);
    CHECK(where("1/0") != std::pair{0, 0});
    CHECK(where("") != std::pair{0, 0});
    CHECK_THROWS_AS(parse_expression("[t[1,1,1]]"), ParseError);
}

TEST_CASE("rendering then parsing gives the same tree") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 3000; ++k) {
        Expr x = random_expr(rng, k % 4 + 1);
        INFO(x.str());
        CHECK(parse_expression(x.str()) == x);
        CHECK(parse_expression(x.str()).str() == x.str());
    }
}
