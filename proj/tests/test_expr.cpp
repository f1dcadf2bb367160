#include "lgd/expr.hpp"
#include "lgd/random.hpp"

#include <doctest.h>

using namespace lgd;

namespace {
const AlgebraSpec& sl2 = AlgebraSpec::sl2();
const AlgebraSpec& sl3 = AlgebraSpec::sl3();
}  // namespace

TEST_CASE("parse and format") {
    CHECK(format_expr(parse_pbw("Y*X", sl2)) == "X*Y - H");
    CHECK(format_expr(parse_pbw("0", sl2)) == "0");
    CHECK(format_expr(parse_pbw("2*(X + Y) - X", sl2)) == "X + 2*Y");
    CHECK(format_expr(parse_pbw("(H - 1)^2", sl2)) == "H^2 - 2*H + 1");
    CHECK(parse_pbw("C^2*I", sl2) == parse_pbw("C*C", sl2));
    CHECK(parse_pbw("Z2*Z3 - Z3*Z2", sl3).is_zero());
    CHECK(parse_pbw("X1*Y1", sl3) == parse_pbw("Y1*X1 + H1", sl3));
    FreeElement f = parse_expr("Y*X", sl2);
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms().begin()->first == Word{1, 0});
}

TEST_CASE("parse errors carry a position") {
    auto position_of = [](const char* text, const AlgebraSpec& alg) -> std::size_t {
        try {
            parse_pbw(text, alg);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::size_t(-1);
    };
    CHECK(position_of("X1", sl2) == 0);
    CHECK(position_of("(X + Y", sl2) == 0);
    CHECK(position_of("X^", sl2) == 2);
    CHECK(position_of("X + * Y", sl2) == 4);
    CHECK_THROWS_WITH_AS(parse_pbw("X1", sl2), doctest::Contains("unknown generator 'X1' for sl2"), ParseError);
    CHECK_THROWS_AS(parse_pbw("X/0", sl2), std::invalid_argument);
}

TEST_CASE("format round trip") {
    Rng rng(31);
    for (const AlgebraSpec* alg : {&sl2, &sl3})
        for (int i = 0; i < 100; ++i) {
            auto e = random_element(rng, *alg, 4, 4, 2);
            CHECK(parse_pbw(format_expr(e), *alg) == e);
        }
}

TEST_CASE("center formatting") {
    auto C = CenterPoly::variable(1, 0);
    CHECK(format_center(C * C - CenterPoly(1, Rational(9, 4))) == "C^2 - 9/4");
    CHECK(format_center(CenterPoly(2)) == "0");
}
