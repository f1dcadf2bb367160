#include "lgd/center_decomp.hpp"
#include "lgd/expr.hpp"
#include "lgd/random.hpp"
#include "lgd/representation.hpp"

#include <doctest.h>

using namespace lgd;

namespace {

const AlgebraSpec& sl2 = AlgebraSpec::sl2();
const AlgebraSpec& sl3 = AlgebraSpec::sl3();

CenterPoly c1(const Rational& c) { return CenterPoly(1, c); }
CenterPoly c2(const Rational& c) { return CenterPoly(2, c); }

// Substitutes the Casimir elements for the center variables.
PBWElement substitute_center(const PBWElement& p) {
    const AlgebraSpec& alg = p.algebra();
    const auto& cas = casimir_elements(alg);
    PBWElement out(alg);
    for (const auto& [e, t] : p.terms())
        for (const auto& [ce, c] : t.terms()) {
            PBWElement x = PBWElement::monomial(alg, e, CenterPoly(alg.center_arity(), c));
            for (std::size_t v = 0; v < cas.size(); ++v)
                for (std::uint32_t i = 0; i < ce[v]; ++i) x = x * cas[v];
            out += x;
        }
    return out;
}

}  // namespace

TEST_CASE("Casimir elements are central") {
    for (const AlgebraSpec* alg : {&sl2, &sl3})
        for (const auto& z : casimir_elements(*alg))
            for (Generator g = 0; g < alg->generator_count(); ++g) {
                auto x = PBWElement::generator(*alg, g);
                CHECK(z * x == x * z);
            }
}

TEST_CASE("XY over the center") {
    auto d = decompose(parse_pbw("X*Y", sl2));
    const auto& t = d.terms();
    CHECK(t.size() == 3);
    CHECK(d.formal().coefficient({0, 0, 0}) == CenterPoly::variable(1, 0) * Rational(1, 2));
    CHECK(d.formal().coefficient({0, 0, 2}) == c1(Rational(-1, 4)));
    // C = 2XY + H^2/2 - H, so XY = C/2 - H^2/4 + H/2
    CHECK(d.formal().coefficient({0, 0, 1}) == c1(Rational(1, 2)));
    CHECK(d.expand() == parse_pbw("X*Y", sl2));
    CHECK(format_expr(d) == "(1/2)*C - (1/4)*H^2 + (1/2)*H");
}

TEST_CASE("Y2X2 over the center") {
    auto d = decompose(parse_pbw("Y2*X2", sl3));
    auto f = d.formal();
    auto mono = [](std::initializer_list<std::pair<int, unsigned>> powers) {
        Exponents e(8, 0);
        for (auto [i, p] : powers) e[i] = p;
        return e;
    };
    CHECK(f.coefficient(mono({})) == CenterPoly::variable(2, 0) * Rational(1, 3));
    CHECK(f.coefficient(mono({{6, 2}})) == c2(Rational(-1, 3)));
    CHECK(f.coefficient(mono({{6, 1}, {7, 1}})) == c2(Rational(-1, 3)));
    CHECK(f.coefficient(mono({{7, 2}})) == c2(Rational(-1, 3)));
    CHECK(f.coefficient(mono({{0, 1}, {3, 1}})) == c2(-1));
    CHECK(f.coefficient(mono({{2, 1}, {5, 1}})) == c2(-1));
    CHECK(f.coefficient(mono({{6, 1}})) == c2(-1));
    CHECK(f.coefficient(mono({{7, 1}})) == c2(-1));
    CHECK(d.terms().size() == 8);
}

TEST_CASE("constraint-free inputs are untouched") {
    for (const char* s : {"X^3*H", "Y^2", "H^5"}) {
        auto p = parse_pbw(s, sl2);
        CHECK(decompose(p).formal() == p);
    }
    auto p = parse_pbw("Y1*X3*H2^2", sl3);
    CHECK(decompose(p).formal() == p);
}

TEST_CASE("H2^3 rule leaves no constrained monomial") {
    DecomposeStats st;
    auto d = decompose(parse_pbw("H2^3", sl3), &st);
    CHECK(st.strictly_decreasing);
    for (const auto& [e, t] : d.terms()) CHECK(satisfies_constraint(sl3, e));
    CHECK(d.expand() == parse_pbw("H2^3", sl3));
}

TEST_CASE("recomposition of random elements") {
    Rng rng(21);
    for (int i = 0; i < 25; ++i) {
        auto p = random_element(rng, sl2, 5, 4, 1);
        auto d = decompose(p);
        CHECK(d.expand() == substitute_center(p));
        for (const auto& [e, t] : d.terms()) CHECK(satisfies_constraint(sl2, e));
        // the decomposition is unique, so decomposing twice is stable
        CHECK(decompose(d.expand()) == d);
    }
    for (int i = 0; i < 10; ++i) {
        auto p = random_element(rng, sl3, 3, 3);
        auto d = decompose(p);
        CHECK(d.expand() == p);
    }
}

TEST_CASE("decomposition agrees under evaluation") {
    Rng rng(22);
    auto rep = sl3_irrep({1, 2});
    MonomialEvaluator ev(rep);
    for (int i = 0; i < 10; ++i) {
        auto p = random_element(rng, sl3, 4, 3);
        CHECK(ev.eval(p) == ev.eval(decompose(p).formal()));
    }
}

TEST_CASE("verify_identity") {
    auto C = CenterPoly::variable(1, 0);
    std::vector<PBWElement> ps{parse_pbw("H", sl2), parse_pbw("C*X^2 + (3/2)*H", sl2),
                               parse_pbw("(3/2)*X^2 + C*H", sl2)};
    CHECK(verify_identity({c1(Rational(9, 4)) - C * C, c1(Rational(-3, 2)), C}, ps));
    CHECK_FALSE(verify_identity({c1(1), c1(0), c1(0)}, ps));
    CHECK_THROWS(verify_identity({c1(1)}, ps));
}
