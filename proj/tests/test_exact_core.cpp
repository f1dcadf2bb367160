#include "lgd/poly_matrix.hpp"
#include "lgd/random.hpp"

#include <doctest.h>

using namespace lgd;

namespace {

CenterPoly C() { return CenterPoly::variable(1, 0); }
CenterPoly k(const Rational& c) { return CenterPoly(1, c); }

PolyMatrix matrix1(std::initializer_list<std::initializer_list<CenterPoly>> rows) {
    PolyMatrix m(rows.size(), rows.begin()->size(), 1);
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const auto& x : row) m(r, c++) = x;
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK((a * 3).is_integer());
    CHECK(Rational::parse("-9/12") == Rational(-3, 4));
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("poly_eval") {
    CHECK((C() * C() - k(Rational(9, 4))).eval(std::vector<Rational>{Rational(3, 2)}).is_zero());
    CHECK(k(1).eval(std::vector<Rational>{Rational(17)}) == 1);
    auto z2 = CenterPoly::variable(2, 0), z3 = CenterPoly::variable(2, 1);
    CHECK((z2 * z3).eval(std::vector<Rational>{9, -9}) == -81);
    CHECK_THROWS((z2 * z3).eval(std::vector<Rational>{9}));
}

TEST_CASE("gcd and exact division") {
    auto p = C() - k(Rational(3, 2));
    auto g = gcd(p * p, p * (C() + k(1)));
    CHECK(g == p);
    auto q = divide_exact(p * p * (C() + k(2)), p);
    REQUIRE(q);
    CHECK(*q * p == p * p * (C() + k(2)));
    CHECK_FALSE(divide_exact(C(), C() + k(1)));
}

TEST_CASE("content_normalize") {
    auto two_c = k(2) * C();
    auto v = content_normalize({two_c, two_c * C()});
    CHECK(v == PolyVector{k(1), C()});
    CHECK(content_normalize({k(1), C()}) == PolyVector{k(1), C()});
    auto p = C() - k(Rational(3, 2));
    CHECK(content_normalize({p, p * p}) == PolyVector{k(1), p});
    CHECK(content_normalize(v) == v);
    CHECK_THROWS_AS(content_normalize({CenterPoly(1), CenterPoly(1)}), std::invalid_argument);
}

TEST_CASE("ff_rank_kernel examples") {
    SUBCASE("single relation") {
        auto r = ff_rank_kernel(matrix1({{k(1), C()}, {CenterPoly(1), CenterPoly(1)}}));
        CHECK(r.rank == 1);
        REQUIRE(r.kernel_basis.size() == 1);
        // proportional to (C, -1)
        const auto& v = r.kernel_basis[0];
        CHECK(v[0] * k(-1) - v[1] * C() == CenterPoly(1));
    }
    SUBCASE("full rank") {
        auto r = ff_rank_kernel(matrix1({{C(), k(Rational(3, 2))}, {k(Rational(3, 2)), C()}}));
        CHECK(r.rank == 2);
        CHECK(r.kernel_basis.empty());
    }
    SUBCASE("zero matrix") {
        auto r = ff_rank_kernel(PolyMatrix(2, 2, 1));
        CHECK(r.rank == 0);
        CHECK(r.kernel_basis.size() == 2);
    }
}

TEST_CASE("solve_fraction_field") {
    auto m = matrix1({{C(), k(Rational(3, 2))}, {k(Rational(3, 2)), C()}});
    auto s = solve_fraction_field(m, {CenterPoly(1), k(1)});
    REQUIRE(s);
    // Same ray as z0 = 9/4 - C^2, z = (3/2, -C); the normalization makes z0 monic.
    CHECK(s->z0 == C() * C() - k(Rational(9, 4)));
    CHECK(s->z == PolyVector{k(Rational(-3, 2)), C()});
    auto mz = m.apply(s->z);
    CHECK(mz[0] == CenterPoly(1));
    CHECK(mz[1] == s->z0);

    auto first = solve_fraction_field(m, m.column(0));
    REQUIRE(first);
    CHECK(first->z0 == k(1));
    CHECK(first->z == PolyVector{k(1), CenterPoly(1)});

    CHECK_FALSE(solve_fraction_field(matrix1({{k(1)}, {CenterPoly(1)}}), {CenterPoly(1), k(1)}));
}

TEST_CASE("kernel invariants on random matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int arity = 1 + trial % 2;
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial * 7) % 5;
        PolyMatrix m(rows, cols, arity);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_center_poly(rng, arity, 2);
        // force a dependent column now and then
        if (cols > 2 && trial % 3 == 0)
            for (std::size_t r = 0; r < rows; ++r) m(r, cols - 1) = m(r, 0) * CenterPoly::variable(arity, 0) + m(r, 1);
        auto res = ff_rank_kernel(m);
        CHECK(res.rank + res.kernel_basis.size() == cols);
        for (const auto& v : res.kernel_basis) {
            for (const auto& x : m.apply(v)) CHECK(x.is_zero());
            CHECK(content_normalize(v) == v);
        }
    }
}
