#include "lgd/expr.hpp"
#include "lgd/pbw.hpp"
#include "lgd/random.hpp"
#include "lgd/representation.hpp"

#include <doctest.h>

using namespace lgd;

namespace {

const AlgebraSpec& sl2 = AlgebraSpec::sl2();
const AlgebraSpec& sl3 = AlgebraSpec::sl3();

Generator gen(const AlgebraSpec& alg, const char* name) { return *alg.generator_index(name); }

PBWElement g(const AlgebraSpec& alg, const char* name) { return PBWElement::generator(alg, gen(alg, name)); }

QVector unit(std::size_t n, std::size_t i) {
    QVector v(n);
    v[i] = 1;
    return v;
}

// [a,b] from the defining matrices, read back in generator coordinates.
QVector matrix_bracket(const AlgebraSpec& alg, Generator a, Generator b) {
    return alg.coordinates(commutator(alg.defining_matrix(a), alg.defining_matrix(b)));
}

}  // namespace

TEST_CASE("brackets quoted as relations") {
    CHECK(sl2.bracket(gen(sl2, "X"), gen(sl2, "Y")) == unit(3, gen(sl2, "H")));
    CHECK(sl3.bracket(gen(sl3, "Y2"), gen(sl3, "Y1")) == unit(8, gen(sl3, "Y3")));
    CHECK(is_zero_vector(sl3.bracket(gen(sl3, "H1"), gen(sl3, "H2"))));
    QVector hy(3);
    hy[gen(sl2, "Y")] = -2;
    CHECK(sl2.bracket(gen(sl2, "H"), gen(sl2, "Y")) == hy);
}

TEST_CASE("brackets agree with matrix commutators and satisfy Jacobi") {
    for (const AlgebraSpec* alg : {&sl2, &sl3}) {
        std::size_t n = alg->generator_count();
        auto lie = [&](const QVector& u, Generator c) {
            QVector out(n);
            for (Generator a = 0; a < n; ++a)
                if (!u[a].is_zero()) {
                    const QVector& b = alg->bracket(a, c);
                    for (std::size_t i = 0; i < n; ++i) out[i] += u[a] * b[i];
                }
            return out;
        };
        for (Generator a = 0; a < n; ++a)
            for (Generator b = 0; b < n; ++b) {
                CHECK(alg->bracket(a, b) == matrix_bracket(*alg, a, b));
                for (Generator c = 0; c < n; ++c) {
                    // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
                    QVector s = lie(alg->bracket(a, b), c);
                    QVector t = lie(alg->bracket(b, c), a);
                    QVector u = lie(alg->bracket(c, a), b);
                    for (std::size_t i = 0; i < n; ++i) CHECK((s[i] + t[i] + u[i]).is_zero());
                }
            }
    }
}

TEST_CASE("normal form examples") {
    CHECK(g(sl2, "Y") * g(sl2, "X") == g(sl2, "X") * g(sl2, "Y") - g(sl2, "H"));
    PBWElement xy = g(sl2, "X") * g(sl2, "Y");
    CHECK(xy.terms().size() == 1);
    CHECK(xy.terms().begin()->first == Exponents{1, 1, 0});
    CHECK(g(sl2, "H") * g(sl2, "H") == PBWElement::monomial(sl2, {0, 0, 2}, CenterPoly(1, 1)));
    CHECK(g(sl2, "H") * g(sl2, "Y") == PBWElement::monomial(sl2, {0, 1, 1}, CenterPoly(1, 1)) - 2 * g(sl2, "Y"));
    CHECK(g(sl3, "X1") * g(sl3, "Y1") == g(sl3, "Y1") * g(sl3, "X1") + g(sl3, "H1"));
    CHECK(g(sl3, "Y1") * g(sl3, "X1") == PBWElement::monomial(sl3, {1, 0, 0, 1, 0, 0, 0, 0}, CenterPoly(2, 1)));
}

TEST_CASE("normal form is idempotent and respects the step bound") {
    Rng rng(11);
    for (const AlgebraSpec* alg : {&sl2, &sl3})
        for (int i = 0; i < 40; ++i) {
            FreeElement e = random_free_element(rng, *alg, 5, 3);
            NormalFormStats st;
            PBWElement nf = pbw_normal_form(e, &st);
            CHECK(pbw_normal_form(nf.to_free()) == nf);
            for (auto [len, steps] : st.per_word) CHECK(steps <= len * len * len);
        }
}

TEST_CASE("normal form is a homomorphism") {
    Rng rng(12);
    for (const AlgebraSpec* alg : {&sl2, &sl3})
        for (int i = 0; i < 25; ++i) {
            FreeElement a = random_free_element(rng, *alg, 4, 3);
            FreeElement b = random_free_element(rng, *alg, 4, 3);
            CHECK(pbw_normal_form(a * b) == pbw_mul(pbw_normal_form(a), pbw_normal_form(b)));
        }
}

TEST_CASE("normal form preserves the defining representation") {
    Rng rng(13);
    for (const AlgebraSpec* alg : {&sl2, &sl3}) {
        RepMatrices def{alg, alg->matrix_size(), {}, "defining", {}, std::nullopt};
        for (Generator i = 0; i < alg->generator_count(); ++i) def.matrices.push_back(alg->defining_matrix(i));
        for (int i = 0; i < 25; ++i) {
            FreeElement e = random_free_element(rng, *alg, 4, 3);
            CHECK(eval_element(e, def) == eval_element(pbw_normal_form(e), def));
        }
    }
}

TEST_CASE("mixed algebras are rejected") {
    CHECK_THROWS_AS(g(sl2, "X") * g(sl3, "X1"), std::invalid_argument);
    CHECK_THROWS(sl2.generator_name(7));
}
