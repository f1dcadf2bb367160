#include "lgd/center_decomp.hpp"
#include "lgd/errors.hpp"
#include "lgd/representation.hpp"

#include <doctest.h>

using namespace lgd;

namespace {

const AlgebraSpec& sl2 = AlgebraSpec::sl2();
const AlgebraSpec& sl3 = AlgebraSpec::sl3();

Generator gen(const AlgebraSpec& alg, const char* name) { return *alg.generator_index(name); }

QMatrix diag(std::initializer_list<int> d) {
    QMatrix m(d.size(), d.size());
    std::size_t i = 0;
    for (int x : d) m(i, i) = x, ++i;
    return m;
}

unsigned weyl_dimension(unsigned m1, unsigned m2) { return (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) / 2; }

}  // namespace

TEST_CASE("rho_k matrices") {
    auto r2 = sl2_irrep(2);
    QMatrix x(2, 2), y(2, 2);
    x(0, 1) = 1;
    y(1, 0) = 1;
    CHECK(r2[gen(sl2, "X")] == x);
    CHECK(r2[gen(sl2, "Y")] == y);
    CHECK(r2[gen(sl2, "H")] == diag({1, -1}));
    auto r1 = sl2_irrep(1);
    for (const auto& m : r1.matrices) CHECK(m == QMatrix(1, 1));
    CHECK(sl2_irrep(3)[gen(sl2, "H")] == diag({2, 0, -2}));
    CHECK_THROWS(sl2_irrep(0));
}

TEST_CASE("brackets map to commutators") {
    for (unsigned k = 1; k <= 7; ++k) CHECK(check_brackets(sl2_irrep(k)));
    for (unsigned m1 = 0; m1 <= 2; ++m1)
        for (unsigned m2 = 0; m2 <= 2; ++m2) CHECK(check_brackets(sl3_irrep({m1, m2})));
    CHECK(check_brackets(sym_power_rep(2, 2)));
}

TEST_CASE("Casimir scalars") {
    CHECK(casimir_sl2(2) == Rational(3, 2));
    CHECK(casimir_sl3(1, 1)[0] == 9);
    CHECK(casimir_sl3(1, 1)[1] == -9);
    CHECK(casimir_sl3(1, 0)[1] == Rational(-16, 9));
    // Schur: C acts by (k^2-1)/2
    const auto& cz = casimir_elements(sl2);
    for (unsigned k = 1; k <= 6; ++k)
        CHECK(eval_element(cz[0], sl2_irrep(k)) == QMatrix::identity(k) * Rational(k * k - 1, 2));
    CHECK_THROWS(casimir_scalars(sym_power_rep(2, 2)));
}

TEST_CASE("sl3 irreducible dimensions match the Weyl formula") {
    for (unsigned m1 = 0; m1 <= 3; ++m1)
        for (unsigned m2 = 0; m2 <= 3; ++m2) {
            auto rep = sl3_irrep({m1, m2});
            CHECK(rep.dimension == weyl_dimension(m1, m2));
            CHECK(rep.basis_triples.size() == rep.dimension);
        }
    CHECK(sl3_irrep({1, 0}).dimension == 3);
    CHECK(sl3_irrep({1, 1}).dimension == 8);
}

TEST_CASE("sl3 cap is enforced") {
    CHECK_THROWS_AS(sl3_irrep({6, 6}, 100), CapExceeded);
}

TEST_CASE("prop32 vectors") {
    CHECK(prop32_vector(1, 0) == QVector{0, 1, 0, 1});
    QVector v = prop32_vector(2, 0);
    REQUIRE(v.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) CHECK(v[i] == ((i == 2 || i == 6 || i == 8) ? 1 : 0));
    QVector e1 = prop32_vector(0, 0);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0] == 1);
}

TEST_CASE("scalar-dependence witness for n = 2") {
    auto w = theorem1_witness(2, 1);
    CHECK(w.rep.dimension == 4);
    QVector e1{1, 0}, e2{0, 1};
    // H acts by +1 on e1 and -1 on e2 in each copy
    QVector hv = w.rep[gen(sl2, "H")] * w.vector;
    CHECK(hv == QVector{1, 0, 0, -1});
    CHECK(w.vector == QVector{1, 0, 0, 1});
}

TEST_CASE("Lemma action examples") {
    WeightPair w{2, 3};
    auto y1 = lemma_action(gen(sl3, "Y1"), {1, 2, 0}, w);
    CHECK(y1 == std::map<VIndex, Rational>{{{2, 2, 0}, Rational(1)}});
    auto h1 = lemma_action(gen(sl3, "H1"), {0, 0, 0}, w);
    CHECK(h1 == std::map<VIndex, Rational>{{{0, 0, 0}, Rational(2)}});
    CHECK(lemma_action(gen(sl3, "X1"), {0, 0, 0}, w).empty());
}

TEST_CASE("admitted vectors are independent for m1, m2 >= d") {
    for (unsigned d = 1; d <= 2; ++d)
        for (unsigned m1 = d; m1 <= 4; ++m1)
            for (unsigned m2 = d; m2 <= 4; ++m2) {
                Sl3Model model({m1, m2}, 200000);
                std::vector<QVector> vs;
                for (int k = 0; k <= int(d); ++k)
                    for (int l = 0; k + l <= int(d); ++l)
                        for (int m = 0; k + l + m <= int(d); ++m) vs.push_back(model.v(k, l, m));
                CHECK(rank_of_vectors(vs) == vs.size());
            }
}

TEST_CASE("leading coefficient of v_{k,l,m}") {
    const unsigned m1 = 3, m2 = 2;
    Sl3Model model({m1, m2});
    for (unsigned k = 0; k <= 2; ++k)
        for (unsigned l = 0; l <= m2; ++l)
            for (unsigned m = 0; k + m <= m1; ++m) {
                std::size_t idx = model.model_index({m1 - k - m, k, m}, {m2 - l, l, 0});
                CHECK(model.v(int(k), int(l), int(m))[idx] == Rational(beta_leading(m1, m2, k, l, m)));
            }
}

TEST_CASE("restriction to the irreducible is consistent") {
    Sl3Model model({2, 1});
    const auto& rep = model.irrep();
    for (Generator g = 0; g < sl3.generator_count(); ++g)
        for (std::size_t a = 0; a < rep.basis_triples.size(); ++a) {
            auto t = rep.basis_triples[a];
            QVector image = model.model_matrix(g) * model.v(t[0], t[1], t[2]);
            QVector col(rep.dimension);
            for (std::size_t r = 0; r < rep.dimension; ++r) col[r] = rep[g](r, a);
            CHECK(model.w_coordinates(image) == col);
        }
}
