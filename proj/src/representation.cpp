#include "lgd/representation.hpp"

#include "lgd/errors.hpp"
#include "lgd/monomials.hpp"

#include <stdexcept>

namespace lgd {

RepMatrices sl2_irrep(unsigned k) {
    if (k == 0) throw std::invalid_argument("sl2_irrep: k must be at least 1");
    QMatrix x(k, k), y(k, k), h(k, k);
    for (unsigned i = 1; i <= k; ++i) {
        if (i >= 2) x(i - 2, i - 1) = Rational(static_cast<long>(k - i + 1));
        if (i < k) y(i, i - 1) = Rational(static_cast<long>(i));
        h(i - 1, i - 1) = Rational(static_cast<long>(k + 1) - 2 * static_cast<long>(i));
    }
    RepMatrices rep;
    rep.algebra = &AlgebraSpec::sl2();
    rep.dimension = k;
    rep.matrices = {std::move(x), std::move(y), std::move(h)};
    rep.label = "rho_" + std::to_string(k);
    rep.casimir = std::vector<Rational>{casimir_sl2(k)};
    return rep;
}

namespace {

const AlgebraSpec& sl_n(unsigned n) {
    if (n == 2) return AlgebraSpec::sl2();
    if (n == 3) return AlgebraSpec::sl3();
    throw std::invalid_argument("only n = 2 and n = 3 are supported");
}

// n copies of the defining representation on C^{n^2}; copy c occupies indices c*n .. c*n+n-1.
QMatrix copies_of_standard(const QMatrix& z, unsigned n) {
    return block_diagonal(std::vector<QMatrix>(n, z));
}

}  // namespace

RepMatrices sym_power_rep(unsigned n, unsigned k) {
    const AlgebraSpec& alg = sl_n(n);
    if (k == 0) throw std::invalid_argument("sym_power_rep: k must be at least 1");
    MonomialBasis basis(n * n, k);
    RepMatrices rep;
    rep.algebra = &alg;
    rep.dimension = basis.size();
    for (Generator g = 0; g < alg.generator_count(); ++g)
        rep.matrices.push_back(basis.derivation(copies_of_standard(alg.defining_matrix(g), n)));
    rep.label = "Sym^" + std::to_string(k) + "(pi_" + std::to_string(n) + ")";
    return rep;
}

Theorem1Witness theorem1_witness(unsigned n, unsigned d) {
    const AlgebraSpec& alg = sl_n(n);
    if (d == 0) throw std::invalid_argument("theorem1_witness: d must be at least 1");
    std::vector<RepMatrices> parts;
    QVector v;
    for (unsigned k = 1; k <= d; ++k) {
        parts.push_back(sym_power_rep(n, k));
        MonomialBasis basis(n * n, k);
        QVector part(basis.size());
        // (sum_i x_{i*n+i})^k expanded by the multinomial theorem.
        for (std::size_t idx = 0; idx < basis.size(); ++idx) {
            const auto& a = basis.exponents(idx);
            bool supported = true;
            mpz_class denom = 1;
            for (unsigned var = 0; var < n * n; ++var) {
                if (a[var] == 0) continue;
                if (var % (n + 1) != 0) supported = false;
                denom *= factorial(a[var]);
            }
            if (supported) part[idx] = Rational(factorial(k), denom);
        }
        v.insert(v.end(), part.begin(), part.end());
    }
    RepMatrices rep;
    rep.algebra = &alg;
    for (Generator g = 0; g < alg.generator_count(); ++g) {
        std::vector<QMatrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.matrices[g]);
        rep.matrices.push_back(block_diagonal(blocks));
    }
    rep.dimension = rep.matrices.front().rows();
    rep.label = "pi_{" + std::to_string(n) + "," + std::to_string(d) + "}";
    return {std::move(rep), std::move(v)};
}

QVector prop32_vector(unsigned d, unsigned t) {
    const std::size_t n = static_cast<std::size_t>(d + 1) * (d + 1) + t;
    QVector v(n);
    std::size_t i = d + 1;
    for (unsigned k = 1; k <= d + 1; ++k) {
        v[i - 1] = Rational(1);
        if (k <= d) i += 2 * (d - k + 1);
    }
    return v;
}

Rational casimir_sl2(unsigned k) {
    long kk = k;
    return Rational(kk * kk - 1, 2);
}

std::array<Rational, 2> casimir_sl3(unsigned m1, unsigned m2) {
    Rational a(static_cast<long>(m1)), b(static_cast<long>(m2));
    Rational d2 = a * a + a * b + b * b + Rational(3) * a + Rational(3) * b;
    Rational d3 = (a + Rational(2) * b) * (Rational(6) + Rational(2) * a + b) * (Rational(-3) + a - b) / Rational(9);
    return {d2, d3};
}

std::vector<Rational> casimir_scalars(const RepMatrices& rep) {
    if (!rep.casimir) throw std::invalid_argument(rep.label + " is not a known irreducible");
    return *rep.casimir;
}

bool check_brackets(const RepMatrices& rep) {
    const AlgebraSpec& alg = *rep.algebra;
    const std::size_t n = alg.generator_count();
    for (Generator a = 0; a < n; ++a)
        for (Generator b = 0; b < n; ++b) {
            QMatrix expected(rep.dimension, rep.dimension);
            const QVector& br = alg.bracket(a, b);
            for (Generator c = 0; c < n; ++c)
                if (!br[c].is_zero()) expected += rep.matrices[c] * br[c];
            if (commutator(rep.matrices[a], rep.matrices[b]) != expected) return false;
        }
    return true;
}

namespace {

std::span<const Rational> pick_point(const CenterPoly& c, const RepMatrices& rep,
                                     const std::optional<std::span<const Rational>>& point) {
    if (point) return *point;
    if (rep.casimir) return std::span<const Rational>(*rep.casimir);
    throw std::invalid_argument("element has center-variable coefficients (" + c.to_string() +
                                ") but no center point was given for " + rep.label);
}

Rational coefficient_value(const CenterPoly& c, const RepMatrices& rep,
                           const std::optional<std::span<const Rational>>& point) {
    if (c.is_constant()) return c.constant_value();
    return c.eval(pick_point(c, rep, point));
}

void check_rep(const AlgebraSpec& alg, const RepMatrices& rep) {
    if (rep.algebra != &alg) throw std::invalid_argument("representation " + rep.label + " is not of " + alg.name());
}

}  // namespace

const QMatrix& MonomialEvaluator::monomial(const Exponents& e) {
    if (auto it = memo_.find(e); it != memo_.end()) return it->second;
    Generator g = 0;
    while (g < e.size() && e[g] == 0) ++g;
    QMatrix m;
    if (g == e.size()) {
        m = QMatrix::identity(rep_.dimension);
    } else {
        Exponents rest = e;
        --rest[g];
        m = rep_.matrices[g] * monomial(rest);
    }
    return memo_.emplace(e, std::move(m)).first->second;
}

QMatrix MonomialEvaluator::eval(const PBWElement& e, std::optional<std::span<const Rational>> point) {
    check_rep(e.algebra(), rep_);
    QMatrix out(rep_.dimension, rep_.dimension);
    for (const auto& [ex, c] : e.terms()) {
        Rational s = coefficient_value(c, rep_, point);
        if (!s.is_zero()) out += monomial(ex) * s;
    }
    return out;
}

QMatrix eval_element(const PBWElement& e, const RepMatrices& rep, std::optional<std::span<const Rational>> point) {
    return MonomialEvaluator(rep).eval(e, point);
}

QMatrix eval_element(const FreeElement& e, const RepMatrices& rep, std::optional<std::span<const Rational>> point) {
    check_rep(e.algebra(), rep);
    QMatrix out(rep.dimension, rep.dimension);
    for (const auto& [w, c] : e.terms()) {
        Rational s = coefficient_value(c, rep, point);
        if (s.is_zero()) continue;
        QMatrix m = QMatrix::identity(rep.dimension);
        for (auto g : w) m = m * rep.matrices[g];
        out += m * s;
    }
    return out;
}

QVector apply_element(const PBWElement& e, const RepMatrices& rep, const QVector& v,
                      std::optional<std::span<const Rational>> point) {
    check_rep(e.algebra(), rep);
    if (v.size() != rep.dimension) throw std::invalid_argument("apply_element: vector length mismatch");
    QVector out(rep.dimension);
    for (const auto& [ex, c] : e.terms()) {
        Rational s = coefficient_value(c, rep, point);
        if (s.is_zero()) continue;
        QVector x = v;
        for (Generator g = ex.size(); g-- > 0;)
            for (std::uint32_t i = 0; i < ex[g]; ++i) x = rep.matrices[g] * x;
        for (std::size_t i = 0; i < out.size(); ++i)
            if (!x[i].is_zero()) out[i] += s * x[i];
    }
    return out;
}

std::map<VIndex, Rational> lemma_action(Generator g, VIndex idx, WeightPair w) {
    const long k = idx[0], l = idx[1], m = idx[2];
    if (k < 0 || l < 0 || m < 0) throw std::invalid_argument("lemma_action: negative index");
    const long m1 = w.m1, m2 = w.m2;
    std::map<VIndex, Rational> out;
    auto add = [&out](long a, long b, long c, long coeff) {
        if (a < 0 || b < 0 || c < 0 || coeff == 0) return;
        VIndex key{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
        Rational& slot = out[key];
        slot += Rational(coeff);
        if (slot.is_zero()) out.erase(key);
    };
    switch (g) {
        case 0: add(k + 1, l, m, 1); break;                              // Y1
        case 1: add(k, l + 1, m, 1); add(k - 1, l, m + 1, k); break;     // Y2
        case 2: add(k, l, m + 1, 1); break;                              // Y3
        case 3: add(k - 1, l, m, k * (m1 - k + 1 + l - m));              // X1
                add(k, l + 1, m - 1, -m); break;
        case 4: add(k, l - 1, m, l * (m2 - l + 1));                      // X2
                add(k + 1, l, m - 1, m); break;
        case 5: add(k - 1, l - 1, m, -k * l * (m2 - l + 1));             // X3
                add(k, l, m - 1, m * (m1 + m2 + 1 - l - k - m)); break;
        case 6: add(k, l, m, m1 - 2 * k + l - m); break;                 // H1
        case 7: add(k, l, m, m2 + k - 2 * l - m); break;                 // H2
        default: throw std::invalid_argument("lemma_action: unknown sl3 generator " + std::to_string(g));
    }
    return out;
}

mpz_class beta_leading(unsigned m1, unsigned m2, unsigned k, unsigned l, unsigned m) {
    if (m > m1 || l > m2 || k > m1 - m) return 0;
    return binomial(m1, m) * binomial(m2, l) * binomial(m1 - m, k) * factorial(k) * factorial(l) * factorial(m);
}

}  // namespace lgd
