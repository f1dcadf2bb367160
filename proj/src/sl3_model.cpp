#include "lgd/errors.hpp"
#include "lgd/monomials.hpp"
#include "lgd/representation.hpp"

#include <mutex>
#include <stdexcept>

namespace lgd {

namespace {

// Dual action -Z^T rewritten in the basis f1 = e3, f2 = -e2, f3 = e1.
QMatrix dual_in_f_basis(const QMatrix& z) {
    QMatrix p(3, 3);
    p(2, 0) = Rational(1);
    p(1, 1) = Rational(-1);
    p(0, 2) = Rational(1);
    QMatrix dual = z.transpose() * Rational(-1);
    return p.transpose() * dual * p;  // p is a signed permutation, so p^-1 = p^T
}

// a (x) I + I (x) b
QMatrix kron_sum(const QMatrix& a, const QMatrix& b) {
    const std::size_t n1 = a.rows(), n2 = b.rows();
    QMatrix m(n1 * n2, n1 * n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < n2; ++k) m(i * n2 + k, j * n2 + k) += a(i, j);
        }
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t k = 0; k < n2; ++k)
            for (std::size_t l = 0; l < n2; ++l)
                if (!b(k, l).is_zero()) m(i * n2 + k, i * n2 + l) += b(k, l);
    return m;
}

std::size_t monomial_count(unsigned degree) { return static_cast<std::size_t>(degree + 1) * (degree + 2) / 2; }

}  // namespace

Sl3Model::Sl3Model(WeightPair w, std::size_t cap) : w_(w) {
    dim1_ = monomial_count(w.m1);
    dim2_ = monomial_count(w.m2);
    dim_ = dim1_ * dim2_;
    if (dim_ * dim_ > cap)
        throw CapExceeded("sl3 weight (" + std::to_string(w.m1) + "," + std::to_string(w.m2) + "): model dimension " +
                          std::to_string(dim_) + " squared exceeds cap " + std::to_string(cap));

    const AlgebraSpec& alg = AlgebraSpec::sl3();
    MonomialBasis b1(3, w.m1), b2(3, w.m2);
    for (std::size_t i = 0; i < b1.size(); ++i) {
        const auto& e = b1.exponents(i);
        mono1_.push_back({e[0], e[1], e[2]});
    }
    for (std::size_t i = 0; i < b2.size(); ++i) {
        const auto& e = b2.exponents(i);
        mono2_.push_back({e[0], e[1], e[2]});
    }
    for (Generator g = 0; g < alg.generator_count(); ++g) {
        const QMatrix& z = alg.defining_matrix(g);
        model_.push_back(kron_sum(b1.derivation(z), b2.derivation(dual_in_f_basis(z))));
    }
    zero_ = QVector(dim_);

    // Closure of the highest-weight vector, admitted level by level in (i+j+k, i, j) order.
    SpanBuilder span(dim_);
    std::vector<QVector> admitted;
    for (int s = 0;; ++s) {
        if (s > static_cast<int>(3 * (w.m1 + w.m2) + 3)) throw InvariantViolation("sl3 closure did not terminate");
        bool any = false;
        for (int i = 0; i <= s; ++i)
            for (int j = 0; i + j <= s; ++j) {
                const QVector& x = v(i, j, s - i - j);
                if (is_zero_vector(x)) continue;
                any = true;
                if (span.add(x)) {
                    irrep_.basis_triples.push_back({i, j, s - i - j});
                    admitted.push_back(x);
                }
            }
        if (!any) break;
    }

    const std::size_t r = admitted.size();
    QMatrix basis = QMatrix::from_columns(admitted, dim_);
    QMatrix bt = basis.transpose();
    pivot_rows_ = rref(bt);
    QMatrix sub(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t c = 0; c < r; ++c) sub(a, c) = basis(pivot_rows_[a], c);
    auto inv = inverse(sub);
    if (!inv) throw InvariantViolation("sl3 closure: pivot block is singular");
    pivot_inverse_ = std::move(*inv);

    irrep_.algebra = &alg;
    irrep_.dimension = r;
    for (Generator g = 0; g < alg.generator_count(); ++g) {
        QMatrix image = model_[g] * basis;
        QMatrix picked(r, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t c = 0; c < r; ++c) picked(a, c) = image(pivot_rows_[a], c);
        QMatrix restricted = pivot_inverse_ * picked;
        if (basis * restricted != image)
            throw InvariantViolation("sl3 closure: span of v_{i,j,k} is not invariant under " + alg.generator_name(g));
        irrep_.matrices.push_back(std::move(restricted));
    }
    irrep_.label = "pi_{" + std::to_string(w.m1) + "," + std::to_string(w.m2) + "}";
    auto [d2, d3] = casimir_sl3(w.m1, w.m2);
    irrep_.casimir = std::vector<Rational>{d2, d3};
}

std::size_t Sl3Model::model_index(std::array<unsigned, 3> a, std::array<unsigned, 3> b) const {
    std::size_t ia = dim1_, ib = dim2_;
    for (std::size_t i = 0; i < dim1_; ++i)
        if (mono1_[i] == a) ia = i;
    for (std::size_t i = 0; i < dim2_; ++i)
        if (mono2_[i] == b) ib = i;
    if (ia == dim1_ || ib == dim2_) throw std::out_of_range("Sl3Model::model_index: exponents of wrong degree");
    return ia * dim2_ + ib;
}

const QVector& Sl3Model::v(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0) return zero_;
    VIndex key{i, j, k};
    if (auto it = vcache_.find(key); it != vcache_.end()) return it->second;
    QVector x;
    if (i > 0)
        x = model_[0] * v(i - 1, j, k);
    else if (j > 0)
        x = model_[1] * v(0, j - 1, k);
    else if (k > 0)
        x = model_[2] * v(0, 0, k - 1);
    else {
        x = zero_;
        x[model_index({w_.m1, 0, 0}, {w_.m2, 0, 0})] = Rational(1);
    }
    return vcache_.emplace(key, std::move(x)).first->second;
}

QVector Sl3Model::w_coordinates(const QVector& x) const {
    if (x.size() != dim_) throw std::invalid_argument("w_coordinates: vector length mismatch");
    const std::size_t r = irrep_.dimension;
    QVector picked(r);
    for (std::size_t a = 0; a < r; ++a) picked[a] = x[pivot_rows_[a]];
    QVector c = pivot_inverse_ * picked;
    QVector back(dim_);
    for (std::size_t a = 0; a < r; ++a) {
        if (c[a].is_zero()) continue;
        const QVector& b = v(irrep_.basis_triples[a][0], irrep_.basis_triples[a][1], irrep_.basis_triples[a][2]);
        for (std::size_t i = 0; i < dim_; ++i)
            if (!b[i].is_zero()) back[i] += c[a] * b[i];
    }
    if (back != x) throw std::invalid_argument("w_coordinates: vector is not in the irreducible submodule");
    return c;
}

RepMatrices sl3_irrep(WeightPair w, std::size_t cap) {
    if (cap == kDefaultSl3Cap) return sl3_model(w)->irrep();
    return Sl3Model(w, cap).irrep();
}

std::shared_ptr<const Sl3Model> sl3_model(WeightPair w) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Sl3Model>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(w.m1, w.m2);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto model = std::make_shared<const Sl3Model>(w);
    cache.emplace(key, model);
    return model;
}

}  // namespace lgd
