#include "lgd/poly_matrix.hpp"

#include "lgd/errors.hpp"

#include <stdexcept>

namespace lgd {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, int arity)
    : rows_(rows), cols_(cols), arity_(arity), data_(rows * cols, CenterPoly(arity)) {}

PolyVector PolyMatrix::column(std::size_t c) const {
    PolyVector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

PolyVector PolyMatrix::apply(const PolyVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("PolyMatrix::apply: length mismatch");
    PolyVector out(rows_, CenterPoly(arity_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

QMatrix PolyMatrix::eval(std::span<const Rational> point) const {
    QMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).eval(point);
    return m;
}

namespace {

struct Reduction {
    PolyMatrix a;
    std::vector<std::size_t> pivot_columns;  // pivot of row i is pivot_columns[i]
    CenterPoly pivot_value;                  // common value of every pivot entry
};

CenterPoly exact_quotient(const CenterPoly& num, const CenterPoly& den) {
    auto q = divide_exact(num, den);
    if (!q) throw InvariantViolation("fraction-free elimination: inexact division");
    return *q;
}

// Fraction-free Gauss-Jordan. Only the first `pivot_limit` columns may hold pivots.
// Pivot: lowest total degree, then canonical order, then lowest row index.
Reduction reduce(PolyMatrix a, std::size_t pivot_limit) {
    const std::size_t rows = a.rows(), cols = a.cols();
    CenterPoly prev(a.arity(), Rational(1));
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            const auto& x = a(i, c);
            if (x.is_zero()) continue;
            if (best == rows || canonical_less(x, a(best, c))) best = i;
        }
        if (best == rows) continue;
        if (best != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(best, j), a(r, j));
        const CenterPoly piv = a(r, c);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const CenterPoly factor = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) {
                CenterPoly num = piv * a(i, j);
                if (!factor.is_zero() && !a(r, j).is_zero()) num -= factor * a(r, j);
                a(i, j) = exact_quotient(num, prev);
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots), std::move(prev)};
}

}  // namespace

PolyVector content_normalize(const PolyVector& v) {
    CenterPoly g;
    bool any = false;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        g = any ? gcd(g, x) : x.monic();
        any = true;
        if (g.is_constant()) break;
    }
    if (!any) throw std::invalid_argument("content_normalize: all-zero tuple");
    PolyVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.is_zero() ? x : exact_quotient(x, g));
    for (const auto& x : out)
        if (!x.is_zero()) {
            Rational s = x.leading_coefficient().inverse();
            for (auto& y : out) y *= s;
            break;
        }
    return out;
}

EliminationResult ff_rank_kernel(const PolyMatrix& m) {
    auto red = reduce(m, m.cols());
    EliminationResult res;
    res.rank = red.pivot_columns.size();
    res.pivot_columns = red.pivot_columns;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : red.pivot_columns) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        PolyVector v(m.cols(), CenterPoly(m.arity()));
        v[f] = red.pivot_value;
        for (std::size_t i = 0; i < red.pivot_columns.size(); ++i) v[red.pivot_columns[i]] = -red.a(i, f);
        v = content_normalize(v);
        for (const auto& x : m.apply(v))
            if (!x.is_zero()) throw InvariantViolation("ff_rank_kernel: kernel vector does not annihilate");
        res.kernel_basis.push_back(std::move(v));
    }
    return res;
}

std::optional<FractionFieldSolution> solve_fraction_field(const PolyMatrix& m, const PolyVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_fraction_field: right-hand side length mismatch");
    PolyMatrix aug(m.rows(), m.cols() + 1, m.arity());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto red = reduce(std::move(aug), m.cols());
    const std::size_t rk = red.pivot_columns.size();
    for (std::size_t i = rk; i < m.rows(); ++i)
        if (!red.a(i, m.cols()).is_zero()) return std::nullopt;

    PolyVector joint(m.cols() + 1, CenterPoly(m.arity()));
    joint[0] = red.pivot_value;
    for (std::size_t i = 0; i < rk; ++i) joint[1 + red.pivot_columns[i]] = red.a(i, m.cols());
    joint = content_normalize(joint);

    FractionFieldSolution sol{joint[0], PolyVector(joint.begin() + 1, joint.end())};
    auto lhs = m.apply(sol.z);
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (lhs[r] != sol.z0 * b[r]) throw InvariantViolation("solve_fraction_field: solution does not verify");
    return sol;
}

}  // namespace lgd
