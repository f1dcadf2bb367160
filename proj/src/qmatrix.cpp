#include "lgd/qmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace lgd {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns, std::size_t rows) {
    QMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("from_columns: ragged column");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Rational QMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QVector QMatrix::column(std::size_t c) const {
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    QMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& y = b(k, j);
                if (!y.is_zero()) r(i, j) += x * y;
            }
        }
    return r;
}

QVector operator*(const QMatrix& a, const QVector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    QVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (!x.is_zero() && !v[k].is_zero()) r[i] += x * v[k];
        }
    return r;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix block_diagonal(const std::vector<QMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) throw std::invalid_argument("block_diagonal: non-square block");
        n += b.rows();
    }
    QMatrix m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) m(off + r, off + c) = b(r, c);
        off += b.rows();
    }
    return m;
}

std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        Rational inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::size_t rank_of_vectors(const std::vector<QVector>& vectors) {
    if (vectors.empty()) return 0;
    // Rows are the vectors: same rank, and rref runs over the shorter dimension first.
    QMatrix m(vectors.size(), vectors.front().size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != m.cols()) throw std::invalid_argument("rank_of_vectors: ragged input");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vectors[i][j];
    }
    return rank(std::move(m));
}

std::vector<QVector> kernel(const QMatrix& a) {
    QMatrix m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols());
        v[f] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    QVector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

bool in_span(const std::vector<QVector>& vectors, const QVector& target) {
    if (vectors.empty()) return is_zero_vector(target);
    auto with = vectors;
    with.push_back(target);
    return rank_of_vectors(with) == rank_of_vectors(vectors);
}

std::optional<QMatrix> inverse(const QMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = Rational(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

QVector SpanBuilder::reduce(QVector v) const {
    if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = v[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
    return v;
}

bool SpanBuilder::add(const QVector& v) {
    QVector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero()) ++p;
    if (p == dim_) return false;
    Rational inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    // Keep earlier rows reduced against the new pivot so reduce() stays one pass.
    for (auto& row : rows_) {
        const Rational f = row[p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!r[j].is_zero()) row[j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool SpanBuilder::contains(const QVector& v) const { return is_zero_vector(reduce(v)); }

QVector primitive_integer(const QVector& v) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.denominator().get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        mpz_class n = x.numerator() * (den_lcm / x.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        ints.push_back(n);
    }
    if (num_gcd == 0) throw std::invalid_argument("primitive_integer of zero vector");
    int sign = 0;
    for (const auto& n : ints)
        if (n != 0) {
            sign = sgn(n);
            break;
        }
    QVector r;
    r.reserve(v.size());
    for (const auto& n : ints) r.emplace_back(mpz_class(n / num_gcd * sign), mpz_class(1));
    return r;
}

bool is_zero_vector(const QVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace lgd
