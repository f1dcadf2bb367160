#pragma once

#include "lgd/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lgd {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    Rational trace() const;
    QMatrix transpose() const;
    /// Row-major flattening.
    QVector vectorize() const { return data_; }
    QVector column(std::size_t c) const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Rational& c);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
    friend QMatrix operator*(const Rational& c, QMatrix a) { return a *= c; }
    /// Skips zero entries of the left factor; generator matrices are sparse.
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QVector operator*(const QMatrix& a, const QVector& v);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);
QMatrix block_diagonal(const std::vector<QMatrix>& blocks);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
/// Rank of the matrix whose columns are the given vectors.
std::size_t rank_of_vectors(const std::vector<QVector>& vectors);
/// Basis of the right kernel.
std::vector<QVector> kernel(const QMatrix& m);
/// Some x with m*x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
/// True iff target lies in the span of the given vectors.
bool in_span(const std::vector<QVector>& vectors, const QVector& target);

/// Inverse of a square matrix; nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

/// Incrementally maintained row-echelon basis; answers rank and membership queries.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t dimension) : dim_(dimension) {}
    /// Adds v; returns true iff the rank increased.
    bool add(const QVector& v);
    bool contains(const QVector& v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t dimension() const { return dim_; }

private:
    QVector reduce(QVector v) const;
    std::size_t dim_;
    std::vector<QVector> rows_;        // rows_[i] has a 1 at pivots_[i]
    std::vector<std::size_t> pivots_;
};

/// Primitive integer vector proportional to v with first nonzero entry positive.
QVector primitive_integer(const QVector& v);

bool is_zero_vector(const QVector& v);

}  // namespace lgd
