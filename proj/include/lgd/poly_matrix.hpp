#pragma once

#include "lgd/center_poly.hpp"
#include "lgd/qmatrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lgd {

using PolyVector = std::vector<CenterPoly>;

/// Dense matrix of center polynomials sharing one arity.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, int arity);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int arity() const { return arity_; }

    CenterPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CenterPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    PolyVector column(std::size_t c) const;
    PolyVector apply(const PolyVector& v) const;
    QMatrix eval(std::span<const Rational> point) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    int arity_ = 1;
    std::vector<CenterPoly> data_;
};

struct EliminationResult {
    std::size_t rank = 0;
    std::vector<PolyVector> kernel_basis;
    std::vector<std::size_t> pivot_columns;
};

/// Divides out the gcd of the entries and scales so the first nonzero entry is monic.
/// Throws std::invalid_argument on an all-zero tuple.
PolyVector content_normalize(const PolyVector& v);

/// Rank over the fraction field and a content-normalized polynomial basis of the right kernel.
EliminationResult ff_rank_kernel(const PolyMatrix& m);

struct FractionFieldSolution {
    CenterPoly z0;
    PolyVector z;
};

/// Nonzero z0 and z with M*z = z0*b, jointly content-normalized with z0 monic;
/// nullopt if b is not in the column space over the fraction field.
std::optional<FractionFieldSolution> solve_fraction_field(const PolyMatrix& m, const PolyVector& b);

}  // namespace lgd
