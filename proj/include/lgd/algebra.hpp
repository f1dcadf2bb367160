#pragma once

#include "lgd/qmatrix.hpp"
#include "lgd/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgd {

enum class AlgebraKind { sl2, sl3 };

/// Index of a generator in its algebra's fixed PBW order.
using Generator = std::size_t;

/// One of the in-scope Lie algebras, given by traceless defining matrices.
///
/// Generator order is total and fixed:
///   sl2: X < Y < H
///   sl3: Y1 < Y2 < Y3 < X1 < X2 < X3 < H1 < H2
/// Structure constants are derived from matrix commutators at construction.
class AlgebraSpec {
public:
    static const AlgebraSpec& sl2();
    static const AlgebraSpec& sl3();
    static const AlgebraSpec& get(AlgebraKind kind);
    /// "sl2" or "sl3"; throws std::invalid_argument otherwise.
    static const AlgebraSpec& by_name(std::string_view name);

    AlgebraKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    /// Size of the defining matrices (2 or 3).
    std::size_t matrix_size() const { return n_; }
    std::size_t generator_count() const { return names_.size(); }
    const std::string& generator_name(Generator g) const;
    std::optional<Generator> generator_index(std::string_view name) const;
    const QMatrix& defining_matrix(Generator g) const;

    /// Number of center variables: 1 (C) or 2 (Z2, Z3).
    int center_arity() const { return kind_ == AlgebraKind::sl2 ? 1 : 2; }
    const std::vector<std::string>& center_names() const;

    /// [a, b] = ab - ba as coordinates in the generator basis.
    const QVector& bracket(Generator a, Generator b) const;
    /// Coordinates of a traceless matrix in the generator basis; throws if not in the span.
    QVector coordinates(const QMatrix& m) const;

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) { return &a == &b; }

private:
    AlgebraSpec(AlgebraKind kind, std::string name, std::size_t n, std::vector<std::string> names,
                std::vector<QMatrix> matrices);
    void check(Generator g) const;

    AlgebraKind kind_;
    std::string name_;
    std::size_t n_;
    std::vector<std::string> names_;
    std::vector<QMatrix> matrices_;
    QMatrix basis_columns_;
    std::vector<QVector> brackets_;  // row-major [a * count + b]
};

/// Elementary matrix E_{ij} (1-based indices) of size n.
QMatrix elementary(std::size_t n, std::size_t i, std::size_t j);

}  // namespace lgd
