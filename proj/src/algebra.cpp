#include "lgd/algebra.hpp"

#include "lgd/center_poly.hpp"
#include "lgd/errors.hpp"

#include <stdexcept>

namespace lgd {

QMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m(n, n);
    m(i - 1, j - 1) = Rational(1);
    return m;
}

AlgebraSpec::AlgebraSpec(AlgebraKind kind, std::string name, std::size_t n, std::vector<std::string> names,
                         std::vector<QMatrix> matrices)
    : kind_(kind), name_(std::move(name)), n_(n), names_(std::move(names)), matrices_(std::move(matrices)) {
    std::vector<QVector> cols;
    for (const auto& m : matrices_) {
        if (!m.trace().is_zero()) throw InvariantViolation(name_ + ": defining matrix is not traceless");
        cols.push_back(m.vectorize());
    }
    basis_columns_ = QMatrix::from_columns(cols, n_ * n_);
    if (rank(basis_columns_) != names_.size()) throw InvariantViolation(name_ + ": generators are dependent");

    const std::size_t g = names_.size();
    brackets_.resize(g * g);
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) brackets_[a * g + b] = coordinates(commutator(matrices_[a], matrices_[b]));
}

const AlgebraSpec& AlgebraSpec::sl2() {
    static const AlgebraSpec spec(AlgebraKind::sl2, "sl2", 2, {"X", "Y", "H"},
                                  {elementary(2, 1, 2), elementary(2, 2, 1), elementary(2, 1, 1) - elementary(2, 2, 2)});
    return spec;
}

const AlgebraSpec& AlgebraSpec::sl3() {
    static const AlgebraSpec spec(AlgebraKind::sl3, "sl3", 3, {"Y1", "Y2", "Y3", "X1", "X2", "X3", "H1", "H2"},
                                  {elementary(3, 2, 1), elementary(3, 3, 2), elementary(3, 3, 1),
                                   elementary(3, 1, 2), elementary(3, 2, 3), elementary(3, 1, 3),
                                   elementary(3, 1, 1) - elementary(3, 2, 2),
                                   elementary(3, 2, 2) - elementary(3, 3, 3)});
    return spec;
}

const AlgebraSpec& AlgebraSpec::get(AlgebraKind kind) { return kind == AlgebraKind::sl2 ? sl2() : sl3(); }

const AlgebraSpec& AlgebraSpec::by_name(std::string_view name) {
    if (name == "sl2") return sl2();
    if (name == "sl3") return sl3();
    throw std::invalid_argument("unknown algebra '" + std::string(name) + "' (expected sl2 or sl3)");
}

void AlgebraSpec::check(Generator g) const {
    if (g >= names_.size())
        throw std::invalid_argument("generator index " + std::to_string(g) + " is not in " + name_);
}

const std::string& AlgebraSpec::generator_name(Generator g) const {
    check(g);
    return names_[g];
}

std::optional<Generator> AlgebraSpec::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

const QMatrix& AlgebraSpec::defining_matrix(Generator g) const {
    check(g);
    return matrices_[g];
}

const std::vector<std::string>& AlgebraSpec::center_names() const { return center_variable_names(center_arity()); }

const QVector& AlgebraSpec::bracket(Generator a, Generator b) const {
    check(a);
    check(b);
    return brackets_[a * names_.size() + b];
}

QVector AlgebraSpec::coordinates(const QMatrix& m) const {
    auto x = solve(basis_columns_, m.vectorize());
    if (!x) throw std::invalid_argument(name_ + ": matrix is not in the span of the generators");
    return *x;
}

}  // namespace lgd
