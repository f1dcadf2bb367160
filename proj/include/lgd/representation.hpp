#pragma once

#include "lgd/algebra.hpp"
#include "lgd/pbw.hpp"
#include "lgd/qmatrix.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lgd {

using VIndex = std::array<int, 3>;

/// Exact generator images in one finite-dimensional representation.
struct RepMatrices {
    const AlgebraSpec* algebra = nullptr;
    std::size_t dimension = 0;
    std::vector<QMatrix> matrices;  // one per generator, in generator order
    std::string label;
    /// sl3 irreducibles: the admitted (i,j,k) triples, in basis order.
    std::vector<VIndex> basis_triples;
    /// Casimir scalars when the representation is irreducible: (c_k) or (d2, d3).
    std::optional<std::vector<Rational>> casimir;

    const QMatrix& operator[](Generator g) const { return matrices.at(g); }
};

struct WeightPair {
    unsigned m1 = 0;
    unsigned m2 = 0;
};

/// Default bound on (model dimension)^2 for sl3 closure computations.
inline constexpr std::size_t kDefaultSl3Cap = 20000;

/// k-dimensional irreducible of sl2 (k >= 1).
RepMatrices sl2_irrep(unsigned k);

/// Sym^k of n copies of the standard representation of sl_n (n in {2,3}),
/// on the monomial basis of degree-k polynomials in n^2 variables.
RepMatrices sym_power_rep(unsigned n, unsigned k);

struct Theorem1Witness {
    RepMatrices rep;
    QVector vector;
};

/// Direct sum of Sym^1..Sym^d and the matching sum of tensor powers of v = sum_i e_i (copy i).
/// Tensor powers are stored in monomial coordinates: the coefficient of x^a is the multinomial k!/a!.
Theorem1Witness theorem1_witness(unsigned n, unsigned d);

/// 0/1 vector of length (d+1)^2 + t with ones at i_1 = d+1, i_{k+1} = i_k + 2(d-k+1) (1-based).
/// d = 0 gives e_1.
QVector prop32_vector(unsigned d, unsigned t);

/// Generator matrices of the polynomial model Sym^{m1}(V) (x) Sym^{m2}(V*) of sl3 and the
/// irreducible submodule W spanned by v_{i,j,k} = Y1^i Y2^j Y3^k (e1^{m1} (x) f1^{m2}).
class Sl3Model {
public:
    Sl3Model(WeightPair w, std::size_t cap = kDefaultSl3Cap);

    WeightPair weights() const { return w_; }
    std::size_t model_dimension() const { return dim_; }
    const QMatrix& model_matrix(Generator g) const { return model_[g]; }
    /// v_{i,j,k} in model coordinates (zero vector for negative indices).
    const QVector& v(int i, int j, int k) const;
    /// Model basis index of e1^{a1} e2^{a2} e3^{a3} (x) f1^{b1} f2^{b2} f3^{b3}.
    std::size_t model_index(std::array<unsigned, 3> a, std::array<unsigned, 3> b) const;
    /// Restriction to W in the admitted basis.
    const RepMatrices& irrep() const { return irrep_; }
    /// Coordinates of a model vector lying in W with respect to the admitted basis.
    QVector w_coordinates(const QVector& model_vector) const;

private:
    WeightPair w_;
    std::size_t dim1_, dim2_, dim_;
    std::vector<std::array<unsigned, 3>> mono1_, mono2_;
    std::vector<QMatrix> model_;
    mutable std::map<VIndex, QVector> vcache_;
    QVector zero_;
    RepMatrices irrep_;
    std::vector<std::size_t> pivot_rows_;
    QMatrix pivot_inverse_;
};

/// Irreducible of sl3 with highest weight w; throws CapExceeded above the cap.
RepMatrices sl3_irrep(WeightPair w, std::size_t cap = kDefaultSl3Cap);

/// Shared cached models, keyed by weight (default cap only).
std::shared_ptr<const Sl3Model> sl3_model(WeightPair w);

/// Evaluates many elements in one representation, memoizing monomial images
/// (each built from a shorter one by a single sparse-times-dense product).
class MonomialEvaluator {
public:
    explicit MonomialEvaluator(const RepMatrices& rep) : rep_(rep) {}
    const QMatrix& monomial(const Exponents& e);
    QMatrix eval(const PBWElement& e, std::optional<std::span<const Rational>> center_point = std::nullopt);

private:
    const RepMatrices& rep_;
    std::map<Exponents, QMatrix> memo_;
};

/// Image of an element. Center variables take `center_point` if given, else the rep's Casimir scalars.
QMatrix eval_element(const PBWElement& e, const RepMatrices& rep,
                     std::optional<std::span<const Rational>> center_point = std::nullopt);
QMatrix eval_element(const FreeElement& e, const RepMatrices& rep,
                     std::optional<std::span<const Rational>> center_point = std::nullopt);
/// Image applied to a vector, without forming the matrix.
QVector apply_element(const PBWElement& e, const RepMatrices& rep, const QVector& v,
                      std::optional<std::span<const Rational>> center_point = std::nullopt);

/// c_k = (k^2 - 1)/2.
Rational casimir_sl2(unsigned k);
/// (d2, d3) at highest weight (m1, m2).
std::array<Rational, 2> casimir_sl3(unsigned m1, unsigned m2);
/// Casimir scalars of an irreducible; throws std::invalid_argument otherwise.
std::vector<Rational> casimir_scalars(const RepMatrices& rep);

/// matrix([a,b]) == [matrix(a), matrix(b)] for all generator pairs.
bool check_brackets(const RepMatrices& rep);

/// Action of an sl3 generator on v_{k,l,m} by the closed-form rules; negative-index terms dropped.
std::map<VIndex, Rational> lemma_action(Generator g, VIndex idx, WeightPair w);

/// Leading monomial coefficient of v_{k,l,m}: the coordinate at e1^{m1-m-k} e2^k e3^m (x) f1^{m2-l} f2^l.
mpz_class beta_leading(unsigned m1, unsigned m2, unsigned k, unsigned l, unsigned m);

}  // namespace lgd
