#pragma once

#include "lgd/algebra.hpp"
#include "lgd/pbw.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace lgd {

/// Casimir elements as PBW elements: {C} for sl2, {Z2, Z3} for sl3.
/// Centrality is checked against every generator on first use.
const std::vector<PBWElement>& casimir_elements(const AlgebraSpec& alg);

/// Degree-reverse-lexicographic order used by the decomposition rewrites.
/// sl2 reads exponents as (X, Y, H); sl3 as (Y2, X2, H2, Y3, X3, Y1, X1, H1).
/// Equal degree: a > b iff the last nonzero entry of a - b (in reading order) is negative.
bool decomposition_less(const AlgebraSpec& alg, const Exponents& a, const Exponents& b);

/// sl2: i1*i2 = 0. sl3: j2*l2 = 0 and r2 <= 2.
bool satisfies_constraint(const AlgebraSpec& alg, const Exponents& e);

struct DecomposeStats {
    std::size_t steps = 0;
    /// Every rewrite produced only monomials strictly below the rewritten one.
    bool strictly_decreasing = true;
};

/// p = sum_i f_i t_i with constrained PBW monomials f_i and center polynomials t_i.
class CenterDecomposition {
public:
    explicit CenterDecomposition(const AlgebraSpec& alg) : alg_(&alg) {}

    const AlgebraSpec& algebra() const { return *alg_; }
    const PBWElement::Terms& terms() const { return formal_.terms(); }
    bool is_zero() const { return formal_.is_zero(); }
    /// Largest total PBW degree among the f_i; -1 if empty.
    int degree() const { return formal_.degree(); }

    /// sum f_i t_i with the center variables kept formal.
    const PBWElement& formal() const { return formal_; }
    /// sum f_i t_i with each center variable replaced by its Casimir element.
    PBWElement expand() const;

    friend bool operator==(const CenterDecomposition& a, const CenterDecomposition& b) {
        return a.alg_ == b.alg_ && a.formal_ == b.formal_;
    }

private:
    friend CenterDecomposition decompose(const PBWElement& p, DecomposeStats* stats);
    const AlgebraSpec* alg_;
    PBWElement formal_{*alg_};
};

inline constexpr std::size_t kDecomposeStepBudget = 1'000'000;

/// Rewrites p (center coefficients allowed) over the constrained basis.
/// Throws InvariantViolation if a step fails to decrease the order or the budget runs out.
CenterDecomposition decompose(const PBWElement& p, DecomposeStats* stats = nullptr);
CenterDecomposition decompose_sl2(const PBWElement& p, DecomposeStats* stats = nullptr);
CenterDecomposition decompose_sl3(const PBWElement& p, DecomposeStats* stats = nullptr);

/// True iff sum z_i p_i is zero in U(L) (center variables read as Casimir elements).
bool verify_identity(const std::vector<CenterPoly>& z, const std::vector<PBWElement>& ps);

/// The right-hand sides the rewriter uses, for inspection: (lhs monomial, replacement).
std::vector<std::pair<Exponents, PBWElement>> decomposition_rules(const AlgebraSpec& alg);

}  // namespace lgd
