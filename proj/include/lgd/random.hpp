#pragma once

#include "lgd/pbw.hpp"
#include "lgd/poly_matrix.hpp"

#include <random>

namespace lgd {

using Rng = std::mt19937_64;

/// Nonzero rational with small numerator and denominator.
Rational random_rational(Rng& rng, long max_num = 5, long max_den = 3);

/// Random center polynomial of total degree <= degree; may be zero when allow_zero.
CenterPoly random_center_poly(Rng& rng, int arity, unsigned degree, bool allow_zero = true);

/// Random PBW element with up to `terms` monomials of total degree <= max_degree.
/// center_degree > 0 draws coefficients from the center polynomial ring.
PBWElement random_element(Rng& rng, const AlgebraSpec& alg, unsigned max_degree, unsigned terms,
                          unsigned center_degree = 0);

/// Random word element of the free algebra (degree <= max_degree), center-free.
FreeElement random_free_element(Rng& rng, const AlgebraSpec& alg, unsigned max_degree, unsigned terms);

}  // namespace lgd
