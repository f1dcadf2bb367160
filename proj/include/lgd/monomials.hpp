#pragma once

#include "lgd/qmatrix.hpp"

#include <map>
#include <vector>

namespace lgd {

/// Monomials of a fixed degree in a fixed number of commuting variables,
/// listed lexicographically from x_1^degree down.
class MonomialBasis {
public:
    MonomialBasis(unsigned variables, unsigned degree);

    std::size_t size() const { return monos_.size(); }
    const std::vector<unsigned>& exponents(std::size_t i) const { return monos_[i]; }
    /// Throws std::out_of_range for exponents not of this degree.
    std::size_t index(const std::vector<unsigned>& e) const { return index_.at(e); }

    /// Matrix of the derivation extending x_j -> sum_i a(i,j) x_i.
    QMatrix derivation(const QMatrix& a) const;

private:
    unsigned vars_;
    std::vector<std::vector<unsigned>> monos_;
    std::map<std::vector<unsigned>, std::size_t> index_;
};

}  // namespace lgd
