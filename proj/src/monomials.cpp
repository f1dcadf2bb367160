#include "lgd/monomials.hpp"

#include <functional>
#include <stdexcept>

namespace lgd {

MonomialBasis::MonomialBasis(unsigned variables, unsigned degree) : vars_(variables) {
    if (variables == 0) throw std::invalid_argument("MonomialBasis: no variables");
    std::vector<unsigned> cur(variables, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned var, unsigned left) {
        if (var + 1 == variables) {
            cur[var] = left;
            index_.emplace(cur, monos_.size());
            monos_.push_back(cur);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            cur[var] = e;
            rec(var + 1, left - e);
        }
    };
    rec(0, degree);
}

QMatrix MonomialBasis::derivation(const QMatrix& a) const {
    if (a.rows() != vars_ || a.cols() != vars_) throw std::invalid_argument("derivation: matrix size mismatch");
    QMatrix m(size(), size());
    for (std::size_t col = 0; col < size(); ++col) {
        const auto& e = monos_[col];
        for (unsigned j = 0; j < vars_; ++j) {
            if (e[j] == 0) continue;
            for (unsigned i = 0; i < vars_; ++i) {
                if (a(i, j).is_zero()) continue;
                auto t = e;
                --t[j];
                ++t[i];
                m(index_.at(t), col) += a(i, j) * Rational(static_cast<long>(e[j]));
            }
        }
    }
    return m;
}

}  // namespace lgd
