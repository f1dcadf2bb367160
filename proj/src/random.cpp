#include "lgd/random.hpp"

namespace lgd {

Rational random_rational(Rng& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(1, max_num), den(1, max_den), sign(0, 1);
    long n = num(rng);
    return Rational(sign(rng) ? n : -n, den(rng));
}

CenterPoly random_center_poly(Rng& rng, int arity, unsigned degree, bool allow_zero) {
    std::uniform_int_distribution<int> coin(0, 2);
    for (;;) {
        CenterPoly p(arity);
        for (std::uint32_t a = 0; a <= degree; ++a)
            for (std::uint32_t b = 0; a + b <= degree && (arity == 2 || b == 0); ++b)
                if (coin(rng) == 0) p.add_term({a, b}, random_rational(rng));
        if (allow_zero || !p.is_zero()) return p;
    }
}

PBWElement random_element(Rng& rng, const AlgebraSpec& alg, unsigned max_degree, unsigned terms,
                          unsigned center_degree) {
    const std::size_t n = alg.generator_count();
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    PBWElement e(alg);
    for (unsigned t = 0; t < terms; ++t) {
        Exponents ex(n, 0);
        unsigned d = deg(rng);
        for (unsigned i = 0; i < d; ++i) ++ex[pick(rng)];
        CenterPoly c = center_degree ? random_center_poly(rng, alg.center_arity(), center_degree, false)
                                     : CenterPoly(alg.center_arity(), random_rational(rng));
        e.add_term(ex, c);
    }
    return e;
}

FreeElement random_free_element(Rng& rng, const AlgebraSpec& alg, unsigned max_degree, unsigned terms) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, alg.generator_count() - 1);
    FreeElement e(alg);
    for (unsigned t = 0; t < terms; ++t) {
        Word w;
        unsigned d = deg(rng);
        for (unsigned i = 0; i < d; ++i) w.push_back(pick(rng));
        e.add_term(w, CenterPoly(alg.center_arity(), random_rational(rng)));
    }
    return e;
}

}  // namespace lgd
