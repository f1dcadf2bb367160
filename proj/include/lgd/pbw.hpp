#pragma once

#include "lgd/algebra.hpp"
#include "lgd/center_poly.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace lgd {

/// Word over the generator alphabet of one algebra.
using Word = std::vector<Generator>;
/// One exponent per generator, in the algebra's fixed order.
using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Higher total degree first, then reverse lexicographic on the exponent tuple.
struct GradedGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Element of the free algebra on the generators, with central coefficients.
class FreeElement {
public:
    explicit FreeElement(const AlgebraSpec& alg);
    static FreeElement scalar(const AlgebraSpec& alg, const CenterPoly& c);
    static FreeElement generator(const AlgebraSpec& alg, Generator g);

    const AlgebraSpec& algebra() const { return *alg_; }
    const std::map<Word, CenterPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, const CenterPoly& c);

    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    FreeElement& operator*=(const CenterPoly& c);
    FreeElement operator-() const;
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    /// Concatenation product.
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
    friend FreeElement operator*(FreeElement a, const CenterPoly& c) { return a *= c; }
    friend bool operator==(const FreeElement& a, const FreeElement& b);
    FreeElement pow(unsigned e) const;

private:
    void check(const FreeElement& o) const;
    const AlgebraSpec* alg_;
    std::map<Word, CenterPoly> terms_;
};

/// Element of U(L) in PBW normal form: ordered monomials with center-polynomial coefficients.
class PBWElement {
public:
    using Terms = std::map<Exponents, CenterPoly, GradedGreater>;

    explicit PBWElement(const AlgebraSpec& alg);
    static PBWElement scalar(const AlgebraSpec& alg, const CenterPoly& c);
    static PBWElement scalar(const AlgebraSpec& alg, const Rational& c);
    static PBWElement monomial(const AlgebraSpec& alg, const Exponents& e, const CenterPoly& c);
    static PBWElement generator(const AlgebraSpec& alg, Generator g);

    const AlgebraSpec& algebra() const { return *alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// All coefficients are rational constants.
    bool is_center_free() const;
    /// Largest total degree of a monomial; -1 for zero.
    int degree() const;
    void add_term(const Exponents& e, const CenterPoly& c);
    CenterPoly coefficient(const Exponents& e) const;

    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    PBWElement& operator*=(const CenterPoly& c);
    PBWElement& operator*=(const Rational& c);
    PBWElement operator-() const;
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend PBWElement operator*(PBWElement a, const CenterPoly& c) { return a *= c; }
    friend PBWElement operator*(const CenterPoly& c, PBWElement a) { return a *= c; }
    friend PBWElement operator*(PBWElement a, const Rational& c) { return a *= c; }
    friend PBWElement operator*(const Rational& c, PBWElement a) { return a *= c; }
    /// Ring product, same as pbw_mul.
    friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
    friend bool operator==(const PBWElement& a, const PBWElement& b);

    FreeElement to_free() const;

private:
    void check(const PBWElement& o) const;
    const AlgebraSpec* alg_;
    Terms terms_;
};

Word word_of(const Exponents& e);
Exponents exponents_of(const Word& w, std::size_t generator_count);

struct NormalFormStats {
    std::size_t total_steps = 0;
    /// (word length, swap steps) for each input word.
    std::vector<std::pair<std::size_t, std::size_t>> per_word;
};

/// Rewrites by repeatedly resolving the leftmost out-of-order adjacent pair ab -> ba + [a,b].
PBWElement pbw_normal_form(const FreeElement& e, NormalFormStats* stats = nullptr);

/// Product in U(L), computed by memoized left multiplication by generators.
PBWElement pbw_mul(const PBWElement& a, const PBWElement& b);

}  // namespace lgd
