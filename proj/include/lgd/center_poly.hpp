#pragma once

#include "lgd/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lgd {

/// Exponent tuple of a center monomial. Arity-1 polynomials keep the second slot at zero.
using CenterExponent = std::array<std::uint32_t, 2>;

/// Graded lexicographic order, largest first: higher total degree wins, then the
/// first variable (C, or Z2 over Z3).
struct GrlexGreater {
    bool operator()(const CenterExponent& a, const CenterExponent& b) const {
        auto da = a[0] + a[1], db = b[0] + b[1];
        if (da != db) return da > db;
        return a > b;
    }
};

/// Polynomial over Q in the center variables of an enveloping algebra:
/// one variable C (sl2) or two variables Z2, Z3 (sl3).
class CenterPoly {
public:
    using Terms = std::map<CenterExponent, Rational, GrlexGreater>;

    CenterPoly() = default;
    explicit CenterPoly(int arity);
    CenterPoly(int arity, const Rational& c);

    static CenterPoly variable(int arity, int index);
    static CenterPoly monomial(int arity, CenterExponent e, const Rational& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; only meaningful when is_constant().
    Rational constant_value() const;
    int total_degree() const;
    /// Degree in a single variable.
    int degree_in(int var) const;

    const Terms& terms() const { return terms_; }
    Rational coefficient(const CenterExponent& e) const;
    void add_term(const CenterExponent& e, const Rational& c);

    const CenterExponent& leading_exponent() const;
    const Rational& leading_coefficient() const;

    Rational eval(std::span<const Rational> point) const;

    CenterPoly& operator+=(const CenterPoly& o);
    CenterPoly& operator-=(const CenterPoly& o);
    CenterPoly& operator*=(const Rational& c);
    CenterPoly operator-() const;
    friend CenterPoly operator+(CenterPoly a, const CenterPoly& b) { return a += b; }
    friend CenterPoly operator-(CenterPoly a, const CenterPoly& b) { return a -= b; }
    friend CenterPoly operator*(const CenterPoly& a, const CenterPoly& b);
    friend CenterPoly operator*(CenterPoly a, const Rational& c) { return a *= c; }
    friend CenterPoly operator*(const Rational& c, CenterPoly a) { return a *= c; }
    friend bool operator==(const CenterPoly& a, const CenterPoly& b) = default;

    CenterPoly pow(unsigned e) const;

    /// Canonical total order (degree first, then term-by-term); used for pivot tie-breaks.
    friend bool canonical_less(const CenterPoly& a, const CenterPoly& b);

    /// Scale so that the grlex-leading coefficient is 1.
    CenterPoly monic() const;

    /// Text with variable names, e.g. "C^2 - 9/4" or "Z2*Z3 + 1".
    std::string to_string() const;

private:
    void check_arity(const CenterPoly& o) const;

    int arity_ = 1;
    Terms terms_;
};

/// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<CenterPoly> divide_exact(const CenterPoly& a, const CenterPoly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
CenterPoly gcd(const CenterPoly& a, const CenterPoly& b);

/// Variable names for an arity: {"C"} or {"Z2", "Z3"}.
const std::vector<std::string>& center_variable_names(int arity);

}  // namespace lgd
