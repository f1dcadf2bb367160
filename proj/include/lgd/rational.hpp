#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lgd {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    /// Parses "a" or "a/b" (optional leading sign). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned e) const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "3", "-3/2".
    std::string to_string() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class factorial(unsigned long n);

}  // namespace lgd
