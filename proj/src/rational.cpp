#include "lgd/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lgd {

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    auto strip = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
    mpz_class n(strip(num), 10);
    mpz_class d(strip(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace lgd
