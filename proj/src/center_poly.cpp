#include "lgd/center_poly.hpp"

#include "lgd/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace lgd {

namespace {

// Dense univariate polynomial over Q, index = degree, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division with remainder by a nonzero divisor.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    UPoly q;
    if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lb = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        int shift = deg(a) - deg(b);
        Rational f = a.back() / lb;
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= f * b[j];
        trim(a);
    }
    trim(q);
    return {q, a};
}

UPoly monic(UPoly p) {
    if (p.empty()) return p;
    Rational inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

UPoly ugcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        // monic remainders keep the rational coefficients small
        auto r = monic(divmod(a, b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

// Bivariate polynomial as polynomial in Z2 with coefficients in Q[Z3].
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

BPoly to_bpoly(const CenterPoly& p) {
    BPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (r.size() <= e[0]) r.resize(e[0] + 1);
        auto& u = r[e[0]];
        if (u.size() <= e[1]) u.resize(e[1] + 1, Rational(0));
        u[e[1]] = c;
    }
    return r;
}

CenterPoly from_bpoly(const BPoly& p) {
    CenterPoly r(2);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (!p[i][j].is_zero())
                r.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, p[i][j]);
    return r;
}

UPoly content(const BPoly& p) {
    UPoly g;
    for (const auto& c : p) {
        if (c.empty()) continue;
        g = g.empty() ? monic(c) : ugcd(g, c);
        if (g.size() == 1) break;
    }
    return g;
}

BPoly divide_by(const BPoly& p, const UPoly& c) {
    BPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].empty()) continue;
        auto [q, rem] = divmod(p[i], c);
        if (!rem.empty()) throw InvariantViolation("bivariate content division left a remainder");
        r[i] = std::move(q);
    }
    btrim(r);
    return r;
}

// Pseudo-remainder of a by b in Q[Z3][Z2].
BPoly prem(BPoly a, const BPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const UPoly& lb = b.back();
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        UPoly la = a.back();
        for (auto& c : a) c = mul(c, lb);
        for (int j = 0; j <= db; ++j) {
            if (b[j].empty()) continue;
            a[j + da - db] = sub(a[j + da - db], mul(la, b[j]));
        }
        btrim(a);
    }
    return a;
}

CenterPoly bgcd(const CenterPoly& x, const CenterPoly& y) {
    BPoly a = to_bpoly(x), b = to_bpoly(y);
    UPoly ca = content(a), cb = content(b);
    UPoly cg = ugcd(ca, cb);
    a = divide_by(a, ca);
    b = divide_by(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        BPoly r = prem(a, b);
        a = std::move(b);
        if (r.empty()) {
            b.clear();
            break;
        }
        b = divide_by(r, content(r));
    }
    // a is primitive; a degree-0 primitive polynomial is a unit.
    if (a.size() == 1) a = BPoly{UPoly{Rational(1)}};
    BPoly g;
    for (const auto& c : a) g.push_back(mul(c, cg));
    btrim(g);
    return from_bpoly(g).monic();
}

UPoly to_upoly(const CenterPoly& p) {
    UPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (r.size() <= e[0]) r.resize(e[0] + 1, Rational(0));
        r[e[0]] = c;
    }
    return r;
}

CenterPoly from_upoly(const UPoly& p) {
    CenterPoly r(1);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) r.add_term({static_cast<std::uint32_t>(i), 0}, p[i]);
    return r;
}

}  // namespace

CenterPoly::CenterPoly(int arity) : arity_(arity) {
    if (arity != 1 && arity != 2) throw std::invalid_argument("CenterPoly arity must be 1 or 2");
}

CenterPoly::CenterPoly(int arity, const Rational& c) : CenterPoly(arity) {
    if (!c.is_zero()) terms_.emplace(CenterExponent{0, 0}, c);
}

CenterPoly CenterPoly::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::invalid_argument("CenterPoly variable index out of range");
    CenterExponent e{0, 0};
    e[index] = 1;
    return monomial(arity, e, Rational(1));
}

CenterPoly CenterPoly::monomial(int arity, CenterExponent e, const Rational& c) {
    CenterPoly p(arity);
    if (arity == 1 && e[1] != 0) throw std::invalid_argument("arity-1 polynomial with second exponent");
    p.add_term(e, c);
    return p;
}

bool CenterPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == CenterExponent{0, 0});
}

Rational CenterPoly::constant_value() const { return coefficient({0, 0}); }

int CenterPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return static_cast<int>(e[0] + e[1]);
}

int CenterPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

Rational CenterPoly::coefficient(const CenterExponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CenterPoly::add_term(const CenterExponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const CenterExponent& CenterPoly::leading_exponent() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& CenterPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

Rational CenterPoly::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("evaluation point arity " + std::to_string(point.size()) +
                                    " does not match polynomial arity " + std::to_string(arity_));
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < arity_; ++v)
            if (e[v]) t *= point[v].pow(e[v]);
        sum += t;
    }
    return sum;
}

void CenterPoly::check_arity(const CenterPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("CenterPoly arity mismatch");
}

CenterPoly& CenterPoly::operator+=(const CenterPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CenterPoly& CenterPoly::operator-=(const CenterPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

CenterPoly& CenterPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

CenterPoly CenterPoly::operator-() const {
    CenterPoly r = *this;
    r *= Rational(-1);
    return r;
}

CenterPoly operator*(const CenterPoly& a, const CenterPoly& b) {
    a.check_arity(b);
    CenterPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return r;
}

CenterPoly CenterPoly::pow(unsigned e) const {
    CenterPoly r(arity_, Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool canonical_less(const CenterPoly& a, const CenterPoly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    GrlexGreater greater;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return greater(ib->first, ia->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

CenterPoly CenterPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coefficient().inverse();
}

const std::vector<std::string>& center_variable_names(int arity) {
    static const std::vector<std::string> one{"C"};
    static const std::vector<std::string> two{"Z2", "Z3"};
    return arity == 1 ? one : two;
}

std::string CenterPoly::to_string() const {
    if (terms_.empty()) return "0";
    const auto& names = center_variable_names(arity_);
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int v = 0; v < arity_; ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        Rational a = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (mono.empty())
            os << a;
        else if (a == Rational(1))
            os << mono;
        else
            os << a << "*" << mono;
    }
    return os.str();
}

std::optional<CenterPoly> divide_exact(const CenterPoly& a, const CenterPoly& b) {
    if (b.is_zero()) throw std::domain_error("CenterPoly division by zero");
    if (a.arity() != b.arity()) throw std::invalid_argument("CenterPoly arity mismatch");
    CenterPoly q(a.arity());
    CenterPoly r = a;
    const auto& lb = b.leading_exponent();
    const Rational& lc = b.leading_coefficient();
    while (!r.is_zero()) {
        const auto& lr = r.leading_exponent();
        if (lr[0] < lb[0] || lr[1] < lb[1]) return std::nullopt;
        CenterPoly t = CenterPoly::monomial(a.arity(), {lr[0] - lb[0], lr[1] - lb[1]}, r.leading_coefficient() / lc);
        q += t;
        r -= t * b;
    }
    return q;
}

CenterPoly gcd(const CenterPoly& a, const CenterPoly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("CenterPoly arity mismatch");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return CenterPoly(a.arity(), Rational(1));
    if (a.arity() == 1) return from_upoly(ugcd(to_upoly(a), to_upoly(b)));
    return bgcd(a, b);
}

}  // namespace lgd
