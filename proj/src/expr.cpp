#include "lgd/expr.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <vector>

namespace lgd {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, const AlgebraSpec& alg) : s_(text), alg_(alg) {}

    FreeElement parse() {
        FreeElement e = expr();
        skip();
        if (pos_ < s_.size()) {
            if (s_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
            throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        }
        return e;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool at_atom_start() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c));
    }

    FreeElement one() const { return FreeElement::scalar(alg_, CenterPoly(alg_.center_arity(), Rational(1))); }

    FreeElement expr() {
        FreeElement acc(alg_);
        bool negate = false;
        if (peek('+') || peek('-')) negate = s_[pos_++] == '-';
        FreeElement t = term();
        acc += negate ? -t : t;
        while (peek('+') || peek('-')) {
            negate = s_[pos_++] == '-';
            t = term();
            acc += negate ? -t : t;
        }
        return acc;
    }

    FreeElement term() {
        if (!at_atom_start()) throw ParseError(pos_ < s_.size() ? "expected a term" : "unexpected end of input", pos_);
        FreeElement acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                if (!at_atom_start()) throw ParseError("expected a factor after '*'", pos_);
            } else if (!at_atom_start()) {
                break;
            }
            acc = acc * factor();
        }
        return acc;
    }

    FreeElement factor() {
        FreeElement base = atom();
        if (!peek('^')) return base;
        ++pos_;
        skip();
        const std::size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("malformed exponent: expected a non-negative integer", at);
        mpz_class e = natural();
        if (e > 64) throw ParseError("exponent too large", at);
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    mpz_class natural() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    FreeElement atom() {
        skip();
        const std::size_t at = pos_;
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            FreeElement e = expr();
            if (!peek(')')) throw ParseError("unbalanced '(' opened", at);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n = natural();
            mpz_class d = 1;
            if (peek('/')) {
                ++pos_;
                skip();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("expected a denominator after '/'", pos_);
                d = natural();
                if (d == 0) throw ParseError("zero denominator", at);
            }
            return FreeElement::scalar(alg_, CenterPoly(alg_.center_arity(), Rational(n, d)));
        }
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string name(s_.substr(at, pos_ - at));
        if (name == "I") return one();
        const auto& centers = alg_.center_names();
        for (std::size_t i = 0; i < centers.size(); ++i)
            if (centers[i] == name)
                return FreeElement::scalar(alg_, CenterPoly::variable(alg_.center_arity(), static_cast<int>(i)));
        if (auto g = alg_.generator_index(name)) return FreeElement::generator(alg_, *g);
        throw ParseError("unknown generator '" + name + "' for " + alg_.name(), at);
    }

    std::string_view s_;
    const AlgebraSpec& alg_;
    std::size_t pos_ = 0;
};

std::string power(const std::string& name, std::uint32_t e) {
    return e == 1 ? name : name + "^" + std::to_string(e);
}

struct Atom {
    CenterExponent center;
    Exponents pbw;
    Rational coeff;
};

std::string join_terms(const std::vector<Atom>& atoms, const AlgebraSpec* alg, int arity) {
    if (atoms.empty()) return "0";
    const auto& cnames = center_variable_names(arity);
    std::string out;
    bool first = true;
    for (const auto& a : atoms) {
        std::vector<std::string> factors;
        for (int v = 0; v < arity; ++v)
            if (a.center[v]) factors.push_back(power(cnames[v], a.center[v]));
        if (alg)
            for (Generator g = 0; g < a.pbw.size(); ++g)
                if (a.pbw[g]) factors.push_back(power(alg->generator_name(g), a.pbw[g]));
        Rational mag = a.coeff.abs();
        std::string body;
        if (factors.empty()) {
            body = mag.to_string();
        } else {
            if (mag != Rational(1)) body = (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") + "*";
            for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
        }
        if (first)
            out = (a.coeff.sign() < 0 ? "-" : "") + body;
        else
            out += (a.coeff.sign() < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace

FreeElement parse_expr(std::string_view text, const AlgebraSpec& alg) { return Parser(text, alg).parse(); }

PBWElement parse_pbw(std::string_view text, const AlgebraSpec& alg) { return pbw_normal_form(parse_expr(text, alg)); }

std::string format_expr(const PBWElement& e) {
    std::vector<Atom> atoms;
    for (const auto& [ex, c] : e.terms())
        for (const auto& [ce, r] : c.terms()) atoms.push_back({ce, ex, r});
    GradedGreater pbw_greater;
    GrlexGreater center_greater;
    std::stable_sort(atoms.begin(), atoms.end(), [&](const Atom& a, const Atom& b) {
        auto ca = a.center[0] + a.center[1], cb = b.center[0] + b.center[1];
        if (ca != cb) return ca > cb;
        if (a.pbw != b.pbw) return pbw_greater(a.pbw, b.pbw);
        return center_greater(a.center, b.center);
    });
    return join_terms(atoms, &e.algebra(), e.algebra().center_arity());
}

std::string format_expr(const CenterDecomposition& d) { return format_expr(d.formal()); }

std::string format_center(const CenterPoly& p) {
    std::vector<Atom> atoms;
    for (const auto& [ce, r] : p.terms()) atoms.push_back({ce, {}, r});
    return join_terms(atoms, nullptr, p.arity());
}

}  // namespace lgd
