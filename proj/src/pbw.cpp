#include "lgd/pbw.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>

namespace lgd {

std::uint32_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

bool GradedGreater::operator()(const Exponents& a, const Exponents& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

Word word_of(const Exponents& e) {
    Word w;
    for (Generator g = 0; g < e.size(); ++g) w.insert(w.end(), e[g], g);
    return w;
}

Exponents exponents_of(const Word& w, std::size_t generator_count) {
    Exponents e(generator_count, 0);
    for (auto g : w) {
        if (g >= generator_count) throw std::invalid_argument("word contains a foreign generator");
        ++e[g];
    }
    return e;
}

// ---------------------------------------------------------------- FreeElement

FreeElement::FreeElement(const AlgebraSpec& alg) : alg_(&alg) {}

FreeElement FreeElement::scalar(const AlgebraSpec& alg, const CenterPoly& c) {
    FreeElement e(alg);
    e.add_term({}, c);
    return e;
}

FreeElement FreeElement::generator(const AlgebraSpec& alg, Generator g) {
    alg.generator_name(g);
    FreeElement e(alg);
    e.add_term({g}, CenterPoly(alg.center_arity(), Rational(1)));
    return e;
}

void FreeElement::check(const FreeElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("elements of different algebras");
}

void FreeElement::add_term(const Word& w, const CenterPoly& c) {
    if (c.is_zero()) return;
    if (c.arity() != alg_->center_arity()) throw std::invalid_argument("coefficient arity does not match algebra");
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreeElement& FreeElement::operator*=(const CenterPoly& c) {
    FreeElement r(*alg_);
    for (const auto& [w, x] : terms_) r.add_term(w, x * c);
    *this = std::move(r);
    return *this;
}

FreeElement FreeElement::operator-() const {
    FreeElement r(*alg_);
    r -= *this;
    return r;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    a.check(b);
    FreeElement r(*a.alg_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

bool operator==(const FreeElement& a, const FreeElement& b) { return a.alg_ == b.alg_ && a.terms_ == b.terms_; }

FreeElement FreeElement::pow(unsigned e) const {
    FreeElement r = scalar(*alg_, CenterPoly(alg_->center_arity(), Rational(1)));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

// ----------------------------------------------------------------- PBWElement

PBWElement::PBWElement(const AlgebraSpec& alg) : alg_(&alg) {}

PBWElement PBWElement::scalar(const AlgebraSpec& alg, const CenterPoly& c) {
    return monomial(alg, Exponents(alg.generator_count(), 0), c);
}

PBWElement PBWElement::scalar(const AlgebraSpec& alg, const Rational& c) {
    return scalar(alg, CenterPoly(alg.center_arity(), c));
}

PBWElement PBWElement::monomial(const AlgebraSpec& alg, const Exponents& e, const CenterPoly& c) {
    PBWElement p(alg);
    p.add_term(e, c);
    return p;
}

PBWElement PBWElement::generator(const AlgebraSpec& alg, Generator g) {
    alg.generator_name(g);
    Exponents e(alg.generator_count(), 0);
    e[g] = 1;
    return monomial(alg, e, CenterPoly(alg.center_arity(), Rational(1)));
}

void PBWElement::check(const PBWElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("elements of different algebras");
}

bool PBWElement::is_center_free() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_constant()) return false;
    return true;
}

int PBWElement::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

void PBWElement::add_term(const Exponents& e, const CenterPoly& c) {
    if (c.is_zero()) return;
    if (e.size() != alg_->generator_count()) throw std::invalid_argument("exponent tuple has wrong length");
    if (c.arity() != alg_->center_arity()) throw std::invalid_argument("coefficient arity does not match algebra");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CenterPoly PBWElement::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CenterPoly(alg_->center_arity()) : it->second;
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PBWElement& PBWElement::operator*=(const CenterPoly& c) {
    PBWElement r(*alg_);
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    *this = std::move(r);
    return *this;
}

PBWElement& PBWElement::operator*=(const Rational& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

PBWElement PBWElement::operator-() const {
    PBWElement r = *this;
    r *= Rational(-1);
    return r;
}

bool operator==(const PBWElement& a, const PBWElement& b) { return a.alg_ == b.alg_ && a.terms_ == b.terms_; }

FreeElement PBWElement::to_free() const {
    FreeElement f(*alg_);
    for (const auto& [e, c] : terms_) f.add_term(word_of(e), c);
    return f;
}

// ------------------------------------------------------- word rewriting

PBWElement pbw_normal_form(const FreeElement& e, NormalFormStats* stats) {
    const AlgebraSpec& alg = e.algebra();
    const std::size_t n = alg.generator_count();
    PBWElement result(alg);
    for (const auto& [input, coeff] : e.terms()) {
        std::map<Word, Rational> pending{{input, Rational(1)}};
        std::map<Exponents, Rational> normal;
        std::size_t steps = 0;
        auto push = [&pending](Word w, const Rational& c) {
            auto [it, inserted] = pending.emplace(std::move(w), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) pending.erase(it);
            }
        };
        while (!pending.empty()) {
            auto node = pending.extract(pending.begin());
            const Word& w = node.key();
            const Rational& c = node.mapped();
            std::size_t i = 0;
            while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
            if (i + 1 >= w.size()) {
                normal[exponents_of(w, n)] += c;
                continue;
            }
            ++steps;
            Word swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            push(std::move(swapped), c);
            const QVector& br = alg.bracket(w[i], w[i + 1]);
            for (Generator g = 0; g < n; ++g) {
                if (br[g].is_zero()) continue;
                Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                shorter.push_back(g);
                shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
                push(std::move(shorter), c * br[g]);
            }
        }
        for (const auto& [ex, c] : normal)
            if (!c.is_zero()) result.add_term(ex, coeff * c);
        if (stats) {
            stats->total_steps += steps;
            stats->per_word.emplace_back(input.size(), steps);
        }
    }
    return result;
}

// ------------------------------------------------ generator left multiplication

namespace {

using RatComb = std::map<Exponents, Rational>;

void accumulate(RatComb& into, const RatComb& from, const Rational& scale) {
    for (const auto& [e, c] : from) {
        auto [it, inserted] = into.emplace(e, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second.is_zero()) into.erase(it);
        }
    }
}

// g * m for a normal monomial m. Uses g h m'' = h (g m'') + [g,h] m'' when the
// first generator h of m precedes g.
const RatComb& left_mul(const AlgebraSpec& alg, Generator g, const Exponents& m) {
    thread_local std::map<std::tuple<AlgebraKind, Generator, Exponents>, RatComb> memo;
    auto key = std::make_tuple(alg.kind(), g, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Generator h = 0;
    while (h < m.size() && m[h] == 0) ++h;
    RatComb result;
    if (h == m.size() || g <= h) {
        Exponents e = m;
        ++e[g];
        result.emplace(std::move(e), Rational(1));
    } else {
        Exponents rest = m;
        --rest[h];
        RatComb inner = left_mul(alg, g, rest);
        for (const auto& [t, c] : inner) accumulate(result, left_mul(alg, h, t), c);
        const QVector& br = alg.bracket(g, h);
        for (Generator k = 0; k < br.size(); ++k)
            if (!br[k].is_zero()) accumulate(result, left_mul(alg, k, rest), br[k]);
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

RatComb monomial_product(const AlgebraSpec& alg, const Exponents& a, const Exponents& b) {
    RatComb acc{{b, Rational(1)}};
    Word w = word_of(a);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        RatComb next;
        for (const auto& [t, c] : acc) accumulate(next, left_mul(alg, *it, t), c);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

PBWElement pbw_mul(const PBWElement& a, const PBWElement& b) {
    if (&a.algebra() != &b.algebra()) throw std::invalid_argument("elements of different algebras");
    const AlgebraSpec& alg = a.algebra();
    PBWElement r(alg);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            CenterPoly coeff = ca * cb;
            for (const auto& [e, c] : monomial_product(alg, ea, eb)) r.add_term(e, coeff * c);
        }
    return r;
}

PBWElement operator*(const PBWElement& a, const PBWElement& b) { return pbw_mul(a, b); }

}  // namespace lgd
