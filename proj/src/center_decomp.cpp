#include "lgd/center_decomp.hpp"

#include "lgd/errors.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

namespace lgd {

namespace {

enum Sl2 : Generator { X = 0, Y = 1, H = 2 };
enum Sl3 : Generator { Y1 = 0, Y2 = 1, Y3 = 2, X1 = 3, X2 = 4, X3 = 5, H1 = 6, H2 = 7 };

constexpr std::array<Generator, 3> kSl2Reading{X, Y, H};
constexpr std::array<Generator, 8> kSl3Reading{Y2, X2, H2, Y3, X3, Y1, X1, H1};

PBWElement gen(const AlgebraSpec& alg, Generator g) { return PBWElement::generator(alg, g); }
PBWElement num(const AlgebraSpec& alg, long a, long b = 1) { return PBWElement::scalar(alg, Rational(a, b)); }

std::vector<PBWElement> build_casimirs(const AlgebraSpec& alg) {
    std::vector<PBWElement> out;
    if (alg.kind() == AlgebraKind::sl2) {
        auto x = gen(alg, X), y = gen(alg, Y), h = gen(alg, H);
        out.push_back(x * y + num(alg, 1, 2) * (h * h) + y * x);
    } else {
        auto y1 = gen(alg, Y1), y2 = gen(alg, Y2), y3 = gen(alg, Y3);
        auto x1 = gen(alg, X1), x2 = gen(alg, X2), x3 = gen(alg, X3);
        auto h1 = gen(alg, H1), h2 = gen(alg, H2);
        auto three = num(alg, 3);
        PBWElement z2 = h1 * h1 + h1 * h2 + h2 * h2 + three * (y1 * x1) + three * (y2 * x2) + three * (y3 * x3) +
                        three * h1 + three * h2;
        PBWElement a = h1 + num(alg, 2) * h2;
        PBWElement b = num(alg, 6) + num(alg, 2) * h1 + h2;
        PBWElement c = num(alg, -3) + h1 - h2;
        PBWElement z3 = three * (y1 * y2 * x3) + three * (y3 * x1 * x2) + num(alg, 1, 9) * (a * b * c) +
                        y1 * x1 * a - y2 * x2 * b + y3 * x3 * c;
        out.push_back(std::move(z2));
        out.push_back(std::move(z3));
    }
    for (const auto& z : out)
        for (Generator g = 0; g < alg.generator_count(); ++g) {
            auto e = gen(alg, g);
            if (!(z * e - e * z).is_zero())
                throw InvariantViolation(alg.name() + ": Casimir element does not commute with " + alg.generator_name(g));
        }
    return out;
}

struct Rule {
    Exponents lhs;
    PBWElement rhs;
};

std::vector<Rule> build_rules(const AlgebraSpec& alg) {
    const auto& cas = casimir_elements(alg);
    const int ar = alg.center_arity();
    std::vector<Rule> rules;
    if (alg.kind() == AlgebraKind::sl2) {
        // C = 2XY + H^2/2 - H, so XY = (C - H^2/2 + H)/2.
        Exponents xy{1, 1, 0};
        PBWElement rest = cas[0];
        rest.add_term(xy, CenterPoly(ar, Rational(-2)));
        PBWElement rhs = (PBWElement::scalar(alg, CenterPoly::variable(ar, 0)) - rest) * Rational(1, 2);
        rules.push_back({xy, rhs});
        return rules;
    }
    // Rule 1: the leading monomial of Z2 is 3 Y2 X2.
    Exponents y2x2(8, 0);
    y2x2[Y2] = y2x2[X2] = 1;
    PBWElement rest2 = cas[0];
    if (rest2.coefficient(y2x2) != CenterPoly(ar, Rational(3))) throw InvariantViolation("Z2: Y2X2 coefficient is not 3");
    rest2.add_term(y2x2, CenterPoly(ar, Rational(-3)));
    PBWElement z2 = PBWElement::scalar(alg, CenterPoly::variable(ar, 0));
    PBWElement z3 = PBWElement::scalar(alg, CenterPoly::variable(ar, 1));
    rules.push_back({y2x2, (z2 - rest2) * Rational(1, 3)});

    // Rule 2: the leading monomial of R = Z3 + Z2(6 + 2H1 + H2)/3 is H2^3 / 9.
    Exponents h2cube(8, 0);
    h2cube[H2] = 3;
    PBWElement shift = num(alg, 6) + num(alg, 2) * gen(alg, H1) + gen(alg, H2);
    PBWElement r = cas[1] + num(alg, 1, 3) * (cas[0] * shift);
    if (r.coefficient(h2cube) != CenterPoly(ar, Rational(1, 9)))
        throw InvariantViolation("Z3 + Z2(6+2H1+H2)/3: H2^3 coefficient is not 1/9");
    for (const auto& [e, c] : r.terms())
        if (e != h2cube && !decomposition_less(alg, e, h2cube))
            throw InvariantViolation("Z3 + Z2(6+2H1+H2)/3: H2^3 is not the largest monomial");
    PBWElement r_rest = r;
    r_rest.add_term(h2cube, CenterPoly(ar, Rational(-1, 9)));
    // H2^3 = 9 R - 9 (R - H2^3/9), with R rewritten through the formal Z2, Z3.
    PBWElement rhs = num(alg, 9) * z3 + num(alg, 3) * (z2 * shift) - num(alg, 9) * r_rest;
    rules.push_back({h2cube, rhs});
    return rules;
}

const std::vector<Rule>& rules_for(const AlgebraSpec& alg) {
    static std::once_flag f2, f3;
    static std::vector<Rule> r2, r3;
    if (alg.kind() == AlgebraKind::sl2) {
        std::call_once(f2, [&] { r2 = build_rules(alg); });
        return r2;
    }
    std::call_once(f3, [&] { r3 = build_rules(alg); });
    return r3;
}

// Index of the rule that applies to e, preferring rule 1; -1 when e is constrained.
int violated_rule(const AlgebraSpec& alg, const Exponents& e) {
    if (alg.kind() == AlgebraKind::sl2) return (e[X] > 0 && e[Y] > 0) ? 0 : -1;
    if (e[Y2] > 0 && e[X2] > 0) return 0;
    if (e[H2] > 2) return 1;
    return -1;
}

}  // namespace

const std::vector<PBWElement>& casimir_elements(const AlgebraSpec& alg) {
    static std::once_flag f2, f3;
    static std::vector<PBWElement> c2, c3;
    if (alg.kind() == AlgebraKind::sl2) {
        std::call_once(f2, [&] { c2 = build_casimirs(alg); });
        return c2;
    }
    std::call_once(f3, [&] { c3 = build_casimirs(alg); });
    return c3;
}

bool decomposition_less(const AlgebraSpec& alg, const Exponents& a, const Exponents& b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    auto cmp = [&](const auto& reading) {
        for (std::size_t i = reading.size(); i-- > 0;) {
            auto g = reading[i];
            if (a[g] != b[g]) return a[g] > b[g];  // last nonzero entry of a - b positive => a < b
        }
        return false;
    };
    if (alg.kind() == AlgebraKind::sl2) return cmp(kSl2Reading);
    return cmp(kSl3Reading);
}

bool satisfies_constraint(const AlgebraSpec& alg, const Exponents& e) { return violated_rule(alg, e) < 0; }

PBWElement CenterDecomposition::expand() const {
    const auto& cas = casimir_elements(*alg_);
    const int ar = alg_->center_arity();
    std::map<std::pair<int, std::uint32_t>, PBWElement> powers;
    auto power = [&](int var, std::uint32_t p) -> const PBWElement& {
        auto key = std::make_pair(var, p);
        if (auto it = powers.find(key); it != powers.end()) return it->second;
        PBWElement x = PBWElement::scalar(*alg_, Rational(1));
        for (std::uint32_t i = 0; i < p; ++i) x = x * cas[var];
        return powers.emplace(key, std::move(x)).first->second;
    };
    PBWElement out(*alg_);
    for (const auto& [f, t] : formal_.terms()) {
        PBWElement mono = PBWElement::monomial(*alg_, f, CenterPoly(ar, Rational(1)));
        for (const auto& [ce, c] : t.terms()) {
            PBWElement z = power(0, ce[0]);
            if (ar == 2) z = z * power(1, ce[1]);
            out += (mono * z) * c;
        }
    }
    return out;
}

CenterDecomposition decompose(const PBWElement& p, DecomposeStats* stats) {
    const AlgebraSpec& alg = p.algebra();
    const auto& rules = rules_for(alg);
    auto less = [&alg](const Exponents& a, const Exponents& b) { return decomposition_less(alg, a, b); };
    std::map<Exponents, CenterPoly, decltype(less)> work(less);
    auto push = [&work](const Exponents& e, const CenterPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = work.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) work.erase(it);
        }
    };
    for (const auto& [e, c] : p.terms()) push(e, c);

    CenterDecomposition out(alg);
    std::size_t steps = 0;
    while (!work.empty()) {
        // The largest remaining monomial; constrained ones are final because rewrites only go down.
        auto top = std::prev(work.end());
        Exponents m = top->first;
        CenterPoly c = top->second;
        work.erase(top);
        int r = violated_rule(alg, m);
        if (r < 0) {
            out.formal_.add_term(m, c);
            continue;
        }
        if (++steps > kDecomposeStepBudget) throw InvariantViolation("decompose: step budget exhausted");
        const Rule& rule = rules[static_cast<std::size_t>(r)];
        Exponents rest = m;
        for (std::size_t g = 0; g < m.size(); ++g) rest[g] -= rule.lhs[g];
        PBWElement tail = PBWElement::monomial(alg, rest, CenterPoly(alg.center_arity(), Rational(1)));
        PBWElement lhs_times = PBWElement::monomial(alg, rule.lhs, CenterPoly(alg.center_arity(), Rational(1))) * tail;
        PBWElement replacement = rule.rhs * tail - lhs_times;
        replacement.add_term(m, CenterPoly(alg.center_arity(), Rational(1)));
        for (const auto& [e, x] : replacement.terms()) {
            if (!decomposition_less(alg, e, m)) {
                if (stats) stats->strictly_decreasing = false;
                throw InvariantViolation("decompose: rewrite did not decrease the monomial order");
            }
            push(e, x * c);
        }
    }
    if (stats) stats->steps += steps;
    return out;
}

CenterDecomposition decompose_sl2(const PBWElement& p, DecomposeStats* stats) {
    if (p.algebra().kind() != AlgebraKind::sl2) throw std::invalid_argument("decompose_sl2: element is not in U(sl2)");
    return decompose(p, stats);
}

CenterDecomposition decompose_sl3(const PBWElement& p, DecomposeStats* stats) {
    if (p.algebra().kind() != AlgebraKind::sl3) throw std::invalid_argument("decompose_sl3: element is not in U(sl3)");
    return decompose(p, stats);
}

bool verify_identity(const std::vector<CenterPoly>& z, const std::vector<PBWElement>& ps) {
    if (z.size() != ps.size()) throw std::invalid_argument("verify_identity: length mismatch");
    if (ps.empty()) return true;
    PBWElement sum(ps.front().algebra());
    for (std::size_t i = 0; i < ps.size(); ++i) sum += ps[i] * z[i];
    return decompose(sum).is_zero();
}

std::vector<std::pair<Exponents, PBWElement>> decomposition_rules(const AlgebraSpec& alg) {
    std::vector<std::pair<Exponents, PBWElement>> out;
    for (const auto& r : rules_for(alg)) out.emplace_back(r.lhs, r.rhs);
    return out;
}

}  // namespace lgd
