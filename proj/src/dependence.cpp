#include "lgd/dependence.hpp"

#include "lgd/errors.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace lgd {

std::string RepLabel::to_string() const {
    if (kind == AlgebraKind::sl2) return "rho_" + std::to_string(k);
    return "pi_{" + std::to_string(w.m1) + "," + std::to_string(w.m2) + "}";
}

RepMatrices RepLabel::build() const { return kind == AlgebraKind::sl2 ? sl2_irrep(k) : sl3_irrep(w); }

namespace {

const AlgebraSpec& common_algebra(const std::vector<PBWElement>& ps) {
    if (ps.empty()) throw std::invalid_argument("empty list of elements");
    const AlgebraSpec& alg = ps.front().algebra();
    for (const auto& p : ps)
        if (&p.algebra() != &alg) throw std::invalid_argument("elements belong to different algebras");
    return alg;
}

void check_label(const AlgebraSpec& alg, const RepLabel& rep) {
    if (rep.kind != alg.kind()) throw std::invalid_argument(rep.to_string() + " is not a representation of " + alg.name());
}

std::vector<QMatrix> images(const std::vector<PBWElement>& ps, const RepMatrices& rep) {
    std::vector<QMatrix> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(eval_element(p, rep));
    return out;
}

CenterPoly constant(const AlgebraSpec& alg, const Rational& c) { return CenterPoly(alg.center_arity(), c); }

}  // namespace

CoefficientTable coefficient_table(const std::vector<PBWElement>& ps) {
    const AlgebraSpec& alg = common_algebra(ps);
    CoefficientTable tab;
    std::set<Exponents, GradedGreater> monos;
    for (const auto& p : ps) {
        tab.decompositions.push_back(decompose(p));
        for (const auto& [e, c] : tab.decompositions.back().terms()) monos.insert(e);
    }
    tab.monomials.assign(monos.begin(), monos.end());
    tab.t = PolyMatrix(tab.monomials.size(), ps.size(), alg.center_arity());
    for (std::size_t r = 0; r < tab.monomials.size(); ++r)
        for (std::size_t c = 0; c < ps.size(); ++c) {
            const auto& terms = tab.decompositions[c].terms();
            if (auto it = terms.find(tab.monomials[r]); it != terms.end()) tab.t(r, c) = it->second;
        }
    return tab;
}

Verdict decide_c_dependence(const std::vector<PBWElement>& ps) {
    const AlgebraSpec& alg = common_algebra(ps);
    std::set<Exponents, GradedGreater> monos;
    for (const auto& p : ps) {
        if (!p.is_center_free()) throw std::invalid_argument("decide_c_dependence: inputs must be center-free");
        for (const auto& [e, c] : p.terms()) monos.insert(e);
    }
    std::vector<Exponents> rows(monos.begin(), monos.end());
    QMatrix m(rows.size(), ps.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < ps.size(); ++c) {
            const auto& terms = ps[c].terms();
            if (auto it = terms.find(rows[r]); it != terms.end()) m(r, c) = it->second.constant_value();
        }
    Verdict v;
    v.rank = rank(m);
    auto ker = kernel(m);
    if (ker.empty()) {
        v.kind = VerdictKind::independent;
        return v;
    }
    v.kind = VerdictKind::dependent;
    Certificate cert;
    for (const auto& x : primitive_integer(ker.front())) cert.z.push_back(constant(alg, x));
    if (!verify_identity(cert.z, ps)) throw InvariantViolation("decide_c_dependence: certificate does not verify");
    v.certificate = std::move(cert);
    return v;
}

Verdict decide_center_dependence(const std::vector<PBWElement>& ps, bool attach_witness) {
    common_algebra(ps);
    auto tab = coefficient_table(ps);
    auto res = ff_rank_kernel(tab.t);
    Verdict v;
    v.rank = res.rank;
    if (res.kernel_basis.empty()) {
        v.kind = VerdictKind::independent;
        if (attach_witness && ps.front().algebra().kind() == AlgebraKind::sl2) v.evidence = witness_independence(ps);
        return v;
    }
    v.kind = VerdictKind::dependent;
    Certificate cert{res.kernel_basis.front(), std::nullopt};
    if (!verify_identity(cert.z, ps)) throw InvariantViolation("decide_center_dependence: certificate does not verify");
    v.certificate = std::move(cert);
    return v;
}

std::optional<Certificate> loc_span_solve(const PBWElement& q, const std::vector<PBWElement>& ps) {
    const AlgebraSpec& alg = common_algebra(ps);
    if (&q.algebra() != &alg) throw std::invalid_argument("loc_span_solve: q belongs to a different algebra");
    auto all = ps;
    all.push_back(q);
    auto tab = coefficient_table(all);
    PolyMatrix t(tab.t.rows(), ps.size(), alg.center_arity());
    PolyVector b(tab.t.rows(), CenterPoly(alg.center_arity()));
    for (std::size_t r = 0; r < tab.t.rows(); ++r) {
        for (std::size_t c = 0; c < ps.size(); ++c) t(r, c) = tab.t(r, c);
        b[r] = tab.t(r, ps.size());
    }
    auto sol = solve_fraction_field(t, b);
    if (!sol) return std::nullopt;
    Certificate cert{sol->z, sol->z0};
    auto zs = cert.z;
    zs.push_back(-sol->z0);
    if (!verify_identity(zs, all)) throw InvariantViolation("loc_span_solve: certificate does not verify");
    return cert;
}

Condition1Report condition1_report(const Certificate& cert, const PBWElement& q) {
    if (q.algebra().kind() != AlgebraKind::sl2) throw std::invalid_argument("condition (1) check is defined for sl2 only");
    if (!cert.z0 || cert.z0->is_zero()) throw std::invalid_argument("condition (1) check needs a nonzero z0");
    const CenterPoly& z0 = *cert.z0;
    if (z0.arity() != 1) throw std::invalid_argument("condition (1) check needs a polynomial in C");

    // Cauchy bound on roots of z0; c_n = (n^2-1)/2 <= B gives n <= sqrt(2B+1).
    Rational bound(1);
    if (!z0.is_constant()) {
        Rational lead = z0.leading_coefficient().abs();
        Rational worst(0);
        for (const auto& [e, c] : z0.terms())
            if (e != z0.leading_exponent() && c.abs() / lead > worst) worst = c.abs() / lead;
        bound += worst;
    }
    mpz_class b = (bound.numerator() + bound.denominator() - 1) / bound.denominator();
    mpz_class nmax;
    mpz_class radicand = 2 * b + 1;
    mpz_sqrt(nmax.get_mpz_t(), radicand.get_mpz_t());
    nmax += 1;
    if (nmax > 100000) throw CapExceeded("condition (1): root bound too large to enumerate");

    Condition1Report rep;
    for (unsigned n = 1; n <= nmax.get_ui(); ++n) {
        Rational c = casimir_sl2(n);
        if (!z0.eval(std::span<const Rational>(&c, 1)).is_zero()) continue;
        rep.zero_dimensions.push_back(n);
        if (!eval_element(q, sl2_irrep(n)).is_zero()) {
            rep.violations.push_back(n);
            rep.holds = false;
        }
    }
    return rep;
}

bool condition1_check(const Certificate& cert, const PBWElement& q) { return condition1_report(cert, q).holds; }

std::string to_string(LocStatus s) {
    switch (s) {
        case LocStatus::in_loc: return "in Loc";
        case LocStatus::not_in_ref: return "not in Ref";
        case LocStatus::inconclusive: return "inconclusive (paper gap)";
    }
    return "?";
}

LocDecision decide_loc(const PBWElement& q, const std::vector<PBWElement>& ps) {
    LocDecision d;
    d.certificate = loc_span_solve(q, ps);
    if (!d.certificate) {
        d.status = LocStatus::not_in_ref;
        return d;
    }
    if (q.algebra().kind() != AlgebraKind::sl2) {
        d.status = LocStatus::inconclusive;
        return d;
    }
    d.condition1 = condition1_report(*d.certificate, q);
    d.status = d.condition1->holds ? LocStatus::in_loc : LocStatus::inconclusive;
    return d;
}

std::vector<PointReport> empirical_lld(const std::vector<PBWElement>& ps, const std::vector<RepLabel>& reps) {
    const AlgebraSpec& alg = common_algebra(ps);
    std::vector<PointReport> out;
    for (const auto& label : reps) {
        check_label(alg, label);
        auto rep = label.build();
        std::vector<QVector> vecs;
        for (const auto& m : images(ps, rep)) vecs.push_back(m.vectorize());
        PointReport r{label.to_string(), rank_of_vectors(vecs), false};
        r.holds = r.rank < ps.size();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PointReport> empirical_loc(const PBWElement& q, const std::vector<PBWElement>& ps,
                                       const std::vector<RepLabel>& reps) {
    const AlgebraSpec& alg = common_algebra(ps);
    std::vector<PointReport> out;
    for (const auto& label : reps) {
        check_label(alg, label);
        auto rep = label.build();
        SpanBuilder span(rep.dimension * rep.dimension);
        for (const auto& m : images(ps, rep)) span.add(m.vectorize());
        out.push_back({label.to_string(), span.rank(), span.contains(eval_element(q, rep).vectorize())});
    }
    return out;
}

std::string RefReport::summary() const { return counterexample ? "counterexample found" : "no counterexample found"; }

RefReport empirical_ref(const PBWElement& q, const std::vector<PBWElement>& ps, const RepLabel& label,
                        std::size_t samples, std::uint64_t seed) {
    const AlgebraSpec& alg = common_algebra(ps);
    check_label(alg, label);
    auto rep = label.build();
    auto ims = images(ps, rep);
    QMatrix qm = eval_element(q, rep);
    const std::size_t dim = rep.dimension;

    RefReport report;
    report.label = label.to_string();
    report.seed = seed;
    auto test = [&](const QVector& v) {
        ++report.vectors_tested;
        SpanBuilder span(dim);
        for (const auto& m : ims) span.add(m * v);
        if (!span.contains(qm * v)) report.counterexample = v;
        return !report.counterexample;
    };
    for (std::size_t i = 0; i < dim; ++i) {
        QVector e(dim);
        e[i] = Rational(1);
        if (!test(e)) return report;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (std::size_t s = 0; s < samples; ++s) {
        QVector v(dim);
        for (auto& x : v) x = Rational(num(rng), den(rng));
        if (!test(v)) return report;
    }
    return report;
}

IndependenceWitness witness_independence(const std::vector<PBWElement>& ps, unsigned max_t) {
    const AlgebraSpec& alg = common_algebra(ps);
    if (alg.kind() != AlgebraKind::sl2) throw std::invalid_argument("witness_independence is implemented for sl2");
    auto tab = coefficient_table(ps);
    unsigned d = 0;
    for (const auto& e : tab.monomials) d = std::max(d, total_degree(e));

    std::vector<PBWElement> basis;
    for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b)
            for (unsigned c = 0; a + b + c <= d; ++c)
                if (a * b == 0) basis.push_back(PBWElement::monomial(alg, {a, b, c}, constant(alg, Rational(1))));

    for (unsigned t = 0; t <= max_t; ++t) {
        const unsigned n = (d + 1) * (d + 1) + t;
        Rational c = casimir_sl2(n);
        if (rank(tab.t.eval(std::span<const Rational>(&c, 1))) != ps.size()) continue;
        auto rep = sl2_irrep(n);
        QVector v = prop32_vector(d, t);
        std::vector<QVector> mono_images;
        for (const auto& f : basis) mono_images.push_back(apply_element(f, rep, v));
        if (rank_of_vectors(mono_images) != basis.size()) continue;
        std::vector<QVector> p_images;
        for (const auto& p : ps) p_images.push_back(apply_element(p, rep, v));
        if (rank_of_vectors(p_images) != ps.size()) continue;
        return {rep.label, n, d, t, std::move(v)};
    }
    throw CapExceeded("witness_independence: no witness with t <= " + std::to_string(max_t));
}

std::optional<unsigned> sl3_weight_scan(const Certificate& cert, unsigned bound) {
    auto all_vanish = [&](unsigned m1, unsigned m2) {
        auto [d2, d3] = casimir_sl3(m1, m2);
        std::array<Rational, 2> point{d2, d3};
        for (const auto& z : cert.z) {
            if (z.arity() != 2) throw std::invalid_argument("sl3_weight_scan: certificate is not over Z2, Z3");
            if (!z.eval(point).is_zero()) return false;
        }
        return true;
    };
    for (unsigned d = 1; d <= bound; ++d) {
        bool clear = true;
        for (unsigned m1 = d; m1 <= bound && clear; ++m1)
            for (unsigned m2 = d; m2 <= bound && clear; ++m2)
                if (all_vanish(m1, m2)) clear = false;
        if (clear) return d;
    }
    return std::nullopt;
}

DualityReport trace_duality(const PBWElement& q, const std::vector<PBWElement>& ps, const RepLabel& label) {
    const AlgebraSpec& alg = common_algebra(ps);
    check_label(alg, label);
    auto rep = label.build();
    auto ims = images(ps, rep);
    QMatrix qm = eval_element(q, rep);
    const std::size_t dim = rep.dimension;

    DualityReport r;
    std::vector<QVector> vecs;
    for (const auto& m : ims) vecs.push_back(m.vectorize());
    r.member = in_span(vecs, qm.vectorize());

    // tr(P B) = <vec(P^T), vec(B)>, so the complement is the kernel of the stacked vec(P_i^T).
    QMatrix rows(ims.size(), dim * dim);
    for (std::size_t i = 0; i < ims.size(); ++i) {
        QVector pt = ims[i].transpose().vectorize();
        for (std::size_t j = 0; j < pt.size(); ++j) rows(i, j) = pt[j];
    }
    QVector qt = qm.transpose().vectorize();
    r.orthogonal = true;
    for (const auto& b : kernel(rows)) {
        Rational s(0);
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) s += qt[j] * b[j];
        if (!s.is_zero()) {
            r.orthogonal = false;
            break;
        }
    }
    return r;
}

}  // namespace lgd
