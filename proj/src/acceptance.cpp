#include "lgd/acceptance.hpp"

#include "lgd/center_decomp.hpp"
#include "lgd/dependence.hpp"
#include "lgd/expr.hpp"
#include "lgd/random.hpp"
#include "lgd/representation.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>

namespace lgd {

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail(const std::string& why) { return {false, why}; }

const AlgebraSpec& sl2 = AlgebraSpec::sl2();
const AlgebraSpec& sl3 = AlgebraSpec::sl3();

PBWElement one(const AlgebraSpec& alg) { return PBWElement::scalar(alg, Rational(1)); }

Outcome casimir_sl2_eigenvalues() {
    const PBWElement& c = casimir_elements(sl2)[0];
    for (unsigned k = 1; k <= 12; ++k) {
        QMatrix expected = QMatrix::identity(k) * casimir_sl2(k);
        if (eval_element(c, sl2_irrep(k)) != expected) return fail("rho_" + std::to_string(k) + "(C) != c_k I");
    }
    return {true, "k = 1..12"};
}

Outcome casimir_sl3_eigenvalues() {
    const auto& z = casimir_elements(sl3);
    for (unsigned m1 = 0; m1 <= 3; ++m1)
        for (unsigned m2 = 0; m2 <= 3; ++m2) {
            auto rep = sl3_irrep({m1, m2});
            auto d = casimir_sl3(m1, m2);
            MonomialEvaluator ev(rep);
            for (int i = 0; i < 2; ++i)
                if (ev.eval(z[i]) != QMatrix::identity(rep.dimension) * d[i])
                    return fail("Z" + std::to_string(i + 2) + " is not scalar d" + std::to_string(i + 2) + " on " +
                                rep.label);
        }
    return {true, "0 <= m1, m2 <= 3"};
}

std::vector<PBWElement> constrained_sl2_monomials(unsigned d, bool constrained) {
    std::vector<PBWElement> out;
    for (std::uint32_t a = 0; a <= d; ++a)
        for (std::uint32_t b = 0; a + b <= d; ++b)
            for (std::uint32_t c = 0; a + b + c <= d; ++c)
                if (!constrained || a * b == 0)
                    out.push_back(PBWElement::monomial(sl2, {a, b, c}, CenterPoly(1, Rational(1))));
    return out;
}

Outcome irreducible_vector_rank() {
    std::ostringstream os;
    for (unsigned d = 1; d <= 3; ++d)
        for (unsigned t = 0; t <= 2; ++t) {
            const unsigned n = (d + 1) * (d + 1) + t;
            auto rep = sl2_irrep(n);
            QVector v = prop32_vector(d, t);
            std::vector<QVector> imgs;
            for (const auto& f : constrained_sl2_monomials(d, true)) imgs.push_back(apply_element(f, rep, v));
            std::size_t expected = 0;
            for (unsigned e = 0; e <= d; ++e) expected += 2 * e + 1;
            std::size_t r = rank_of_vectors(imgs);
            if (imgs.size() != expected || r != expected)
                return fail("d=" + std::to_string(d) + " t=" + std::to_string(t) + ": rank " + std::to_string(r) +
                            " of " + std::to_string(imgs.size()) + ", expected " + std::to_string(expected));
        }
    return {true, "d in {1,2,3}, t in {0,1,2}: rank (d+1)^2"};
}

Outcome theorem1_witness_rank() {
    std::ostringstream os;
    for (unsigned d = 1; d <= 2; ++d) {
        auto w = theorem1_witness(2, d);
        std::vector<QVector> imgs;
        for (const auto& f : constrained_sl2_monomials(d, false)) imgs.push_back(apply_element(f, w.rep, w.vector));
        const std::size_t expected = d == 1 ? 4 : 10;
        if (imgs.size() != expected || rank_of_vectors(imgs) != expected)
            return fail("d=" + std::to_string(d) + ": images are not independent");
        os << (d > 1 ? ", " : "") << "d=" << d << ": " << expected << " independent";
    }
    return {true, os.str()};
}

Outcome theorem2_round_trip(Rng& rng) {
    std::vector<RepLabel> reps;
    for (unsigned n = 2; n <= 8; ++n) reps.push_back(RepLabel::rho(n));
    int dependent = 0, independent = 0;
    for (int i = 0; i < 50; ++i) {
        const bool build_dependent = i % 2 == 0;
        const unsigned k = 2 + static_cast<unsigned>(i % 3);
        std::vector<PBWElement> ps;
        for (unsigned j = 0; j + 1 < k; ++j) ps.push_back(random_element(rng, sl2, 3, 3, 1));
        if (build_dependent) {
            PBWElement last(sl2);
            for (const auto& p : ps) last += p * random_center_poly(rng, 1, 1, false);
            ps.push_back(last);
        } else {
            ps.push_back(random_element(rng, sl2, 3, 3, 1));
        }
        std::string tag = "instance " + std::to_string(i);
        Verdict v = decide_center_dependence(ps);
        if (v.kind == VerdictKind::dependent) {
            ++dependent;
            if (!verify_identity(v.certificate->z, ps)) return fail(tag + ": certificate does not verify");
            for (const auto& r : empirical_lld(ps, reps))
                if (!r.holds) return fail(tag + ": images independent at " + r.label);
        } else {
            if (build_dependent) return fail(tag + ": dependent by construction but decided independent");
            ++independent;
            witness_independence(ps);
        }
    }
    return {true, std::to_string(dependent) + " dependent, " + std::to_string(independent) + " independent"};
}

Outcome ref_loc_counterexamples() {
    std::vector<RepLabel> reps;
    for (unsigned n = 2; n <= 8; ++n) reps.push_back(RepLabel::rho(n));
    // (i) q = H
    {
        PBWElement q = parse_pbw("H", sl2);
        std::vector<PBWElement> ps{parse_pbw("C*X^2 + (3/2)*H", sl2), parse_pbw("(3/2)*X^2 + C*H", sl2)};
        auto cert = loc_span_solve(q, ps);
        if (!cert) return fail("(i): no z0 found");
        Rational c2 = casimir_sl2(2);
        if (!cert->z0->eval(std::span<const Rational>(&c2, 1)).is_zero()) return fail("(i): z0(c_2) != 0");
        if (condition1_check(*cert, q)) return fail("(i): condition (1) unexpectedly holds");
        for (const auto& r : empirical_loc(q, ps, reps))
            if (!r.holds) return fail("(i): rho(q) not in span at " + r.label);
    }
    // (ii) q = X
    {
        PBWElement q = parse_pbw("X", sl2);
        std::vector<PBWElement> ps{parse_pbw("I + H", sl2), parse_pbw("X + Y", sl2), parse_pbw("(C - 3/2)*X", sl2)};
        if (empirical_loc(q, ps, {RepLabel::rho(2)}).front().holds) return fail("(ii): Loc holds at rho_2");
        for (unsigned n = 2; n <= 6; ++n) {
            auto r = empirical_ref(q, ps, RepLabel::rho(n), 100, 1000 + n);
            if (r.counterexample) return fail("(ii): counterexample at rho_" + std::to_string(n));
        }
    }
    // (iii) q = I, p = (C - c_2) I
    {
        PBWElement q = one(sl2);
        PBWElement p = parse_pbw("(C - 3/2)*I", sl2);
        CenterPoly shift = CenterPoly::variable(1, 0) - CenterPoly(1, casimir_sl2(2));
        if (!verify_identity({shift, CenterPoly(1, Rational(-1))}, {q, p}))
            return fail("(iii): (C - c_2) q = p does not verify");
        auto r = empirical_ref(q, {p}, RepLabel::rho(2), 0, 0);
        QVector e1{Rational(1), Rational(0)};
        if (!r.counterexample || *r.counterexample != e1) return fail("(iii): e_1 is not reported as a counterexample");
    }
    return {true, "(i) z0(c_2)=0, cond (1) false, Loc at rho_2..8; (ii) Loc fails at rho_2, Ref holds on samples; "
                  "(iii) e_1 at rho_2"};
}

Outcome sl3_basis_over_center(Rng& rng) {
    std::vector<PBWElement> ps;
    std::vector<CenterDecomposition> ds;
    std::size_t steps = 0;
    for (int i = 0; i < 25; ++i) {
        ps.push_back(random_element(rng, sl3, 4, 4));
        DecomposeStats st;
        ds.push_back(decompose(ps.back(), &st));
        if (!st.strictly_decreasing) return fail("element " + std::to_string(i) + ": order did not decrease");
        steps += st.steps;
        for (const auto& [e, t] : ds.back().terms())
            if (!satisfies_constraint(sl3, e)) return fail("element " + std::to_string(i) + ": constraint violated");
    }
    for (unsigned m1 = 1; m1 <= 3; ++m1)
        for (unsigned m2 = 1; m2 <= 3; ++m2) {
            auto rep = sl3_irrep({m1, m2});
            MonomialEvaluator ev(rep);
            for (std::size_t i = 0; i < ps.size(); ++i)
                if (ev.eval(ps[i]) != ev.eval(ds[i].formal()))
                    return fail("element " + std::to_string(i) + ": evaluation mismatch at " + rep.label);
        }
    return {true, std::to_string(steps) + " rewrite steps, all strictly decreasing"};
}

Outcome lemma_agreement() {
    Sl3Model model({3, 3});
    const WeightPair w{3, 3};
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; k + l <= 2; ++l)
            for (int m = 0; k + l + m <= 2; ++m)
                for (Generator g = 0; g < sl3.generator_count(); ++g) {
                    QVector lhs = model.model_matrix(g) * model.v(k, l, m);
                    QVector rhs(model.model_dimension());
                    for (const auto& [idx, c] : lemma_action(g, {k, l, m}, w)) {
                        const QVector& x = model.v(idx[0], idx[1], idx[2]);
                        for (std::size_t i = 0; i < rhs.size(); ++i)
                            if (!x[i].is_zero()) rhs[i] += c * x[i];
                    }
                    if (lhs != rhs)
                        return fail(sl3.generator_name(g) + " on v_{" + std::to_string(k) + "," + std::to_string(l) +
                                    "," + std::to_string(m) + "}");
                }
    return {true, "8 generators x 10 index triples"};
}

Outcome sampling_vs_symbolic(Rng& rng) {
    std::uniform_int_distribution<std::size_t> size(2, 4);
    std::uniform_int_distribution<int> arity(1, 2), coin(0, 1);
    for (int i = 0; i < 20; ++i) {
        const int ar = arity(rng);
        const std::size_t rows = size(rng), cols = size(rng);
        PolyMatrix m(rows, cols, ar);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_center_poly(rng, ar, 2);
        if (coin(rng)) {
            // Force a polynomial relation among the columns.
            for (std::size_t r = 0; r < rows; ++r) {
                CenterPoly acc(ar);
                for (std::size_t c = 0; c + 1 < cols; ++c) acc += m(r, c) * CenterPoly(ar, Rational(static_cast<long>(c + 1)));
                m(r, cols - 1) = acc * random_center_poly(rng, ar, 1, false);
            }
        }
        const std::size_t symbolic = ff_rank_kernel(m).rank;
        bool attained = false;
        for (int round = 0; round < 3 && !attained; ++round)
            for (int s = 0; s < 20; ++s) {
                std::vector<Rational> pt;
                for (int v = 0; v < ar; ++v) pt.push_back(random_rational(rng, 20, 7));
                std::size_t numeric = rank(m.eval(pt));
                if (numeric > symbolic) return fail("matrix " + std::to_string(i) + ": numeric rank exceeds symbolic");
                if (numeric == symbolic) attained = true;
            }
        if (!attained) return fail("matrix " + std::to_string(i) + ": symbolic rank never attained");
    }
    return {true, "20 matrices"};
}

Outcome trace_duality_check(Rng& rng) {
    int members = 0, non_members = 0;
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<unsigned> kd(1, 3);
        const unsigned k = kd(rng);
        std::vector<PBWElement> ps;
        for (unsigned j = 0; j < k; ++j) ps.push_back(random_element(rng, sl2, 2, 3, i % 4 == 0 ? 1 : 0));
        PBWElement q(sl2);
        if (i % 2 == 0) {
            for (const auto& p : ps) q += p * random_rational(rng);
        } else {
            q = random_element(rng, sl2, 2, 3);
        }
        for (unsigned n = 2; n <= 4; ++n) {
            auto r = trace_duality(q, ps, RepLabel::rho(n));
            if (r.member != r.orthogonal)
                return fail("instance " + std::to_string(i) + " at rho_" + std::to_string(n) + ": membership " +
                            (r.member ? "holds" : "fails") + " but trace test " + (r.orthogonal ? "passes" : "fails"));
            (r.member ? members : non_members)++;
        }
    }
    return {true, std::to_string(members) + " members, " + std::to_string(non_members) + " non-members"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result) {
    Rng rng(seed);
    struct Item {
        const char* id;
        const char* title;
        double limit;
        std::function<Outcome()> run;
    };
    const std::vector<Item> items{
        {"AC1", "sl2 Casimir eigenvalues", 1, casimir_sl2_eigenvalues},
        {"AC2", "sl3 Casimir eigenvalues", 30, casimir_sl3_eigenvalues},
        {"AC3", "irreducible-vector monomial rank", 30, irreducible_vector_rank},
        {"AC4", "dependence-over-scalars witness", 10, theorem1_witness_rank},
        {"AC5", "center dependence round trip", 120, [&] { return theorem2_round_trip(rng); }},
        {"AC6", "Loc/Ref counterexamples", 60, ref_loc_counterexamples},
        {"AC7", "sl3 basis over the center", 120, [&] { return sl3_basis_over_center(rng); }},
        {"AC8", "sl3 v_{k,l,m} action rules at (3,3)", 30, lemma_agreement},
        {"AC9", "sampled vs symbolic rank", 10, [&] { return sampling_vs_symbolic(rng); }},
        {"AC10", "trace duality", 30, [&] { return trace_duality_check(rng); }},
    };
    std::vector<CriterionResult> results;
    for (const auto& item : items) {
        CriterionResult r{item.id, item.title, false, false, 0, item.limit, ""};
        auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = item.run();
            r.correct = o.ok;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.correct = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.passed = r.correct && r.seconds < r.limit_seconds;
        if (r.correct && !r.passed) r.detail += " [runtime limit exceeded]";
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_result(const CriterionResult& r) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "(%.2f s, limit %g s)", r.seconds, r.limit_seconds);
    return r.id + std::string(r.passed ? " PASS  " : " FAIL  ") + r.title + "  " + timing + "  " + r.detail;
}

}  // namespace lgd
