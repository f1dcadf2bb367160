#include "lgd/center_decomp.hpp"
#include "lgd/dependence.hpp"
#include "lgd/errors.hpp"
#include "lgd/expr.hpp"

#include <doctest.h>

using namespace lgd;

namespace {

const AlgebraSpec& sl2 = AlgebraSpec::sl2();
const AlgebraSpec& sl3 = AlgebraSpec::sl3();

std::vector<PBWElement> parse_list(std::initializer_list<const char*> xs, const AlgebraSpec& alg = sl2) {
    std::vector<PBWElement> out;
    for (auto x : xs) out.push_back(parse_pbw(x, alg));
    return out;
}

CenterPoly C() { return CenterPoly::variable(1, 0); }
CenterPoly k(const Rational& c) { return CenterPoly(1, c); }

// Two tuples span the same ray over the fraction field.
bool proportional(const std::vector<CenterPoly>& a, const std::vector<CenterPoly>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    return true;
}

const auto ce1 = {"H", "C*X^2 + (3/2)*H", "(3/2)*X^2 + C*H"};

}  // namespace

TEST_CASE("dependence over the scalars") {
    auto v = decide_c_dependence(parse_list({"X", "Y", "X + 2*Y"}));
    CHECK(v.kind == VerdictKind::dependent);
    REQUIRE(v.certificate);
    CHECK(v.certificate->z.size() == 3);
    CHECK(decide_c_dependence(parse_list({"X", "Y", "H"})).kind == VerdictKind::independent);
    CHECK_THROWS(decide_c_dependence(parse_list({"C*X"})));
}

TEST_CASE("dependence over the center") {
    auto ind = decide_center_dependence(parse_list({"X", "Y"}));
    CHECK(ind.kind == VerdictKind::independent);
    CHECK(ind.rank == 2);

    auto ps = parse_list(ce1);
    auto dep = decide_center_dependence(ps);
    CHECK(dep.kind == VerdictKind::dependent);
    REQUIRE(dep.certificate);
    CHECK(proportional(dep.certificate->z, {k(Rational(9, 4)) - C() * C(), k(Rational(-3, 2)), C()}));
    CHECK(verify_identity(dep.certificate->z, ps));

    // XY, YX, H are dependent over the scalars already
    auto d2 = decide_center_dependence(parse_list({"X*Y", "Y*X", "H"}));
    CHECK(d2.kind == VerdictKind::dependent);
}

TEST_CASE("independence verdicts can carry a witness") {
    auto v = decide_center_dependence(parse_list({"X", "H"}), true);
    REQUIRE(v.evidence);
    CHECK(v.evidence->vector.size() == v.evidence->n);
}

TEST_CASE("loc_span_solve") {
    auto c = loc_span_solve(parse_pbw("H", sl2), parse_list({"C*X^2 + (3/2)*H", "(3/2)*X^2 + C*H"}));
    REQUIRE(c);
    REQUIRE(c->z0);
    // z0 q = z1 p1 + z2 p2 with z0 ~ 9/4 - C^2, z ~ (3/2, -C)
    std::vector<CenterPoly> ours{*c->z0, c->z[0], c->z[1]};
    CHECK(proportional(ours, {k(Rational(9, 4)) - C() * C(), k(Rational(3, 2)), -C()}));
    CHECK_FALSE(loc_span_solve(parse_pbw("X", sl2), parse_list({"Y"})));
}

TEST_CASE("condition (1)") {
    auto q = parse_pbw("H", sl2);
    auto c = loc_span_solve(q, parse_list({"C*X^2 + (3/2)*H", "(3/2)*X^2 + C*H"}));
    REQUIRE(c);
    auto rep = condition1_report(*c, q);
    CHECK_FALSE(rep.holds);
    CHECK(rep.violations == std::vector<unsigned>{2});

    Certificate third{{k(1)}, C() - k(Rational(3, 2))};
    CHECK_FALSE(condition1_check(third, parse_pbw("I", sl2)));
    Certificate unit{{k(1)}, k(1)};
    CHECK(condition1_check(unit, parse_pbw("X", sl2)));
}

TEST_CASE("decide_loc statuses") {
    auto a = decide_loc(parse_pbw("H", sl2), parse_list({"C*X^2 + (3/2)*H", "(3/2)*X^2 + C*H"}));
    CHECK(a.status == LocStatus::inconclusive);
    CHECK(decide_loc(parse_pbw("X", sl2), parse_list({"Y"})).status == LocStatus::not_in_ref);
    CHECK(decide_loc(parse_pbw("X", sl2), parse_list({"X", "Y"})).status == LocStatus::in_loc);
}

TEST_CASE("per-representation oracles on the counterexamples") {
    auto ps = parse_list({"I + H", "X + Y", "(C - 3/2)*X"});
    auto q = parse_pbw("X", sl2);
    auto at2 = empirical_loc(q, ps, {RepLabel::rho(2)});
    CHECK_FALSE(at2[0].holds);
    auto ref2 = empirical_ref(q, ps, RepLabel::rho(2), 50, 1);
    CHECK_FALSE(ref2.counterexample);
    CHECK(ref2.summary() == "no counterexample found");
    auto ref3 = empirical_ref(q, ps, RepLabel::rho(3), 50, 1);
    CHECK_FALSE(ref3.counterexample);

    auto third = empirical_ref(parse_pbw("I", sl2), parse_list({"(C - 3/2)*I"}), RepLabel::rho(2), 10, 1);
    REQUIRE(third.counterexample);
    CHECK(*third.counterexample == QVector{1, 0});
}

TEST_CASE("witness_independence") {
    auto w = witness_independence(parse_list({"X", "Y"}));
    CHECK(w.d == 1);
    CHECK(w.n == 4 + w.t);
    auto rep = sl2_irrep(w.n);
    std::vector<QVector> imgs{apply_element(parse_pbw("X", sl2), rep, w.vector),
                              apply_element(parse_pbw("Y", sl2), rep, w.vector)};
    CHECK(rank_of_vectors(imgs) == 2);

    auto one = witness_independence(parse_list({"I"}));
    CHECK_FALSE(is_zero_vector(one.vector));

    auto xyh = witness_independence(parse_list({"X", "Y", "H"}));
    CHECK(xyh.n <= 4 + 50);
    CHECK_THROWS(witness_independence(parse_list(ce1)));
}

TEST_CASE("witness scan cap is reported") {
    // (C - c_4) vanishes at the first candidate n = 4
    auto ps = parse_list({"(C - 15/2)*X"});
    CHECK_THROWS_AS(witness_independence(ps, 0), CapExceeded);
    CHECK(witness_independence(ps).n == 5);
}

TEST_CASE("sl3 weight scan") {
    Certificate constant{{CenterPoly(2, 1), CenterPoly(2, 2)}, std::nullopt};
    CHECK(sl3_weight_scan(constant, 5) == 1u);
    CHECK_FALSE(sl3_weight_scan(constant, 0));
    // z = (Z2 - 24, Z2 - 24): vanishes on (2,2) only
    auto z = CenterPoly::variable(2, 0) - CenterPoly(2, 24);
    auto d = sl3_weight_scan(Certificate{{z, z}, std::nullopt}, 6);
    REQUIRE(d);
    CHECK(*d == 3);
}

TEST_CASE("sl3 center dependence") {
    auto ps = parse_list({"Y2*X2", "Z2", "Y1*X1", "Y3*X3", "H1^2 + H1*H2 + H2^2 + 3*H1 + 3*H2"}, sl3);
    auto v = decide_center_dependence(ps);
    CHECK(v.kind == VerdictKind::dependent);
    REQUIRE(v.certificate);
    CHECK(verify_identity(v.certificate->z, ps));
    auto pts = empirical_lld(ps, {RepLabel::pi(1, 0), RepLabel::pi(1, 1)});
    for (const auto& p : pts) CHECK(p.holds);
}

TEST_CASE("trace duality") {
    auto ps = parse_list({"X", "Y"});
    auto in = trace_duality(parse_pbw("X + Y", sl2), ps, RepLabel::rho(3));
    CHECK(in.member);
    CHECK(in.orthogonal);
    auto out = trace_duality(parse_pbw("H", sl2), ps, RepLabel::rho(3));
    CHECK_FALSE(out.member);
    CHECK_FALSE(out.orthogonal);
}
