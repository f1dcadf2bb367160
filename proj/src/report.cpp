#include "lgd/report.hpp"

#include "lgd/expr.hpp"

#include <sstream>

namespace lgd {

std::string vector_text(const QVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + "]";
}

std::string matrix_text(const QMatrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        QVector row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
        s += (r ? "\n" : "") + vector_text(row);
    }
    return s;
}

json to_json(const CenterPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json ex = json::array();
        for (int i = 0; i < p.arity(); ++i) ex.push_back(e[i]);
        terms.push_back({{"exponents", ex}, {"coefficient", c.to_string()}});
    }
    return {{"text", format_center(p)}, {"variables", center_variable_names(p.arity())}, {"terms", terms}};
}

json to_json(const PBWElement& e) {
    const AlgebraSpec& alg = e.algebra();
    json terms = json::array();
    for (const auto& [ex, c] : e.terms()) {
        json mono = json::object();
        for (Generator g = 0; g < ex.size(); ++g)
            if (ex[g]) mono[alg.generator_name(g)] = ex[g];
        terms.push_back({{"monomial", mono}, {"coefficient", to_json(c)}});
    }
    return {{"text", format_expr(e)}, {"terms", terms}};
}

json to_json(const CenterDecomposition& d) {
    json j = to_json(d.formal());
    j["basis_size"] = d.terms().size();
    return j;
}

json to_json(const QVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

json to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(row);
    }
    return rows;
}

json to_json(const Certificate& c) {
    json j = json::object();
    if (c.z0) j["z0"] = to_json(*c.z0);
    json z = json::array();
    for (const auto& p : c.z) z.push_back(to_json(p));
    j["z"] = z;
    return j;
}

json to_json(const IndependenceWitness& w) {
    return {{"representation", w.rep_label}, {"n", w.n}, {"d", w.d}, {"t", w.t}, {"vector", to_json(w.vector)}};
}

json to_json(const Verdict& v) {
    json j{{"verdict", v.kind == VerdictKind::dependent ? "dependent" : "independent"}, {"rank", v.rank}};
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    if (v.evidence) j["evidence"] = to_json(*v.evidence);
    return j;
}

json to_json(const Condition1Report& r) {
    return {{"holds", r.holds}, {"zero_dimensions", r.zero_dimensions}, {"violations", r.violations}};
}

json to_json(const LocDecision& d) {
    json j{{"status", to_string(d.status)}};
    j["condition4"] = d.certificate.has_value();
    if (d.certificate) j["certificate"] = to_json(*d.certificate);
    if (d.condition1) j["condition1"] = to_json(*d.condition1);
    return j;
}

json to_json(const PointReport& r) { return {{"representation", r.label}, {"rank", r.rank}, {"holds", r.holds}}; }

json to_json(const RefReport& r) {
    json j{{"representation", r.label},
           {"seed", r.seed},
           {"vectors_tested", r.vectors_tested},
           {"result", r.summary()}};
    if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
    return j;
}

json to_json(const RepMatrices& r) {
    json mats = json::object();
    for (Generator g = 0; g < r.matrices.size(); ++g) mats[r.algebra->generator_name(g)] = to_json(r.matrices[g]);
    json j{{"label", r.label}, {"algebra", r.algebra->name()}, {"dimension", r.dimension}, {"matrices", mats}};
    if (!r.basis_triples.empty()) j["basis_triples"] = r.basis_triples;
    if (r.casimir) j["casimir"] = to_json(*r.casimir);
    return j;
}

std::string to_text(const Certificate& c) {
    std::ostringstream os;
    if (c.z0) os << "z0 = " << format_center(*c.z0) << "\n";
    for (std::size_t i = 0; i < c.z.size(); ++i) os << "z" << (i + 1) << " = " << format_center(c.z[i]) << "\n";
    return os.str();
}

std::string to_text(const Verdict& v) {
    std::ostringstream os;
    os << (v.kind == VerdictKind::dependent ? "dependent" : "independent") << " (rank " << v.rank << ")\n";
    if (v.certificate) os << to_text(*v.certificate);
    if (v.evidence)
        os << "witness: " << v.evidence->rep_label << ", v = " << vector_text(v.evidence->vector) << "\n";
    return os.str();
}

std::string to_text(const LocDecision& d) {
    std::ostringstream os;
    os << "Loc: " << to_string(d.status) << "\n";
    if (d.certificate)
        os << "condition (4): holds\n" << to_text(*d.certificate);
    else
        os << "condition (4): fails (no z0 q = sum z_i p_i over the center)\n";
    if (d.condition1) {
        os << "condition (1): " << (d.condition1->holds ? "holds" : "fails");
        if (!d.condition1->violations.empty()) {
            os << " (z0(c_n) = 0 while rho_n(q) != 0 at n =";
            for (auto n : d.condition1->violations) os << " " << n;
            os << ")";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace lgd
