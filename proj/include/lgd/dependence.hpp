#pragma once

#include "lgd/center_decomp.hpp"
#include "lgd/pbw.hpp"
#include "lgd/poly_matrix.hpp"
#include "lgd/representation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lgd {

/// z_1..z_k, and z_0 for span-membership certificates (z_0 q = sum z_i p_i).
struct Certificate {
    std::vector<CenterPoly> z;
    std::optional<CenterPoly> z0;
};

/// Exact independence evidence: rho_n(p_j) v are linearly independent.
struct IndependenceWitness {
    std::string rep_label;
    unsigned n = 0;
    unsigned d = 0;
    unsigned t = 0;
    QVector vector;
};

enum class VerdictKind { dependent, independent };

struct Verdict {
    VerdictKind kind = VerdictKind::independent;
    std::size_t rank = 0;
    std::optional<Certificate> certificate;
    std::optional<IndependenceWitness> evidence;
};

/// Which representation: rho_k for sl2, pi_{m1,m2} for sl3.
struct RepLabel {
    AlgebraKind kind = AlgebraKind::sl2;
    unsigned k = 0;
    WeightPair w;

    static RepLabel rho(unsigned k) { return {AlgebraKind::sl2, k, {}}; }
    static RepLabel pi(unsigned m1, unsigned m2) { return {AlgebraKind::sl3, 0, {m1, m2}}; }
    std::string to_string() const;
    RepMatrices build() const;
};

/// Decompositions of each p_j over the constrained basis and the coefficient matrix T
/// (rows: union of basis monomials in decreasing order; column j: coefficients of p_j).
struct CoefficientTable {
    std::vector<Exponents> monomials;
    std::vector<CenterDecomposition> decompositions;
    PolyMatrix t;
};
CoefficientTable coefficient_table(const std::vector<PBWElement>& ps);

/// Dependence over the scalars by exact rank of PBW coordinates. Center-free input only.
Verdict decide_c_dependence(const std::vector<PBWElement>& ps);

/// Dependence over the center; the certificate is a content-normalized kernel vector of T.
/// With attach_witness (sl2 only), independent verdicts carry a representation witness.
Verdict decide_center_dependence(const std::vector<PBWElement>& ps, bool attach_witness = false);

/// z_0 != 0 and z with z_0 q = sum z_i p_i over the center, or nullopt.
std::optional<Certificate> loc_span_solve(const PBWElement& q, const std::vector<PBWElement>& ps);

struct Condition1Report {
    bool holds = true;
    /// n >= 1 with z_0(c_n) = 0.
    std::vector<unsigned> zero_dimensions;
    /// Those n where rho_n(q) != 0.
    std::vector<unsigned> violations;
};

/// sl2 only: for every n with z_0(c_n) = 0, require rho_n(q) = 0.
Condition1Report condition1_report(const Certificate& cert, const PBWElement& q);
bool condition1_check(const Certificate& cert, const PBWElement& q);

enum class LocStatus { in_loc, not_in_ref, inconclusive };
std::string to_string(LocStatus s);

struct LocDecision {
    LocStatus status = LocStatus::inconclusive;
    std::optional<Certificate> certificate;
    std::optional<Condition1Report> condition1;
};
/// Certificate exists and condition (1) holds => in Loc; no certificate => not in Ref;
/// otherwise inconclusive.
LocDecision decide_loc(const PBWElement& q, const std::vector<PBWElement>& ps);

struct PointReport {
    std::string label;
    std::size_t rank = 0;
    bool holds = false;  // dependent (lld) or member (loc)
};

/// Rank of the vectorized images pi(p_j) at each representation (center at its Casimir scalars).
std::vector<PointReport> empirical_lld(const std::vector<PBWElement>& ps, const std::vector<RepLabel>& reps);
/// pi(q) in span{pi(p_j)} at each representation.
std::vector<PointReport> empirical_loc(const PBWElement& q, const std::vector<PBWElement>& ps,
                                       const std::vector<RepLabel>& reps);

struct RefReport {
    std::string label;
    std::uint64_t seed = 0;
    std::size_t vectors_tested = 0;
    std::optional<QVector> counterexample;
    /// "no counterexample found" or "counterexample found".
    std::string summary() const;
};

/// Tests pi(q)v in span{pi(p_j)v} on the standard basis and `samples` seeded random vectors.
RefReport empirical_ref(const PBWElement& q, const std::vector<PBWElement>& ps, const RepLabel& rep,
                        std::size_t samples, std::uint64_t seed);

/// Scans n = (d+1)^2 + t for t <= max_t; throws CapExceeded when the scan runs out.
IndependenceWitness witness_independence(const std::vector<PBWElement>& ps, unsigned max_t = 50);

/// Heuristic: least d <= bound with no (m1, m2), d <= m1, m2 <= bound, where every z_i
/// vanishes at (d2, d3). nullopt when bound is 0 or every d fails.
std::optional<unsigned> sl3_weight_scan(const Certificate& cert, unsigned bound);

struct DualityReport {
    bool member = false;      // pi(q) in span{pi(p_j)}
    bool orthogonal = false;  // tr(pi(q) B) = 0 for every B in the trace-orthogonal complement
};
DualityReport trace_duality(const PBWElement& q, const std::vector<PBWElement>& ps, const RepLabel& rep);

}  // namespace lgd
