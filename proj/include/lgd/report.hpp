#pragma once

#include "lgd/center_decomp.hpp"
#include "lgd/dependence.hpp"
#include "lgd/representation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lgd {

using json = nlohmann::ordered_json;

std::string vector_text(const QVector& v);
std::string matrix_text(const QMatrix& m);

/// {"text": ..., "terms": [{"exponents": [...], "coefficient": "p/q"}]}
json to_json(const CenterPoly& p);
/// {"text": ..., "terms": [{"monomial": {"X": 1, ...}, "coefficient": <CenterPoly>}]}
json to_json(const PBWElement& e);
json to_json(const CenterDecomposition& d);
json to_json(const QVector& v);
json to_json(const QMatrix& m);
json to_json(const Certificate& c);
json to_json(const IndependenceWitness& w);
json to_json(const Verdict& v);
json to_json(const Condition1Report& r);
json to_json(const LocDecision& d);
json to_json(const PointReport& r);
json to_json(const RefReport& r);
json to_json(const RepMatrices& r);

/// Multi-line text forms.
std::string to_text(const Certificate& c);
std::string to_text(const Verdict& v);
std::string to_text(const LocDecision& d);

}  // namespace lgd
