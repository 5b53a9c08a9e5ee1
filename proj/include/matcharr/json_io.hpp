#pragma once

#include "matcharr/arrangement.hpp"
#include "matcharr/matching.hpp"
#include "matcharr/polynomial.hpp"
#include "matcharr/verify.hpp"

#include "json.hpp"

#include <vector>

namespace matcharr {

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json bigint_json(const BigInt& value);

// {"dimension": n, "hyperplanes": [[c_1, ..., c_n], ...]}
nlohmann::json arrangement_json(const Arrangement& a);
// {"chi": [c_0, c_1, ..., c_n]}
nlohmann::json polynomial_json(const IntPolynomial& chi);
nlohmann::json coefficients_json(const IntPolynomial& p);
// {"sign_vectors_seen", "constancy_violations", "uniqueness_violations", "samples", "seed"}
nlohmann::json region_report_json(const RegionReport& r);
// {"theorem_id", "instance_description", "pass", "details"}
nlohmann::json theorem_report_json(const TheoremReport& r);
// Matchings as lists of 1-based edge numbers under the numbering, each sorted.
nlohmann::json matchings_json(const std::vector<Matching>& ms, const EdgeNumbering& numbering);
nlohmann::json graph_json(const Graph& g);

} // namespace matcharr
