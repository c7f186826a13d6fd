#pragma once

#include <string>

#include "petz/divergence.hpp"

namespace petz {

// State files are JSON. Either form is accepted, exactly one of the two:
//   { "dim": n, "matrix": [[[re, im], ...], ...] }
//   { "dim": n, "eigenvalues": [...], "eigenvectors": [[[re, im], ...], ...] }
// eigenvectors is the dim x dim matrix whose column k is the eigenvector of
// eigenvalue k. The parsed state passes full density validation; errors name
// the violated invariant.
DensityState load_state(const std::string& path, double tol = kSupportTol);
DensityState parse_state(const std::string& json_text, double tol = kSupportTol);
std::string state_to_json(const DensityState& s);

// Curve CSV: header "alpha,value,status", one row per grid point, sorted by
// alpha. alpha is printed as "0", "1", "inf" for the extended orders; values
// carry 12 significant digits; status is finite, +inf:support or
// +inf:divergent.
std::string curve_to_csv(const DivergenceCurve& curve, LogBase base = LogBase::Natural);

struct ParsedCurve {
    std::vector<AlphaOrder> grid;
    std::vector<ExtendedReal> values;
};
ParsedCurve parse_curve_csv(const std::string& csv);

}  // namespace petz
