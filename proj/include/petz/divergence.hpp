#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "petz/reduction.hpp"

namespace petz {

// Quantum Renyi divergence of order a, evaluated through the classical
// reduction: D_a(rho||sigma) = D_a(P||Q) on the joint pair, including the
// extended orders 0, 1 and infinity.
ExtendedReal petz_renyi(const DensityState& rho, const DensityState& sigma, const AlphaOrder& a);

// Independent functional-calculus route for interior orders:
// (1/(a-1)) log tr rho^(a/2) sigma^(1-a) rho^(a/2), with sigma^(1-a) taken as
// a pseudo-power for a > 1. Must agree with petz_renyi whenever both are
// finite. For a > 1 the domain condition is checked first; on failure the
// value is +inf tagged DomainViolation.
ExtendedReal petz_renyi_direct(const DensityState& rho, const DensityState& sigma, double alpha);

// Domain condition for orders a > 1. In finite dimension it reduces to: no
// cell with r_i > 0, s_j = 0 and nonzero overlap. The witness names the first
// violating (i, j) (0-based).
struct Condition1Result {
    bool ok;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};
Condition1Result condition1_check(const DensityState& rho, const DensityState& sigma,
                                  double alpha);

// Order-0 value -log tr Pi_rho sigma, computed on the spectral data.
ExtendedReal d_zero(const DensityState& rho, const DensityState& sigma);

// Order-1 value through the classical KL of the joint pair. Well-defined for
// every input, +inf on support violation.
ExtendedReal d_one(const DensityState& rho, const DensityState& sigma);

// Finite-dimensional trace route tr rho (log rho - log sigma) with
// pseudo-logarithms, valid (and cross-checked in the test suites) when
// supp rho subseteq supp sigma; +inf otherwise.
ExtendedReal d_one_trace(const DensityState& rho, const DensityState& sigma);

// Order-infinity value log sup { r_i / s_j : |<u_i|v_j>|^2 > 0 } with the
// conventions 0/0 = 0 and x/0 = inf.
ExtendedReal d_infty(const DensityState& rho, const DensityState& sigma);

// The same sup without the overlap restriction, log sup { r_i / s_j : r_i > 0 },
// which equals log ||rho|| ||sigma^-1|| in finite dimension.
ExtendedReal d_infty_unrestricted(const DensityState& rho, const DensityState& sigma);

// log(||rho|| * ||sigma^-1||), valid under the hypothesis that every zero
// overlap cell has r_i = 0 (then it equals d_infty). Throws
// HypothesisFailedError otherwise; +inf when sigma is singular.
ExtendedReal d_infty_norm_form(const DensityState& rho, const DensityState& sigma);

bool d_infty_hypothesis_holds(const DensityState& rho, const DensityState& sigma);

// D_max = log ||sigma^(-1/2) rho sigma^(-1/2)|| compared against the two
// upper bounds log ||rho|| ||sigma^-1|| <= log sup 1/s_j. Requires sigma
// invertible (SingularSigmaError otherwise).
struct DmaxReport {
    double d_max;
    double log_norm_product;  // log ||rho|| + log ||sigma^-1||
    double log_sup_inv_s;     // log sup { 1/s_j }
    bool chain_ok;            // d_max <= log_norm_product <= log_sup_inv_s (1e-10 slack)
    bool hypothesis_holds;    // the zero-overlap hypothesis, informational
};
DmaxReport d_max_comparison(const DensityState& rho, const DensityState& sigma);

// D_a(rho||sigma) - (a/2) ||rho - sigma||_2^4 for a in (0,1]; nonnegative up
// to 1e-12.
ExtendedReal quantum_pinsker_gap(const DensityState& rho, const DensityState& sigma, double a);

// Divergence values along an ascending grid of orders, plus the transform
// (1-a) D_a used by the concavity property. Monotonicity violations beyond
// 1e-10 are recorded rather than thrown.
struct DivergenceCurve {
    std::vector<AlphaOrder> grid;
    std::vector<ExtendedReal> values;
    // (1-a) D_a with the conventions: 0 at a = 1 even when D_1 = inf, 0 at
    // a = inf when rho = sigma, -inf when D_a = inf at a > 1.
    std::vector<double> concavity_transform;
    std::vector<std::size_t> monotonicity_violations;
};
DivergenceCurve alpha_scan(const DensityState& rho, const DensityState& sigma,
                           const std::vector<AlphaOrder>& grid);

// Distribution of sigma^(1-a) with respect to rho^a: atoms at the distinct
// values s^(1-a) with masses sum_i r_i^a |<u_i|v_j>|^2 aggregated over j with
// equal s_j. The first moment equals tr rho^(a/2) sigma^(1-a) rho^(a/2).
class MuMeasure {
  public:
    explicit MuMeasure(std::vector<std::pair<double, double>> atoms);

    // (location, mass), descending by location.
    const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }
    double integral() const;  // sum location * mass

  private:
    std::vector<std::pair<double, double>> atoms_;
};

// Throws DomainViolationError when a > 1 and the domain condition fails.
MuMeasure mu_measure(const DensityState& rho, const DensityState& sigma, double alpha);

}  // namespace petz
