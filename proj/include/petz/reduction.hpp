#pragma once

#include <cstddef>
#include <vector>

#include "petz/classical.hpp"
#include "petz/spectral.hpp"

namespace petz {

// Cells with squared overlap at or below this are treated as exact zeros, so
// support relations on the joint pair are discrete.
inline constexpr double kOverlapTol = 1e-14;

// w[i][j] = |<u_i|v_j>|^2 for the eigenbases of two states. Both bases being
// orthonormal makes w doubly stochastic; row and column sums are validated to
// within 1e-9.
class OverlapMatrix {
  public:
    OverlapMatrix(const DensityState& rho, const DensityState& sigma);

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return w_[i * dim_ + j]; }

  private:
    std::size_t dim_;
    std::vector<double> w_;
};

struct JointCell {
    std::size_t i, j;
    double w;  // squared overlap, > kOverlapTol
    double p;  // r_i * w
    double q;  // s_j * w
};

// The classical pair (P, Q) on I x I built from two states:
// p_ij = r_i |<u_i|v_j>|^2 and q_ij = s_j |<u_i|v_j>|^2, stored sparsely over
// cells with nonzero overlap.
class JointPair {
  public:
    JointPair(std::size_t dim, std::vector<JointCell> cells);

    std::size_t dim() const { return dim_; }
    const std::vector<JointCell>& cells() const { return cells_; }

    FiniteDistribution p_distribution() const;
    FiniteDistribution q_distribution() const;

    // Discrete absolute continuity P << Q: no cell with p > 0, q = 0.
    bool p_absolutely_continuous() const;
    // Cellwise equality of P and Q within tol.
    bool p_equals_q(double tol = 1e-10) const;

  private:
    std::size_t dim_;
    std::vector<JointCell> cells_;
};

OverlapMatrix overlap_matrix(const DensityState& rho, const DensityState& sigma);
JointPair build_joint(const DensityState& rho, const DensityState& sigma);

// Residuals of the measurement identities for the family
// A_ij = <u_i|v_j> |u_i><v_j|: both completeness sums against the identity
// and the agreement of tr(rho A A^dagger), tr(sigma A^dagger A) with (p, q).
struct PovmReport {
    double completeness_left;   // ||sum A A^dagger - I||_max
    double completeness_right;  // ||sum A^dagger A - I||_max
    double p_residual;          // max |tr rho A_ij A_ij^dagger - p_ij|
    double q_residual;          // max |tr sigma A_ij^dagger A_ij - q_ij|

    bool ok(double completeness_tol = 1e-9, double prob_tol = 1e-10) const {
        return completeness_left <= completeness_tol && completeness_right <= completeness_tol &&
               p_residual <= prob_tol && q_residual <= prob_tol;
    }
};

PovmReport povm_check(const DensityState& rho, const DensityState& sigma);

// supp rho subseteq supp sigma, decided by ||(I - Pi_sigma) Pi_rho||_F <= tol * dim.
bool support_included(const DensityState& rho, const DensityState& sigma,
                      double tol = kSupportTol);
// supp rho _|_ supp sigma, decided by tr Pi_rho sigma <= tol.
bool supports_orthogonal(const DensityState& rho, const DensityState& sigma,
                         double tol = kSupportTol);

}  // namespace petz
