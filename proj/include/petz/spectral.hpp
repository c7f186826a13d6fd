#pragma once

#include <cstddef>
#include <vector>

#include "petz/matrix.hpp"

namespace petz {

inline constexpr double kSupportTol = 1e-10;

struct EigResult {
    std::vector<double> eigenvalues;  // descending
    CMat eigenvectors;                // column k belongs to eigenvalues[k]
};

// Cyclic complex Jacobi eigendecomposition of a Hermitian matrix.
// Post: H V = V diag(lambda) with Frobenius residual <= 1e-11 * dim * ||H||_F,
// eigenvalues sorted descending.
EigResult eig_hermitian(const HermitianMatrix& h);

// A density operator held in spectral form: descending eigenvalues summing to
// one (within 1e-9) and an orthonormal eigenbasis (Gram residual <= 1e-10).
// Eigenvalues in [-1e-12, 0) are clamped to exactly 0 at construction so that
// support logic downstream is discrete.
class DensityState {
  public:
    DensityState(std::vector<double> eigenvalues, CMat eigenvectors);

    std::size_t dim() const { return vectors_.rows(); }
    const std::vector<double>& eigenvalues() const { return values_; }
    const CMat& eigenvectors() const { return vectors_; }

    std::size_t rank(double tol = kSupportTol) const;
    double max_eigenvalue() const { return values_.empty() ? 0.0 : values_.front(); }

    // Reassembles sum_k r_k |u_k><u_k|.
    CMat to_matrix() const;

  private:
    std::vector<double> values_;
    CMat vectors_;
};

// Diagonalizes M, clamps eigenvalues below tol * max(lambda) to zero and
// renormalizes the rest to sum one. Throws NotPsdError when min(lambda) <
// -tol and TraceNotOneError when |tr M - 1| > 1e-9.
DensityState density_from_matrix(const HermitianMatrix& m, double tol = kSupportTol);

struct SupportProjector {
    std::size_t dim;
    std::size_t rank;
    CMat basis;  // dim x rank, orthonormal columns

    CMat to_matrix() const;  // basis * basis^dagger
};

SupportProjector support_projector(const DensityState& s, double tol = kSupportTol);

// Functional-calculus power sum_{r_i > cutoff} r_i^e |u_i><u_i|. With pseudo
// set, zero eigenvalues are skipped for any exponent (pseudo-power on the
// support). Without it, a negative power of a singular state throws
// SingularPowerError and e = 0 maps the kernel through 0^0 = 1.
CMat matrix_power(const DensityState& s, double e, bool pseudo, double tol = kSupportTol);

// Pseudo-logarithm sum_{r_i > cutoff} log(r_i) |u_i><u_i|.
CMat matrix_log_pseudo(const DensityState& s, double tol = kSupportTol);

// ||rho - sigma||_2^2 via the double sum over squared basis overlaps,
// sum_ij (r_i - s_j)^2 |<u_i|v_j>|^2.
double hs_norm_sq_diff(const DensityState& rho, const DensityState& sigma);

}  // namespace petz
