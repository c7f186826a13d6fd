#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "petz/errors.hpp"

namespace petz {

using cplx = std::complex<double>;

// Dense complex matrix, row-major storage. Small and value-semantic; every
// operand in this library is desk-scale (dim <= 64).
class CMat {
  public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMat adjoint() const;
    CMat operator*(const CMat& rhs) const;
    CMat operator+(const CMat& rhs) const;
    CMat operator-(const CMat& rhs) const;
    CMat scaled(cplx factor) const;

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    // max_ij |A_ij - conj(A_ji)|
    double hermiticity_residual() const;
    // ||A^dagger A - I||_F over the given number of columns
    double gram_residual(std::size_t ncols) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// A validated Hermitian matrix. Construction checks
// max |A_ij - conj(A_ji)| <= 1e-12 * max|A|.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(CMat m);

    std::size_t dim() const { return mat_.rows(); }
    const CMat& mat() const { return mat_; }

  private:
    CMat mat_;
};

}  // namespace petz
