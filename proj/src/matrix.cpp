#include "petz/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace petz {

CMat CMat::identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::adjoint() const {
    CMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMat CMat::operator*(const CMat& rhs) const {
    if (cols_ != rhs.rows_) throw DimMismatchError("CMat: incompatible shapes in product");
    CMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx a = (*this)(i, k);
            if (a == cplx{}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

CMat CMat::operator+(const CMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimMismatchError("CMat: incompatible shapes in sum");
    CMat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

CMat CMat::operator-(const CMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimMismatchError("CMat: incompatible shapes in difference");
    CMat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

CMat CMat::scaled(cplx factor) const {
    CMat out = *this;
    for (auto& v : out.data_) v *= factor;
    return out;
}

cplx CMat::trace() const {
    cplx t = 0.0;
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double CMat::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double CMat::hermiticity_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

double CMat::gram_residual(std::size_t ncols) const {
    double worst = 0.0;
    for (std::size_t a = 0; a < ncols; ++a) {
        for (std::size_t b = 0; b < ncols; ++b) {
            cplx dot = 0.0;
            for (std::size_t k = 0; k < rows_; ++k)
                dot += std::conj((*this)(k, a)) * (*this)(k, b);
            if (a == b) dot -= 1.0;
            worst += std::norm(dot);
        }
    }
    return std::sqrt(worst);
}

HermitianMatrix::HermitianMatrix(CMat m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0)
        throw NonHermitianError("HermitianMatrix: matrix must be square and nonempty");
    const double scale = std::max(mat_.max_abs(), 1e-300);
    if (mat_.hermiticity_residual() > 1e-12 * scale)
        throw NonHermitianError("HermitianMatrix: A != A^dagger beyond 1e-12 relative");
}

}  // namespace petz
