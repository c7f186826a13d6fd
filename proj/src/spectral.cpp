#include "petz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace petz {

namespace {

double off_diagonal_norm(const CMat& a) {
    double s = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation
//   J(p,p) = c, J(p,q) = s e^{i phi}, J(q,p) = -s e^{-i phi}, J(q,q) = c
// with a_pq = |a_pq| e^{i phi} keeps A Hermitian under A <- J^dagger A J.
void jacobi_rotate(CMat& a, CMat& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double m = std::abs(apq);
    if (m == 0.0) return;
    const cplx phase = apq / m;  // e^{i phi}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * m);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    a(p, p) = app - t * m;
    a(q, q) = aqq + t * m;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(phase) * akq;
        a(k, q) = s * phase * akp + c * akq;
        a(p, k) = std::conj(a(k, p));
        a(q, k) = std::conj(a(k, q));
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp - s * std::conj(phase) * vkq;
        v(k, q) = s * phase * vkp + c * vkq;
    }
}

}  // namespace

EigResult eig_hermitian(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    CMat a = h.mat();
    // Symmetrize exactly so rotations see a Hermitian matrix to working
    // precision regardless of the 1e-12 construction slack.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
        a(i, i) = a(i, i).real();
    }

    CMat v = CMat::identity(n);
    const double norm = std::max(a.frobenius_norm(), 1e-300);
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-15 * norm) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 1e-300) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

    EigResult out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    }

    // Residual contract: ||H V - V diag|| <= 1e-11 * dim * ||H||.
    CMat hv = h.mat() * out.eigenvectors;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) hv(r, k) -= out.eigenvalues[k] * out.eigenvectors(r, k);
    if (hv.frobenius_norm() > 1e-11 * static_cast<double>(n) * norm)
        throw Error("eig_hermitian: residual contract violated");
    return out;
}

DensityState::DensityState(std::vector<double> eigenvalues, CMat eigenvectors)
    : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)) {
    const std::size_t n = vectors_.rows();
    if (n == 0 || vectors_.cols() != n || values_.size() != n)
        throw InvalidStateError("DensityState: need dim eigenvalues and a dim x dim basis");

    for (double& r : values_) {
        if (r < 0.0) {
            if (r < -1e-12) throw InvalidStateError("DensityState: negative eigenvalue");
            r = 0.0;
        }
    }

    // Sort descending, carrying the basis columns along.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return values_[x] > values_[y]; });
    std::vector<double> sorted(n);
    CMat basis(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted[k] = values_[order[k]];
        for (std::size_t r = 0; r < n; ++r) basis(r, k) = vectors_(r, order[k]);
    }
    values_ = std::move(sorted);
    vectors_ = std::move(basis);

    const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9)
        throw InvalidStateError("DensityState: eigenvalues do not sum to 1 within 1e-9");
    for (double& r : values_) r /= sum;

    if (vectors_.gram_residual(n) > 1e-10)
        throw InvalidStateError("DensityState: eigenvector columns not orthonormal within 1e-10");
}

std::size_t DensityState::rank(double tol) const {
    const double cutoff = tol * max_eigenvalue();
    std::size_t r = 0;
    for (double v : values_)
        if (v > cutoff) ++r;
    return r;
}

CMat DensityState::to_matrix() const {
    const std::size_t n = dim();
    CMat out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (values_[k] == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vi = vectors_(i, k) * values_[k];
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(vectors_(j, k));
        }
    }
    return out;
}

DensityState density_from_matrix(const HermitianMatrix& m, double tol) {
    EigResult eig = eig_hermitian(m);
    const double lmax = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
    const double lmin = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    if (lmin < -tol) throw NotPsdError("density_from_matrix: eigenvalue below -tol");
    if (std::abs(m.mat().trace().real() - 1.0) > 1e-9)
        throw TraceNotOneError("density_from_matrix: |tr M - 1| > 1e-9");

    const double cutoff = tol * std::max(lmax, 0.0);
    double sum = 0.0;
    for (double& v : eig.eigenvalues) {
        if (v <= cutoff) v = 0.0;
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw TraceNotOneError("density_from_matrix: clamped spectrum does not sum to 1");
    for (double& v : eig.eigenvalues) v /= sum;
    return DensityState(std::move(eig.eigenvalues), std::move(eig.eigenvectors));
}

CMat SupportProjector::to_matrix() const {
    CMat out(dim, dim);
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t i = 0; i < dim; ++i) {
            const cplx bi = basis(i, k);
            for (std::size_t j = 0; j < dim; ++j) out(i, j) += bi * std::conj(basis(j, k));
        }
    return out;
}

SupportProjector support_projector(const DensityState& s, double tol) {
    const std::size_t n = s.dim();
    const std::size_t r = s.rank(tol);
    CMat basis(n, r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < n; ++i) basis(i, k) = s.eigenvectors()(i, k);
    return SupportProjector{n, r, std::move(basis)};
}

namespace {

template <typename F>
CMat functional_calculus(const DensityState& s, double tol, bool pseudo, F&& f,
                         double zero_image) {
    const std::size_t n = s.dim();
    const double cutoff = tol * s.max_eigenvalue();
    CMat out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double image;
        if (s.eigenvalues()[k] > cutoff) {
            image = f(s.eigenvalues()[k]);
        } else if (pseudo) {
            continue;
        } else {
            image = zero_image;
            if (image == 0.0) continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vi = s.eigenvectors()(i, k) * image;
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += vi * std::conj(s.eigenvectors()(j, k));
        }
    }
    return out;
}

}  // namespace

CMat matrix_power(const DensityState& s, double e, bool pseudo, double tol) {
    const double cutoff = tol * s.max_eigenvalue();
    if (!pseudo && e < 0.0) {
        for (double v : s.eigenvalues())
            if (v <= cutoff)
                throw SingularPowerError(
                    "matrix_power: negative power of a singular state needs pseudo");
    }
    const double zero_image = (!pseudo && e == 0.0) ? 1.0 : 0.0;
    return functional_calculus(
        s, tol, pseudo, [e](double x) { return std::pow(x, e); }, zero_image);
}

CMat matrix_log_pseudo(const DensityState& s, double tol) {
    return functional_calculus(
        s, tol, /*pseudo=*/true, [](double x) { return std::log(x); }, 0.0);
}

double hs_norm_sq_diff(const DensityState& rho, const DensityState& sigma) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("hs_norm_sq_diff: states have different dimension");
    const std::size_t n = rho.dim();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx dot = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                dot += std::conj(rho.eigenvectors()(k, i)) * sigma.eigenvectors()(k, j);
            const double d = rho.eigenvalues()[i] - sigma.eigenvalues()[j];
            sum += d * d * std::norm(dot);
        }
    }
    return sum;
}

}  // namespace petz
