#include "petz/reduction.hpp"

#include <cmath>

namespace petz {

OverlapMatrix::OverlapMatrix(const DensityState& rho, const DensityState& sigma)
    : dim_(rho.dim()), w_(dim_ * dim_) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("overlap_matrix: states have different dimension");
    const CMat& u = rho.eigenvectors();
    const CMat& v = sigma.eigenvectors();
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            cplx dot = 0.0;
            for (std::size_t k = 0; k < dim_; ++k) dot += std::conj(u(k, i)) * v(k, j);
            double w = std::norm(dot);
            if (w <= kOverlapTol) w = 0.0;
            w_[i * dim_ + j] = w;
        }
    }
    // Both bases orthonormal => doubly stochastic.
    for (std::size_t i = 0; i < dim_; ++i) {
        double row = 0.0, col = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) {
            row += w_[i * dim_ + j];
            col += w_[j * dim_ + i];
        }
        if (std::abs(row - 1.0) > 1e-9 || std::abs(col - 1.0) > 1e-9)
            throw InvalidStateError("overlap_matrix: row/column sums deviate from 1 beyond 1e-9");
    }
}

OverlapMatrix overlap_matrix(const DensityState& rho, const DensityState& sigma) {
    return OverlapMatrix(rho, sigma);
}

JointPair::JointPair(std::size_t dim, std::vector<JointCell> cells)
    : dim_(dim), cells_(std::move(cells)) {
    double psum = 0.0, qsum = 0.0;
    for (const auto& c : cells_) {
        psum += c.p;
        qsum += c.q;
    }
    if (std::abs(psum - 1.0) > 1e-9 || std::abs(qsum - 1.0) > 1e-9)
        throw InvalidStateError("JointPair: cell masses do not sum to 1 within 1e-9");
}

FiniteDistribution JointPair::p_distribution() const {
    std::vector<std::pair<FiniteDistribution::Key, double>> entries;
    entries.reserve(cells_.size());
    for (const auto& c : cells_)
        entries.emplace_back(static_cast<FiniteDistribution::Key>(c.i) * dim_ + c.j, c.p);
    return FiniteDistribution(std::move(entries));
}

FiniteDistribution JointPair::q_distribution() const {
    std::vector<std::pair<FiniteDistribution::Key, double>> entries;
    entries.reserve(cells_.size());
    for (const auto& c : cells_)
        entries.emplace_back(static_cast<FiniteDistribution::Key>(c.i) * dim_ + c.j, c.q);
    return FiniteDistribution(std::move(entries));
}

bool JointPair::p_absolutely_continuous() const {
    for (const auto& c : cells_)
        if (c.p > 0.0 && c.q == 0.0) return false;
    return true;
}

bool JointPair::p_equals_q(double tol) const {
    for (const auto& c : cells_)
        if (std::abs(c.p - c.q) > tol) return false;
    return true;
}

JointPair build_joint(const DensityState& rho, const DensityState& sigma) {
    const OverlapMatrix w(rho, sigma);
    const std::size_t n = w.dim();
    std::vector<JointCell> cells;
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = rho.eigenvalues()[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double wij = w(i, j);
            if (wij == 0.0) continue;
            cells.push_back(JointCell{i, j, wij, r * wij, sigma.eigenvalues()[j] * wij});
        }
    }
    return JointPair(n, std::move(cells));
}

PovmReport povm_check(const DensityState& rho, const DensityState& sigma) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("povm_check: states have different dimension");
    const std::size_t n = rho.dim();
    const CMat& u = rho.eigenvectors();
    const CMat& v = sigma.eigenvectors();

    // A_ij = <u_i|v_j> |u_i><v_j|, so A A^dagger = w_ij |u_i><u_i| and
    // A^dagger A = w_ij |v_j><v_j|. The sums are assembled as matrices and
    // compared against the identity entrywise; the measurement probabilities
    // tr rho A A^dagger and tr sigma A^dagger A are evaluated against the
    // reassembled operators, independently of the spectral shortcut p = r w.
    const CMat rho_mat = rho.to_matrix();
    const CMat sigma_mat = sigma.to_matrix();
    std::vector<double> u_rho_u(n), v_sigma_v(n);  // <u_i|rho|u_i>, <v_j|sigma|v_j>
    for (std::size_t k = 0; k < n; ++k) {
        cplx ru = 0.0, sv = 0.0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                ru += std::conj(u(a, k)) * rho_mat(a, b) * u(b, k);
                sv += std::conj(v(a, k)) * sigma_mat(a, b) * v(b, k);
            }
        u_rho_u[k] = ru.real();
        v_sigma_v[k] = sv.real();
    }

    CMat left(n, n), right(n, n);
    double p_res = 0.0, q_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx dot = 0.0;
            for (std::size_t k = 0; k < n; ++k) dot += std::conj(u(k, i)) * v(k, j);
            const double w = std::norm(dot);
            for (std::size_t a = 0; a < n; ++a) {
                const cplx ua = u(a, i) * w;
                const cplx va = v(a, j) * w;
                for (std::size_t b = 0; b < n; ++b) {
                    left(a, b) += ua * std::conj(u(b, i));
                    right(a, b) += va * std::conj(v(b, j));
                }
            }
            p_res = std::max(p_res, std::abs(w * u_rho_u[i] - rho.eigenvalues()[i] * w));
            q_res = std::max(q_res, std::abs(w * v_sigma_v[j] - sigma.eigenvalues()[j] * w));
        }
    }
    double cl = 0.0, cr = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const cplx id = a == b ? cplx{1.0} : cplx{};
            cl = std::max(cl, std::abs(left(a, b) - id));
            cr = std::max(cr, std::abs(right(a, b) - id));
        }
    return PovmReport{cl, cr, p_res, q_res};
}

bool support_included(const DensityState& rho, const DensityState& sigma, double tol) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("support_included: states have different dimension");
    const SupportProjector pr = support_projector(rho, tol);
    const SupportProjector ps = support_projector(sigma, tol);
    // ||(I - Pi_sigma) Pi_rho||_F: project each rho basis column out of the
    // sigma support and accumulate what is left.
    double residual_sq = 0.0;
    const std::size_t n = rho.dim();
    for (std::size_t k = 0; k < pr.rank; ++k) {
        std::vector<cplx> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = pr.basis(i, k);
        for (std::size_t m = 0; m < ps.rank; ++m) {
            cplx dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(ps.basis(i, m)) * col[i];
            for (std::size_t i = 0; i < n; ++i) col[i] -= dot * ps.basis(i, m);
        }
        for (std::size_t i = 0; i < n; ++i) residual_sq += std::norm(col[i]);
    }
    return std::sqrt(residual_sq) <= tol * static_cast<double>(n);
}

bool supports_orthogonal(const DensityState& rho, const DensityState& sigma, double tol) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("supports_orthogonal: states have different dimension");
    // tr Pi_rho sigma = sum over supported i of <u_i|sigma|u_i>.
    const OverlapMatrix w(rho, sigma);
    const double cutoff = kSupportTol * rho.max_eigenvalue();
    double mass = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        if (rho.eigenvalues()[i] <= cutoff) continue;
        for (std::size_t j = 0; j < sigma.dim(); ++j) mass += sigma.eigenvalues()[j] * w(i, j);
    }
    return mass <= tol;
}

}  // namespace petz
