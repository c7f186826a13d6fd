#include "petz/random_states.hpp"

#include <algorithm>
#include <cmath>

namespace petz {

namespace {

void orthonormalize_column(CMat& m, std::size_t col) {
    const std::size_t n = m.rows();
    // Two Gram-Schmidt passes keep the Gram residual at working precision.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t prev = 0; prev < col; ++prev) {
            cplx dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(m(i, prev)) * m(i, col);
            for (std::size_t i = 0; i < n; ++i) m(i, col) -= dot * m(i, prev);
        }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, col));
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw Error("random_unitary: degenerate draw");
    for (std::size_t i = 0; i < n; ++i) m(i, col) /= norm;
}

}  // namespace

CMat random_unitary(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = cplx(gauss(rng), gauss(rng));
    for (std::size_t col = 0; col < dim; ++col) orthonormalize_column(m, col);
    return m;
}

DensityState random_density(std::mt19937_64& rng, std::size_t dim,
                            const StateGenOptions& opts) {
    if (opts.kernel_dim >= dim) throw Error("random_density: kernel would swallow the state");
    std::exponential_distribution<double> expo(1.0);

    const std::size_t support = dim - opts.kernel_dim;
    std::vector<double> values(dim, 0.0);
    for (std::size_t k = 0; k < support; ++k) values[k] = expo(rng) + 1e-6;
    if (opts.degeneracy >= 2) {
        const std::size_t width = std::min(opts.degeneracy, support);
        for (std::size_t k = 1; k < width; ++k) values[k] = values[0];
    }
    double sum = 0.0;
    for (double v : values) sum += v;
    for (double& v : values) v /= sum;

    return DensityState(std::move(values), random_unitary(rng, dim));
}

DensityState remix_degenerate_basis(std::mt19937_64& rng, const DensityState& s) {
    const std::size_t n = s.dim();
    CMat basis = s.eigenvectors();
    const auto& vals = s.eigenvalues();

    std::size_t k = 0;
    while (k < n) {
        std::size_t end = k + 1;
        while (end < n && vals[end] == vals[k]) ++end;
        const std::size_t width = end - k;
        if (width >= 2) {
            const CMat u = random_unitary(rng, width);
            CMat mixed(n, width);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t b = 0; b < width; ++b) {
                    cplx acc = 0.0;
                    for (std::size_t a = 0; a < width; ++a) acc += basis(i, k + a) * u(a, b);
                    mixed(i, b) = acc;
                }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t b = 0; b < width; ++b) basis(i, k + b) = mixed(i, b);
        }
        k = end;
    }
    return DensityState(std::vector<double>(vals), std::move(basis));
}

}  // namespace petz
