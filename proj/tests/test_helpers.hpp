#pragma once

#include <vector>

#include "petz/spectral.hpp"

namespace petz::test {

// diag(d_1, ..., d_n) as a matrix.
inline CMat diag(const std::vector<double>& d) {
    CMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

// Density state with the given spectrum in the standard basis.
inline DensityState diag_state(const std::vector<double>& d) {
    return DensityState(std::vector<double>(d), CMat::identity(d.size()));
}

// Density state with the given spectrum in the Hadamard-rotated basis
// (columns (1,1)/sqrt2 and (1,-1)/sqrt2).
inline DensityState hadamard_state(double a, double b) {
    CMat v(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    v(0, 0) = r;
    v(1, 0) = r;
    v(0, 1) = r;
    v(1, 1) = -r;
    return DensityState({a, b}, std::move(v));
}

}  // namespace petz::test
