#pragma once

#include <random>

#include "petz/spectral.hpp"

namespace petz {

// Haar-like random unitary: complex Gaussian matrix orthonormalized column by
// column (Gram-Schmidt with re-orthogonalization).
CMat random_unitary(std::mt19937_64& rng, std::size_t dim);

struct StateGenOptions {
    // Number of eigenvalues forced to exactly zero (rank deficiency).
    std::size_t kernel_dim = 0;
    // Force an eigenvalue of this multiplicity (degenerate spectrum).
    std::size_t degeneracy = 0;
};

// Random density state: Dirichlet(1,..,1) spectrum in a Haar-like random
// eigenbasis, with optional exact rank deficiency and degeneracy.
DensityState random_density(std::mt19937_64& rng, std::size_t dim,
                            const StateGenOptions& opts = {});

// The same spectrum re-expressed after mixing the basis inside each
// degenerate eigenvalue cluster by a random unitary (the state is unchanged
// as an operator).
DensityState remix_degenerate_basis(std::mt19937_64& rng, const DensityState& s);

}  // namespace petz
