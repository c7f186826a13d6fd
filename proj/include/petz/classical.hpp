#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "petz/extended_real.hpp"

namespace petz {

// A finitely supported probability distribution over opaque orderable keys.
// Zero-weight keys are dropped at construction, so the divergence conventions
// below apply only at genuine support mismatches.
class FiniteDistribution {
  public:
    using Key = std::uint64_t;

    explicit FiniteDistribution(std::vector<std::pair<Key, double>> weights);
    static FiniteDistribution from_weights(const std::vector<double>& w);

    // Sorted by key, weights > 0.
    const std::vector<std::pair<Key, double>>& entries() const { return entries_; }

  private:
    std::vector<std::pair<Key, double>> entries_;
};

// Renyi divergence D_a(P||Q) over a common key universe (missing keys carry
// weight zero), natural log. Conventions:
//   interior a < 1 : sum of p^a q^(1-a) with 0 * inf = 0; +inf only for P _|_ Q
//   interior a > 1 : +inf as soon as some key has p > 0, q = 0
//   Zero           : -log Q({p > 0})
//   One            : Kullback-Leibler with 0 log(0/q) = 0 and p log(p/0) = inf
//   Infinity       : log sup p/q with 0/0 = 0 and x/0 = inf
ExtendedReal renyi(const FiniteDistribution& p, const FiniteDistribution& q, const AlphaOrder& a);

// Kullback-Leibler divergence, the order-One member kept as its own entry
// point so the a->1 limit can be tested against an independent formula.
ExtendedReal kl(const FiniteDistribution& p, const FiniteDistribution& q);

// sum |p - q|, in [0, 2].
double total_variation(const FiniteDistribution& p, const FiniteDistribution& q);

// D_a(P||Q) - (a/2) V(P,Q)^2 for a in (0,1]; nonnegative up to 1e-12.
ExtendedReal pinsker_gap(const FiniteDistribution& p, const FiniteDistribution& q, double a);

// |D_a(P||Q) - (a/(1-a)) D_(1-a)(Q||P)| for a in (0,1); nullopt when either
// side is infinite.
std::optional<double> skew_symmetry_residual(const FiniteDistribution& p,
                                             const FiniteDistribution& q, double a);

}  // namespace petz
