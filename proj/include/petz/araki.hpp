#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "petz/sequences.hpp"

namespace petz {

// Spectral data of the relative modular operator for the rank-one-versus-
// geometric pair: eigenvalues 2^j with weights c/j^2 (c = 6/pi^2), plus the
// kernel carrying the remaining mass.
struct ModularSpectrum {
    std::vector<std::pair<double, double>> atoms;  // (2^j, c/j^2), j = 1..N
    double kernel_mass;                            // 1 - sum of weights
    double c;                                      // 6/pi^2
};

ModularSpectrum modular_spectrum(std::size_t n);

// Partial sums of the spectral-integral entropy, sum_{j<=N} log(2^j) * c/j^2
// = c log2 H_N. Monotone increasing and unbounded.
double araki_partial_sum(std::size_t n);

// First N at which the partial sum exceeds the threshold.
std::size_t araki_threshold(double threshold);

struct ArakiReport {
    std::vector<std::pair<std::size_t, double>> partial_sums;  // sampled (N, sum)
    ConvergenceCertificate verdict;                            // Diverges (harmonic)
    std::size_t threshold_n;                                   // first N with sum > threshold
    double threshold;
};

ArakiReport araki_report(double threshold = 5.0);

// The degenerate information-theoretic value for the same pair: exactly 0,
// carried together with the divergent domain series (constant terms c) that
// certifies the operator is not densely defined.
struct ItValueReport {
    ExtendedReal value;                      // Finite(0)
    InfReason degenerate_reason;             // DomainViolation
    SeqTerm domain_series_term;              // constant term c
    ConvergenceCertificate domain_certificate;  // Diverges
    bool mismatch_with_spectral_integral;    // true: 0 != diverging partial sums
};

ItValueReport it_relative_entropy_value();

// Max residual over j <= N between the KL terms of the reduced pair,
// p_1j log(p_1j / q_1j), and the spectral-integral terms log(2^j) * c/j^2.
double kl_term_compare(std::size_t n);

}  // namespace petz
