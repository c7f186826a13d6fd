#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "petz/extended_real.hpp"
#include "petz/spectral.hpp"

namespace petz {

// Closed-form series term t_j = coeff * quad_base^(j^2) * ratio^j * j^poly *
// (log j)^logp, for j >= start. This family is closed under pointwise
// products and real powers (exponents add), so series arising from eigenvalue
// sequences of the built-in infinite-dimensional states can be classified
// exactly. Terms start at j = 2 whenever logp != 0 (log 1 = 0 degeneracy).
struct SeqTerm {
    double coeff = 1.0;      // > 0
    double quad_base = 1.0;  // h in h^(j^2)
    double ratio = 1.0;      // g in g^j
    double poly = 0.0;       // p in j^p
    double logp = 0.0;       // q in (log j)^q
    std::uint64_t start = 1;

    static SeqTerm make(double coeff, double quad_base, double ratio, double poly, double logp,
                        std::uint64_t start = 1);

    double eval(std::uint64_t j) const;
    SeqTerm pow(double e) const;
    SeqTerm operator*(const SeqTerm& rhs) const;
    SeqTerm scaled(double c) const;  // c > 0

    std::string describe() const;
};

enum class Verdict : std::uint8_t { Converges, Diverges };
enum class Rule : std::uint8_t { Geometric, QuadraticExponent, PSeries, LogPSeries };

// Exact verdict for sum_j t_j. Decision ladder: the quadratic-exponent factor
// dominates when h != 1, then the geometric ratio, then the polynomial power,
// then the log power (boundary p = -1, q = -1).
struct ConvergenceCertificate {
    Verdict verdict;
    Rule rule;
    double h, g, p, q;  // the parameters the rule was decided on

    std::string describe() const;
};

ConvergenceCertificate classify(const SeqTerm& t);

// True when t_j -> infinity as j grows (used for symbolic sup evaluation).
bool term_limit_infinite(const SeqTerm& t);

struct CertifiedSum {
    double value;
    double tail_bound;  // |true sum - value| <= tail_bound
    std::uint64_t terms_used;
};

// Sums a convergent term with a certified remainder: ratio-based geometric
// tail for h < 1 or g < 1, Euler-Maclaurin-corrected integral tail for the
// p-series and log-p-series regimes. Throws DivergentSeriesError on divergent
// input and SummationCapError if the bound is not met within 10^7 terms.
CertifiedSum certified_sum(const SeqTerm& t, double rel_tol = 1e-12);

// Signed linear combination of terms, for Kullback-Leibler style series whose
// log factor expands into polynomial pieces. The certified value exists when
// every part converges; the combination is certified divergent (+inf) when
// some part diverges and every divergent part enters with positive weight.
struct TermCombo {
    std::vector<std::pair<double, SeqTerm>> parts;  // (signed weight, term)
};

struct ComboResult {
    ExtendedReal value;
    std::optional<ConvergenceCertificate> divergence;  // set when value = +inf
};

ComboResult combo_sum(const TermCombo& combo, double rel_tol = 1e-12);

// A pair of states on an infinite-dimensional space given by closed-form
// spectral sequences. Diagonal: rho and sigma share the eigenbasis, with
// eigenvalue terms r and s. RankOneVsDiagonal: rho = |u><u| with squared
// overlaps |<u|v_j>|^2 given by the overlap term, sigma diagonal with term s.
// Normalization constants are computed with certified tails (<= 1e-12
// relative).
class SequencePair {
  public:
    enum class Kind : std::uint8_t { Diagonal, RankOneVsDiagonal };

    static SequencePair diagonal(SeqTerm r, SeqTerm s);
    static SequencePair rank_one_vs_diagonal(SeqTerm overlap, SeqTerm s);

    Kind kind() const { return kind_; }
    // Normalized leading term (r or overlap, depending on kind).
    const SeqTerm& first_term() const { return first_; }
    const SeqTerm& s_term() const { return s_; }
    double first_norm() const { return first_norm_; }
    double s_norm() const { return s_norm_; }
    std::uint64_t start() const { return start_; }

    // j-th eigenvalue of rho (Diagonal) or j-th squared overlap (RankOne),
    // already normalized.
    double first_at(std::uint64_t j) const;
    double s_at(std::uint64_t j) const;

  private:
    SequencePair(Kind k, SeqTerm first, SeqTerm s);
    Kind kind_;
    SeqTerm first_, s_;
    double first_norm_, s_norm_;
    std::uint64_t start_;
};

// Which series decided a divergent value.
enum class DivergentPart : std::uint8_t { MainSum, DomainCondition };

struct SeqDivergence {
    ExtendedReal value;
    std::optional<ConvergenceCertificate> certificate;
    std::optional<DivergentPart> divergent_part;
};

// D_a of a sequence pair, evaluated symbolically: the summand of
// sum r^a s^(1-a) (Diagonal) or sum w s^(1-a) (RankOne) is formed in closed
// form, classified, and certified-summed; order One uses the expanded KL
// combination; order Infinity the symbolic sup.
SeqDivergence seq_divergence(const SequencePair& pair, const AlphaOrder& a);

// The rank-one-versus-geometric pair with s_j = 2^-j and squared overlaps
// proportional to 1/j^2.
SequencePair counterexample_pair();

// The state with eigenvalues proportional to 1/(i (log i)^2), whose entropy
// series diverges while the eigenvalue series converges.
struct EntropyDivergenceReport {
    SeqTerm state_term;                         // normalized eigenvalue term
    ConvergenceCertificate normalization;       // Converges(LogPSeries)
    SeqTerm entropy_witness;                    // divergent lower bound r_j log j
    ConvergenceCertificate entropy_certificate; // Diverges(LogPSeries)
    double log_sn;                              // log of the normalization constant (> 0)
    // Partial entropy sums at sampled N, strictly increasing.
    std::vector<std::pair<std::uint64_t, double>> partial_sums;
    // log N(M) such that the partial entropy sum provably exceeds M at N(M).
    double predicted_log_n(double m) const;
};

EntropyDivergenceReport infty_minus_infty_state();

// N-dimensional renormalized truncation of a sequence pair.
std::pair<DensityState, DensityState> truncate_to_density(const SequencePair& pair,
                                                          std::size_t n);

// Registry of the built-in examples.
std::vector<std::string> example_names();
bool is_known_example(const std::string& name);

// One line of an expected-versus-computed report.
struct ExampleLine {
    std::string label;
    std::string expected;
    std::string computed;
    bool pass;
};
struct ExampleReport {
    std::string name;
    std::vector<ExampleLine> lines;
    bool all_pass() const;
};

// Runs the named example end to end. Throws UnknownExampleError.
ExampleReport run_example(const std::string& name);

}  // namespace petz
