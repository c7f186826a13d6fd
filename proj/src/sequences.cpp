#include "petz/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "petz/divergence.hpp"

namespace petz {

namespace {

constexpr std::uint64_t kTermCap = 10'000'000;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

SeqTerm SeqTerm::make(double coeff, double quad_base, double ratio, double poly, double logp,
                      std::uint64_t start) {
    if (!(coeff > 0.0) || !(quad_base > 0.0) || !(ratio > 0.0))
        throw Error("SeqTerm: coeff, quad_base and ratio must be positive");
    SeqTerm t;
    t.coeff = coeff;
    t.quad_base = quad_base;
    t.ratio = ratio;
    t.poly = poly;
    t.logp = logp;
    t.start = std::max<std::uint64_t>(start, logp != 0.0 ? 2 : 1);
    return t;
}

double SeqTerm::eval(std::uint64_t j) const {
    const double x = static_cast<double>(j);
    // Work in log space; the factors span hundreds of orders of magnitude.
    double lg = std::log(coeff) + x * x * std::log(quad_base) + x * std::log(ratio) +
                poly * std::log(x);
    if (logp != 0.0) lg += logp * std::log(std::log(x));
    return std::exp(lg);
}

SeqTerm SeqTerm::pow(double e) const {
    return make(std::pow(coeff, e), std::pow(quad_base, e), std::pow(ratio, e), poly * e,
                logp * e, start);
}

SeqTerm SeqTerm::operator*(const SeqTerm& rhs) const {
    return make(coeff * rhs.coeff, quad_base * rhs.quad_base, ratio * rhs.ratio,
                poly + rhs.poly, logp + rhs.logp, std::max(start, rhs.start));
}

SeqTerm SeqTerm::scaled(double c) const {
    if (!(c > 0.0)) throw Error("SeqTerm: scale must be positive");
    return make(coeff * c, quad_base, ratio, poly, logp, start);
}

std::string SeqTerm::describe() const {
    std::string s = fmt(coeff);
    if (quad_base != 1.0) s += " * " + fmt(quad_base) + "^(j^2)";
    if (ratio != 1.0) s += " * " + fmt(ratio) + "^j";
    if (poly != 0.0) s += " * j^" + fmt(poly);
    if (logp != 0.0) s += " * (log j)^" + fmt(logp);
    return s;
}

std::string ConvergenceCertificate::describe() const {
    std::string s = verdict == Verdict::Converges ? "converges" : "diverges";
    switch (rule) {
        case Rule::Geometric: s += " (geometric, g=" + fmt(g) + ")"; break;
        case Rule::QuadraticExponent: s += " (quadratic exponent, h=" + fmt(h) + ")"; break;
        case Rule::PSeries: s += " (p-series, p=" + fmt(p) + ")"; break;
        case Rule::LogPSeries: s += " (log-p-series, q=" + fmt(q) + ")"; break;
    }
    return s;
}

ConvergenceCertificate classify(const SeqTerm& t) {
    ConvergenceCertificate cert{Verdict::Converges, Rule::Geometric, t.quad_base, t.ratio,
                                t.poly, t.logp};
    if (t.quad_base != 1.0) {
        cert.rule = Rule::QuadraticExponent;
        cert.verdict = t.quad_base < 1.0 ? Verdict::Converges : Verdict::Diverges;
        return cert;
    }
    if (t.ratio != 1.0) {
        cert.rule = Rule::Geometric;
        cert.verdict = t.ratio < 1.0 ? Verdict::Converges : Verdict::Diverges;
        return cert;
    }
    if (t.poly != -1.0 || t.logp == 0.0) {
        cert.rule = Rule::PSeries;
        cert.verdict = t.poly < -1.0 ? Verdict::Converges : Verdict::Diverges;
        return cert;
    }
    cert.rule = Rule::LogPSeries;
    cert.verdict = t.logp < -1.0 ? Verdict::Converges : Verdict::Diverges;
    return cert;
}

bool term_limit_infinite(const SeqTerm& t) {
    if (t.quad_base != 1.0) return t.quad_base > 1.0;
    if (t.ratio != 1.0) return t.ratio > 1.0;
    if (t.poly != 0.0) return t.poly > 0.0;
    return t.logp > 0.0;
}

namespace {

// Upper bound on t(j+1)/t(j) for all j >= n, valid in the ratio regimes
// (quad_base <= 1). The polynomial and log factors can only inflate the ratio
// when their exponents are positive, and those inflations shrink with j.
double ratio_bound(const SeqTerm& t, std::uint64_t n) {
    const double x = static_cast<double>(n);
    double b = std::pow(t.quad_base, 2.0 * x + 1.0) * t.ratio;
    if (t.poly > 0.0) b *= std::pow((x + 1.0) / x, t.poly);
    if (t.logp > 0.0) b *= std::pow(std::log(x + 1.0) / std::log(x), t.logp);
    return b;
}

double derivative_abs(const SeqTerm& t, double m) {
    // |d/dx x^p (log x)^q| at m, slightly overestimated.
    const double f = t.eval(static_cast<std::uint64_t>(m));
    return f * (std::abs(t.poly) + std::abs(t.logp) / std::log(m) + 1.0) / m;
}

// Tail of a pure p-series term past m - 1: returns (estimate, certified
// uncertainty). The two closed-form regimes get an Euler-Maclaurin-corrected
// integral (sum_{k>=m} f(k) = int_m^inf f + f(m)/2 + R, |R| <= |f'(m)|/6 for
// decreasing convex f); other exponent combinations fall back to an integral
// sandwich with the log factor frozen at m.
std::pair<double, double> pseries_tail(const SeqTerm& t, double m) {
    if (t.logp == 0.0) {
        const double integral = t.coeff * std::pow(m, t.poly + 1.0) / (-t.poly - 1.0);
        return {integral + 0.5 * t.eval(static_cast<std::uint64_t>(m)),
                derivative_abs(t, m) / 6.0};
    }
    if (t.poly == -1.0) {
        const double integral =
            t.coeff * std::pow(std::log(m), t.logp + 1.0) / (-t.logp - 1.0);
        return {integral + 0.5 * t.eval(static_cast<std::uint64_t>(m)),
                derivative_abs(t, m) / 6.0};
    }
    double bound;
    if (t.logp < 0.0) {
        // (log x)^q decreasing: freeze it at m.
        bound = t.coeff * std::pow(std::log(m), t.logp) * std::pow(m, t.poly + 1.0) /
                (-t.poly - 1.0);
    } else {
        // (log x)^q <= (q/(e eps))^q x^eps with eps = (-p-1)/2.
        const double eps = 0.5 * (-t.poly - 1.0);
        const double c = std::pow(t.logp / (std::numbers::e * eps), t.logp);
        bound = t.coeff * c * std::pow(m, t.poly + eps + 1.0) / (-t.poly - eps - 1.0);
    }
    return {0.5 * bound, 0.5 * bound};
}

}  // namespace

CertifiedSum certified_sum(const SeqTerm& t, double rel_tol) {
    const ConvergenceCertificate cert = classify(t);
    if (cert.verdict == Verdict::Diverges)
        throw DivergentSeriesError("certified_sum: series diverges, " + cert.describe());

    const bool ratio_regime = t.quad_base < 1.0 || t.ratio < 1.0;
    double sum = 0.0, comp = 0.0;  // Kahan accumulator
    for (std::uint64_t j = t.start; j < t.start + kTermCap; ++j) {
        const double term = t.eval(j);
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;

        if (ratio_regime) {
            const double beta = ratio_bound(t, j + 1);
            if (beta < 1.0) {
                const double tail = t.eval(j + 1) / (1.0 - beta);
                if (tail <= rel_tol * sum) return CertifiedSum{sum, tail, j - t.start + 1};
            }
        } else if (j >= t.start + 8 && j >= 16) {
            const auto [estimate, uncertainty] = pseries_tail(t, static_cast<double>(j + 1));
            if (uncertainty <= rel_tol * (sum + estimate))
                return CertifiedSum{sum + estimate, uncertainty, j - t.start + 1};
        }
    }
    throw SummationCapError("certified_sum: bound not met within 10^7 terms");
}

ComboResult combo_sum(const TermCombo& combo, double rel_tol) {
    // A divergent part with positive weight forces +inf provided every
    // negatively weighted part stays finite.
    std::optional<ConvergenceCertificate> divergent;
    for (const auto& [weight, term] : combo.parts) {
        const ConvergenceCertificate c = classify(term);
        if (c.verdict == Verdict::Diverges) {
            if (weight < 0.0)
                throw Error(
                    "combo_sum: negatively weighted divergent part, sum is not certifiable");
            if (weight > 0.0 && !divergent) divergent = c;
        }
    }
    if (divergent)
        return ComboResult{ExtendedReal::plus_inf(InfReason::DivergentSum), divergent};
    double total = 0.0;
    for (const auto& [weight, term] : combo.parts) {
        if (weight == 0.0) continue;
        total += weight * certified_sum(term, rel_tol).value;
    }
    return ComboResult{ExtendedReal::finite(total), std::nullopt};
}

SequencePair::SequencePair(Kind k, SeqTerm first, SeqTerm s)
    : kind_(k), first_(first), s_(s) {
    start_ = std::max(first_.start, s_.start);
    first_.start = start_;
    s_.start = start_;
    // Normalization constants enter every downstream value, so they are
    // certified well past the 1e-12 contract.
    first_norm_ = certified_sum(first_, 1e-15).value;
    s_norm_ = certified_sum(s_, 1e-15).value;
}

SequencePair SequencePair::diagonal(SeqTerm r, SeqTerm s) {
    return SequencePair(Kind::Diagonal, r, s);
}

SequencePair SequencePair::rank_one_vs_diagonal(SeqTerm overlap, SeqTerm s) {
    return SequencePair(Kind::RankOneVsDiagonal, overlap, s);
}

double SequencePair::first_at(std::uint64_t j) const { return first_.eval(j) / first_norm_; }
double SequencePair::s_at(std::uint64_t j) const { return s_.eval(j) / s_norm_; }

namespace {

// Decomposes log(t_j) = log(coeff) + j^2 log h + j log g + p log j + q loglog j
// into polynomial pieces; the loglog piece is unsupported here and rejected.
struct LogExpansion {
    double constant;
    double linear;     // coefficient of j
    double quadratic;  // coefficient of j^2
    double log_j;      // coefficient of log j
};

LogExpansion log_of_term(const SeqTerm& t) {
    if (t.logp != 0.0)
        throw Error("log_of_term: (log j)^q factor would need a loglog piece");
    return LogExpansion{std::log(t.coeff), std::log(t.ratio), std::log(t.quad_base), t.poly};
}

// sum_j base_j * (c0 + c1 j + c2 j^2 + cl log j) as a signed term combination.
TermCombo expand_against(const SeqTerm& base, const LogExpansion& e) {
    TermCombo combo;
    auto push = [&](double weight, double poly_shift, double logp_shift) {
        if (weight == 0.0) return;
        SeqTerm t = base;
        t.poly += poly_shift;
        t.logp += logp_shift;
        if (t.logp != 0.0) t.start = std::max<std::uint64_t>(t.start, 2);
        combo.parts.emplace_back(weight, t);
    };
    push(e.constant, 0.0, 0.0);
    push(e.linear, 1.0, 0.0);
    push(e.quadratic, 2.0, 0.0);
    push(e.log_j, 0.0, 1.0);
    return combo;
}

SeqDivergence interior_value(const SequencePair& pair, double alpha) {
    SeqTerm summand = [&] {
        if (pair.kind() == SequencePair::Kind::Diagonal) {
            // (r_j / R)^a (s_j / S)^(1-a)
            return pair.first_term().pow(alpha).scaled(std::pow(pair.first_norm(), -alpha)) *
                   pair.s_term().pow(1.0 - alpha).scaled(std::pow(pair.s_norm(), alpha - 1.0));
        }
        // w_j / W * (s_j / S)^(1-a)
        return pair.first_term().scaled(1.0 / pair.first_norm()) *
               pair.s_term().pow(1.0 - alpha).scaled(std::pow(pair.s_norm(), alpha - 1.0));
    }();

    if (alpha > 1.0) {
        // Domain condition sum_j (s_j/S)^(2(1-a)) w_j for the rank-one pair;
        // diagonal pairs satisfy it per index automatically.
        if (pair.kind() == SequencePair::Kind::RankOneVsDiagonal) {
            const SeqTerm domain =
                pair.s_term().pow(2.0 * (1.0 - alpha)) *
                pair.first_term().scaled(std::pow(pair.s_norm(), 2.0 * (alpha - 1.0)) /
                                         pair.first_norm());
            const ConvergenceCertificate c = classify(domain);
            if (c.verdict == Verdict::Diverges)
                return SeqDivergence{ExtendedReal::plus_inf(InfReason::DivergentSum), c,
                                     DivergentPart::DomainCondition};
        }
    }

    const ConvergenceCertificate cert = classify(summand);
    if (cert.verdict == Verdict::Diverges)
        return SeqDivergence{ExtendedReal::plus_inf(InfReason::DivergentSum), cert,
                             DivergentPart::MainSum};
    const CertifiedSum s = certified_sum(summand);
    return SeqDivergence{ExtendedReal::finite(std::log(s.value) / (alpha - 1.0)), cert,
                         std::nullopt};
}

SeqDivergence order_one_value(const SequencePair& pair) {
    if (pair.kind() == SequencePair::Kind::Diagonal) {
        // sum (r_j/R) log((r_j/R) / (s_j/S)): expand the log ratio against the
        // normalized r term.
        const SeqTerm base = pair.first_term().scaled(1.0 / pair.first_norm());
        LogExpansion ratio = log_of_term(pair.first_term());
        const LogExpansion s_exp = log_of_term(pair.s_term());
        ratio.constant += std::log(pair.s_norm()) - std::log(pair.first_norm()) - s_exp.constant;
        ratio.linear -= s_exp.linear;
        ratio.quadratic -= s_exp.quadratic;
        ratio.log_j -= s_exp.log_j;
        const ComboResult res = combo_sum(expand_against(base, ratio));
        if (res.value.is_plus_inf())
            return SeqDivergence{res.value, res.divergence, DivergentPart::MainSum};
        return SeqDivergence{res.value, std::nullopt, std::nullopt};
    }
    // Rank-one: sum (w_j/W) log(1/(s_j/S)) -- the overlap cancels inside the log.
    const SeqTerm base = pair.first_term().scaled(1.0 / pair.first_norm());
    const LogExpansion s_exp = log_of_term(pair.s_term());
    const LogExpansion neg{std::log(pair.s_norm()) - s_exp.constant, -s_exp.linear,
                           -s_exp.quadratic, -s_exp.log_j};
    const ComboResult res = combo_sum(expand_against(base, neg));
    if (res.value.is_plus_inf())
        return SeqDivergence{res.value, res.divergence, DivergentPart::MainSum};
    return SeqDivergence{res.value, std::nullopt, std::nullopt};
}

SeqDivergence order_zero_value(const SequencePair& pair) {
    // Every index carries positive r (or w) mass, so Q({p > 0}) is the full
    // s mass, 1, for diagonal pairs and sum_j (s_j/S)(w_j/W)... no: for the
    // rank-one pair the P support is the row i = 1, and its Q mass is
    // sum_j (s_j/S) w_j/W * W = sum over the populated cells only.
    if (pair.kind() == SequencePair::Kind::Diagonal)
        return SeqDivergence{ExtendedReal::finite(0.0), std::nullopt, std::nullopt};
    const SeqTerm cell_mass = pair.s_term() * pair.first_term();
    const double mass =
        certified_sum(cell_mass).value / (pair.s_norm() * pair.first_norm());
    return SeqDivergence{ExtendedReal::finite(-std::log(mass)), std::nullopt, std::nullopt};
}

SeqDivergence order_infinity_value(const SequencePair& pair) {
    // sup over the populated cells of p/q: r_j/s_j (diagonal) or 1/s_j
    // (rank-one). The ratio is itself a closed-form term.
    SeqTerm ratio = [&] {
        if (pair.kind() == SequencePair::Kind::Diagonal)
            return pair.first_term().scaled(pair.s_norm() / pair.first_norm()) *
                   pair.s_term().pow(-1.0);
        return pair.s_term().pow(-1.0).scaled(pair.s_norm());
    }();
    if (term_limit_infinite(ratio)) {
        const ConvergenceCertificate cert = classify(ratio);
        return SeqDivergence{ExtendedReal::plus_inf(InfReason::DivergentSum), cert,
                             DivergentPart::MainSum};
    }
    double sup = 0.0;
    for (std::uint64_t j = ratio.start; j < ratio.start + 100'000; ++j)
        sup = std::max(sup, ratio.eval(j));
    return SeqDivergence{ExtendedReal::finite(std::log(sup)), std::nullopt, std::nullopt};
}

}  // namespace

SeqDivergence seq_divergence(const SequencePair& pair, const AlphaOrder& a) {
    switch (a.kind()) {
        case AlphaOrder::Kind::Zero: return order_zero_value(pair);
        case AlphaOrder::Kind::One: return order_one_value(pair);
        case AlphaOrder::Kind::Infinity: return order_infinity_value(pair);
        case AlphaOrder::Kind::Interior: return interior_value(pair, a.alpha());
    }
    throw Error("seq_divergence: unreachable");
}

SequencePair counterexample_pair() {
    // s_j = 2^-j (already normalized), squared overlaps proportional to 1/j^2.
    return SequencePair::rank_one_vs_diagonal(SeqTerm::make(1.0, 1.0, 1.0, -2.0, 0.0),
                                              SeqTerm::make(1.0, 1.0, 0.5, 0.0, 0.0));
}

EntropyDivergenceReport infty_minus_infty_state() {
    EntropyDivergenceReport report;
    const SeqTerm raw = SeqTerm::make(1.0, 1.0, 1.0, -1.0, -2.0);  // 1/(j (log j)^2), j >= 2
    const CertifiedSum norm = certified_sum(raw);
    report.state_term = raw.scaled(1.0 / norm.value);
    report.normalization = classify(raw);
    report.log_sn = std::log(norm.value);
    if (report.log_sn <= 0.0)
        throw Error("infty_minus_infty_state: normalization bound violated");

    // Entropy term r_j (-log r_j) with -log r_j = log Sn + log j + 2 loglog j.
    // Every piece is nonnegative from j = 3 on, so r_j log j is a certified
    // lower bound and its divergence settles the entropy series.
    report.entropy_witness = report.state_term * SeqTerm::make(1.0, 1.0, 1.0, 0.0, 1.0);
    report.entropy_certificate = classify(report.entropy_witness);
    if (report.entropy_certificate.verdict != Verdict::Diverges)
        throw Error("infty_minus_infty_state: witness certificate inconsistent");

    double sum = 0.0;
    std::uint64_t next_sample = 10;
    for (std::uint64_t j = 2; j <= 1'000'000; ++j) {
        const double r = report.state_term.eval(j);
        sum += -r * std::log(r);
        if (j == next_sample) {
            report.partial_sums.emplace_back(j, sum);
            next_sample *= 10;
        }
    }
    return report;
}

double EntropyDivergenceReport::predicted_log_n(double m) const {
    // Lower bound: sum_{j=3..N} r_j log j >= (1/Sn) (loglog(N+1) - loglog 3),
    // so log N = exp(Sn * m + loglog 3) guarantees the partial sum exceeds m.
    const double sn = std::exp(log_sn);
    return std::exp(sn * m + std::log(std::log(3.0)));
}

std::pair<DensityState, DensityState> truncate_to_density(const SequencePair& pair,
                                                          std::size_t n) {
    if (n < 2) throw Error("truncate_to_density: need at least 2 levels");
    const std::uint64_t start = pair.start();

    std::vector<double> s_vals(n);
    double s_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        s_vals[k] = pair.s_term().eval(start + k);
        s_sum += s_vals[k];
    }
    for (double& v : s_vals) v /= s_sum;
    const DensityState sigma(std::move(s_vals), CMat::identity(n));

    if (pair.kind() == SequencePair::Kind::Diagonal) {
        std::vector<double> r_vals(n);
        double r_sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            r_vals[k] = pair.first_term().eval(start + k);
            r_sum += r_vals[k];
        }
        for (double& v : r_vals) v /= r_sum;
        return {DensityState(std::move(r_vals), CMat::identity(n)), sigma};
    }

    // Rank one: u = sum_j sqrt(w_j) |v_j>, renormalized over the truncation,
    // completed to an orthonormal basis by Gram-Schmidt over the standard one.
    std::vector<double> amps(n);
    double w_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = pair.first_term().eval(start + k);
        amps[k] = std::sqrt(w);
        w_sum += w;
    }
    const double scale = 1.0 / std::sqrt(w_sum);
    CMat basis(n, n);
    for (std::size_t k = 0; k < n; ++k) basis(k, 0) = amps[k] * scale;
    std::size_t col = 1;
    for (std::size_t e = 0; e < n && col < n; ++e) {
        std::vector<cplx> v(n);
        v[e] = 1.0;
        for (std::size_t m = 0; m < col; ++m) {
            cplx dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(basis(i, m)) * v[i];
            for (std::size_t i = 0; i < n; ++i) v[i] -= dot * basis(i, m);
        }
        double nrm = 0.0;
        for (const cplx& x : v) nrm += std::norm(x);
        if (nrm < 1e-12) continue;
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < n; ++i) basis(i, col) = v[i] / nrm;
        ++col;
    }
    std::vector<double> r_vals(n, 0.0);
    r_vals[0] = 1.0;
    return {DensityState(std::move(r_vals), std::move(basis)), sigma};
}

}  // namespace petz
