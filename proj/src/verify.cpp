#include "petz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "petz/classical.hpp"

namespace petz {

namespace {

std::string spectra_line(const DensityState& rho, const DensityState& sigma) {
    std::ostringstream out;
    out << "rho spectrum:";
    for (double v : rho.eigenvalues()) out << ' ' << v;
    out << " | sigma spectrum:";
    for (double v : sigma.eigenvalues()) out << ' ' << v;
    return out.str();
}

class Check {
  public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    // residual must stay <= bound; anything above is a violation.
    void expect_le(double residual, double bound, const DensityState& rho,
                   const DensityState& sigma) {
        ++result_.evaluations;
        result_.worst = std::max(result_.worst, residual);
        if (!(residual <= bound)) record(rho, sigma);
    }
    void expect_true(bool ok, const DensityState& rho, const DensityState& sigma) {
        ++result_.evaluations;
        if (!ok) record(rho, sigma);
    }

    CheckResult take() { return std::move(result_); }

  private:
    void record(const DensityState& rho, const DensityState& sigma) {
        ++result_.violations;
        if (result_.reproduction.empty()) result_.reproduction = spectra_line(rho, sigma);
    }
    CheckResult result_;
};

double diff(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.is_finite() && b.is_finite()) return std::abs(a.value() - b.value());
    if (a.kind() == b.kind()) return 0.0;
    return std::numeric_limits<double>::infinity();
}

const std::vector<AlphaOrder>& standard_grid() {
    static const std::vector<AlphaOrder> grid = [] {
        std::vector<AlphaOrder> g;
        g.push_back(AlphaOrder::zero());
        for (double a : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9})
            g.push_back(AlphaOrder::interior(a));
        g.push_back(AlphaOrder::one());
        for (double a : {1.5, 2.0, 4.0}) g.push_back(AlphaOrder::interior(a));
        g.push_back(AlphaOrder::infinity());
        return g;
    }();
    return grid;
}

struct Suite {
    explicit Suite(const VerifyOptions& opts) : opts_(opts), rng_(opts.seed) {}

    VerifyReport run();

  private:
    struct Pair {
        DensityState rho, sigma;
    };

    Pair draw_pair(std::size_t trial) {
        (void)trial;
        const std::size_t dim =
            opts_.dim <= 2 ? opts_.dim : 2 + rng_() % (opts_.dim - 1);
        StateGenOptions r_opts, s_opts;
        // A quarter of the draws are rank-deficient per side, so support
        // violations and the support-extreme equivalences get exercised.
        if (dim >= 2 && rng_() % 4 == 0) r_opts.kernel_dim = 1 + rng_() % (dim - 1);
        if (dim >= 2 && rng_() % 4 == 0) s_opts.kernel_dim = 1 + rng_() % (dim - 1);
        if (dim >= 3 && rng_() % 5 == 0) s_opts.degeneracy = 3;

        DensityState rho = random_density(rng_, dim, r_opts);
        if (rng_() % 6 == 0) {
            // Shared eigenbasis: exact zero overlaps, including orthogonal
            // supports when the kernels complement each other.
            DensityState sigma_raw = random_density(rng_, dim, s_opts);
            DensityState sigma(std::vector<double>(sigma_raw.eigenvalues()),
                               CMat(rho.eigenvectors()));
            return Pair{std::move(rho), std::move(sigma)};
        }
        return Pair{std::move(rho), random_density(rng_, dim, s_opts)};
    }

    void check_spectral(const Pair& pr);
    void check_classical(const Pair& pr);
    void check_reduction(const Pair& pr);
    void check_quantum(const Pair& pr);
    void check_equal_pair(std::size_t trial);

    const VerifyOptions& opts_;
    std::mt19937_64 rng_;
    std::map<std::string, Check> checks_;

    Check& at(const std::string& name) {
        auto it = checks_.find(name);
        if (it == checks_.end()) it = checks_.emplace(name, Check(name)).first;
        return it->second;
    }
};

void Suite::check_spectral(const Pair& pr) {
    const DensityState& rho = pr.rho;
    const DensityState& sigma = pr.sigma;
    const std::size_t n = rho.dim();

    // Eigendecomposition round trip through a fresh Hermitian draw.
    {
        std::normal_distribution<double> gauss(0.0, 1.0);
        CMat h(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            h(i, i) = gauss(rng_);
            for (std::size_t j = i + 1; j < n; ++j) {
                h(i, j) = cplx(gauss(rng_), gauss(rng_));
                h(j, i) = std::conj(h(i, j));
            }
        }
        const HermitianMatrix hm(h);
        const EigResult eig = eig_hermitian(hm);
        CMat rebuilt(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                const cplx vi = eig.eigenvectors(i, k) * eig.eigenvalues[k];
                for (std::size_t j = 0; j < n; ++j)
                    rebuilt(i, j) += vi * std::conj(eig.eigenvectors(j, k));
            }
        at("spectral: eigendecomposition round-trip")
            .expect_le((rebuilt - h).frobenius_norm(), 1e-10 * std::max(h.frobenius_norm(), 1.0),
                       rho, sigma);
    }

    // Hilbert-Schmidt distance: overlap double sum versus entrywise trace.
    {
        const CMat d = rho.to_matrix() - sigma.to_matrix();
        const double entrywise = (d * d).trace().real();
        at("spectral: hs distance, double sum vs entrywise trace")
            .expect_le(std::abs(hs_norm_sq_diff(rho, sigma) - entrywise), 1e-10, rho, sigma);
    }

    // Power additivity on the support.
    {
        const double exps[] = {0.3, 0.5, 1.0, 2.0};
        double worst = 0.0;
        for (double a : exps)
            for (double b : exps) {
                const CMat lhs = matrix_power(rho, a, true) * matrix_power(rho, b, true);
                const CMat rhs = matrix_power(rho, a + b, true);
                worst = std::max(worst, (lhs - rhs).frobenius_norm());
            }
        at("spectral: matrix power additivity").expect_le(worst, 1e-9, rho, sigma);
    }
}

void Suite::check_classical(const Pair& pr) {
    const JointPair joint = build_joint(pr.rho, pr.sigma);
    const FiniteDistribution p = joint.p_distribution();
    const FiniteDistribution q = joint.q_distribution();

    // Monotone in the order, with 1e-10 slack.
    {
        double prev = -std::numeric_limits<double>::infinity();
        double worst = 0.0;
        for (const AlphaOrder& a : standard_grid()) {
            const double v = renyi(p, q, a).as_double();
            if (v < prev - 1e-10)
                worst = std::max(worst, std::isfinite(prev - v) ? prev - v : 1.0);
            prev = std::max(prev, v);
        }
        at("classical: monotone in the order").expect_le(worst, 1e-10, pr.rho, pr.sigma);
    }

    // KL is the left limit at order one.
    {
        const ExtendedReal lim = renyi(p, q, AlphaOrder::interior(1.0 - 1e-6));
        const ExtendedReal exact = kl(p, q);
        if (exact.is_finite())
            at("classical: order-one limit matches KL")
                .expect_le(std::abs(lim.value() - exact.value()), 1e-4, pr.rho, pr.sigma);
    }

    // Order-zero formula against a vanishing order.
    {
        const ExtendedReal zero = renyi(p, q, AlphaOrder::zero());
        const ExtendedReal tiny = renyi(p, q, AlphaOrder::interior(1e-8));
        at("classical: order-zero limit").expect_le(diff(zero, tiny), 1e-4, pr.rho, pr.sigma);
    }

    // Sandwich between orders inside (0,1).
    {
        double worst = 0.0;
        const double orders[] = {0.1, 0.3, 0.5, 0.7, 0.9};
        for (double a : orders)
            for (double b : orders) {
                if (a > b) continue;
                const ExtendedReal da = renyi(p, q, AlphaOrder::interior(a));
                const ExtendedReal db = renyi(p, q, AlphaOrder::interior(b));
                if (!da.is_finite() || !db.is_finite()) continue;
                const double lower = (a / b) * ((1.0 - b) / (1.0 - a)) * db.value();
                worst = std::max({worst, lower - da.value(), da.value() - db.value()});
            }
        at("classical: order sandwich").expect_le(worst, 1e-10, pr.rho, pr.sigma);
    }

    // The support equivalences are exact on clamped spectra.
    {
        const ExtendedReal zero = renyi(p, q, AlphaOrder::zero());
        bool q_ll_p = true;
        for (const auto& c : joint.cells())
            if (c.q > 0.0 && c.p == 0.0) q_ll_p = false;
        const bool zero_is_zero = zero.is_finite() && std::abs(zero.value()) <= 1e-9;
        at("classical: Q<<P iff order-zero vanishes")
            .expect_true(q_ll_p == zero_is_zero, pr.rho, pr.sigma);

        bool disjoint = true;
        for (const auto& c : joint.cells())
            if (c.p > 0.0 && c.q > 0.0) disjoint = false;
        const bool half_inf = renyi(p, q, AlphaOrder::interior(0.5)).is_plus_inf();
        const bool all_inf = renyi(p, q, AlphaOrder::zero()).is_plus_inf() &&
                             renyi(p, q, AlphaOrder::infinity()).is_plus_inf();
        at("classical: mutually singular iff infinite below order one")
            .expect_true(disjoint == half_inf && (half_inf ? all_inf : true), pr.rho,
                         pr.sigma);
    }

    // Midpoint concavity of (1-a) D_a on an equally spaced grid.
    {
        std::vector<double> f;
        for (int k = 0; k <= 16; ++k) {
            const double a = 0.125 * k;
            const ExtendedReal v =
                renyi(p, q, std::abs(a - 1.0) < 1e-12 ? AlphaOrder::one()
                                                      : AlphaOrder::from_value(a));
            if (std::abs(a - 1.0) < 1e-12)
                f.push_back(0.0);
            else if (v.is_finite())
                f.push_back((1.0 - a) * v.value());
            else
                f.push_back(a > 1.0 ? -std::numeric_limits<double>::infinity()
                                    : std::numeric_limits<double>::infinity());
        }
        double worst = 0.0;
        for (std::size_t k = 1; k + 1 < f.size(); ++k) {
            if (std::isinf(f[k - 1]) || std::isinf(f[k + 1])) continue;
            if (std::isinf(f[k])) {
                if (f[k] < 0) worst = 1.0;  // interior -inf between finite neighbors
                continue;
            }
            worst = std::max(worst, 0.5 * (f[k - 1] + f[k + 1]) - f[k]);
        }
        at("classical: concavity of (1-a) D_a").expect_le(worst, 1e-10, pr.rho, pr.sigma);
    }

    // Rescaling the dominating measure leaves the divergence unchanged.
    {
        std::uniform_real_distribution<double> unif(0.1, 10.0);
        const double alpha = 0.7;
        double direct = 0.0;
        double rescaled = 0.0;
        // Merge on cells: D_a's sum with densities p/mu, q/mu against mass mu.
        for (const auto& c : joint.cells()) {
            if (c.p > 0.0 && c.q > 0.0) {
                const double mu = unif(rng_);
                direct += std::pow(c.p, alpha) * std::pow(c.q, 1.0 - alpha);
                rescaled += std::pow(c.p / mu, alpha) * std::pow(c.q / mu, 1.0 - alpha) * mu;
            }
        }
        if (direct > 0.0)
            at("classical: dominating-measure invariance")
                .expect_le(std::abs(std::log(direct) - std::log(rescaled)) / std::abs(alpha - 1.0),
                           1e-12, pr.rho, pr.sigma);
    }

    // Skew symmetry across the order reflection.
    {
        double worst = 0.0;
        for (double a : {0.25, 0.5, 0.75}) {
            const auto residual = skew_symmetry_residual(p, q, a);
            if (residual) worst = std::max(worst, *residual);
        }
        at("classical: skew symmetry").expect_le(worst, 1e-9, pr.rho, pr.sigma);
    }

    // Pinsker bound.
    {
        double worst = 0.0;
        for (double a : {0.3, 0.7, 1.0}) {
            const ExtendedReal gap = pinsker_gap(p, q, a);
            if (gap.is_finite()) worst = std::max(worst, -gap.value());
        }
        at("classical: Pinsker bound").expect_le(worst, 1e-12, pr.rho, pr.sigma);
    }
}

void Suite::check_reduction(const Pair& pr) {
    const DensityState& rho = pr.rho;
    const DensityState& sigma = pr.sigma;
    const JointPair joint = build_joint(rho, sigma);

    at("reduction: support inclusion iff P<<Q")
        .expect_true(support_included(rho, sigma) == joint.p_absolutely_continuous(), rho,
                     sigma);

    const bool equal_ops = std::sqrt(hs_norm_sq_diff(rho, sigma)) <= 1e-8;
    at("reduction: P=Q iff rho=sigma").expect_true(joint.p_equals_q() == equal_ops, rho, sigma);

    // Total variation through the classical pair versus the spectral formula.
    {
        const double classical_tv =
            total_variation(joint.p_distribution(), joint.q_distribution());
        const OverlapMatrix w(rho, sigma);
        double spectral_tv = 0.0;
        for (std::size_t i = 0; i < rho.dim(); ++i)
            for (std::size_t j = 0; j < sigma.dim(); ++j)
                spectral_tv +=
                    std::abs(rho.eigenvalues()[i] - sigma.eigenvalues()[j]) * w(i, j);
        at("reduction: total variation two routes")
            .expect_le(std::abs(classical_tv - spectral_tv), 1e-10, rho, sigma);

        at("reduction: hs distance below total variation")
            .expect_le(hs_norm_sq_diff(rho, sigma) - classical_tv, 1e-12, rho, sigma);
    }

    // POVM completeness and probability identities.
    {
        const PovmReport report = povm_check(rho, sigma);
        at("reduction: POVM completeness")
            .expect_le(std::max(report.completeness_left, report.completeness_right), 1e-9, rho,
                       sigma);
        at("reduction: POVM probabilities")
            .expect_le(std::max(report.p_residual, report.q_residual), 1e-10, rho, sigma);
    }
}

void Suite::check_quantum(const Pair& pr) {
    const DensityState& rho = pr.rho;
    const DensityState& sigma = pr.sigma;

    // Reduction identity: classical route versus functional calculus.
    {
        double worst = 0.0;
        for (double a : {0.25, 0.5, 0.75, 1.5, 2.0, 3.0}) {
            ExtendedReal classical = petz_renyi(rho, sigma, AlphaOrder::interior(a));
            const ExtendedReal direct = petz_renyi_direct(rho, sigma, a);
            if (opts_.inject_bug && classical.is_finite())
                classical = ExtendedReal::finite(classical.value() + 5e-9);
            worst = std::max(worst, diff(classical, direct));
        }
        at("quantum: reduction identity (classical vs direct)")
            .expect_le(worst, 1e-9, rho, sigma);
    }

    // Positivity and its equality cases.
    {
        double worst = 0.0;
        for (const AlphaOrder& a : standard_grid()) {
            const ExtendedReal v = petz_renyi(rho, sigma, a);
            if (v.is_finite()) worst = std::max(worst, -v.value());
        }
        at("quantum: positivity").expect_le(worst, 1e-12, rho, sigma);

        const bool equal_ops = std::sqrt(hs_norm_sq_diff(rho, sigma)) <= 1e-8;
        const ExtendedReal half = petz_renyi(rho, sigma, AlphaOrder::interior(0.5));
        const bool half_zero = half.is_finite() && std::abs(half.value()) <= 1e-9;
        at("quantum: zero divergence iff equal states")
            .expect_true(half_zero == equal_ops, rho, sigma);

        const ExtendedReal zero = petz_renyi(rho, sigma, AlphaOrder::zero());
        const bool zero_zero = zero.is_finite() && std::abs(zero.value()) <= 1e-9;
        at("quantum: order-zero vanishes iff supp sigma inside supp rho")
            .expect_true(zero_zero == support_included(sigma, rho), rho, sigma);
    }

    // Skew symmetry.
    {
        double worst = 0.0;
        for (int k = 1; k <= 9; ++k) {
            const double a = 0.1 * k;
            const ExtendedReal lhs = petz_renyi(rho, sigma, AlphaOrder::interior(a));
            const ExtendedReal rhs = petz_renyi(sigma, rho, AlphaOrder::interior(1.0 - a));
            if (lhs.is_finite() && rhs.is_finite())
                worst = std::max(worst,
                                 std::abs(lhs.value() - a / (1.0 - a) * rhs.value()));
        }
        at("quantum: skew symmetry").expect_le(worst, 1e-9, rho, sigma);
    }

    // Four-way equivalences at the support extremes.
    {
        const ExtendedReal zero = petz_renyi(rho, sigma, AlphaOrder::zero());
        const bool c1 = support_included(sigma, rho);
        const SupportProjector pi = support_projector(rho);
        const double mass = (pi.to_matrix() * sigma.to_matrix()).trace().real();
        const bool c2 = std::abs(mass - 1.0) <= 1e-9;
        const bool c3 = zero.is_finite() && std::abs(zero.value()) <= 1e-9;
        const ExtendedReal tiny = petz_renyi(rho, sigma, AlphaOrder::interior(1e-8));
        const bool c4 = tiny.is_finite() && std::abs(tiny.value()) <= 1e-6;
        at("quantum: order-zero equivalences")
            .expect_true(c1 == c2 && c2 == c3 && c3 == c4, rho, sigma);

        const bool o1 = supports_orthogonal(rho, sigma);
        const bool o2 = mass <= 1e-9;
        const bool o3 = petz_renyi(rho, sigma, AlphaOrder::interior(0.5)).is_plus_inf();
        const bool o4 = zero.is_plus_inf() &&
                        petz_renyi(rho, sigma, AlphaOrder::one()).is_plus_inf() &&
                        petz_renyi(rho, sigma, AlphaOrder::infinity()).is_plus_inf();
        at("quantum: orthogonal-support equivalences")
            .expect_true(o1 == o2 && o2 == o3 && o3 == o4, rho, sigma);
    }

    // Extended-order limits.
    {
        const ExtendedReal one = d_one(rho, sigma);
        const ExtendedReal near_one = petz_renyi(rho, sigma, AlphaOrder::interior(1.0 - 1e-6));
        if (one.is_finite())
            at("quantum: order-one limit").expect_le(diff(near_one, one), 1e-4, rho, sigma);

        if (rho.rank() == rho.dim() && sigma.rank() == sigma.dim()) {
            const ExtendedReal inf = d_infty(rho, sigma);
            const ExtendedReal big = petz_renyi(rho, sigma, AlphaOrder::interior(64.0));
            // Rate bound for the order-infinity limit: the gap is
            // -log(P mass at the sup cell)/63, bounded by the smallest P cell.
            const JointPair joint = build_joint(rho, sigma);
            double min_p = 1.0;
            for (const auto& c : joint.cells())
                if (c.p > 0.0) min_p = std::min(min_p, c.p);
            const double allowed = -std::log(min_p) / 63.0 + 1e-9;
            at("quantum: order-infinity limit (rate bound)")
                .expect_le(diff(big, inf), allowed, rho, sigma);
        }
    }

    // Unitary invariance.
    {
        const CMat w = random_unitary(rng_, rho.dim());
        auto conjugate = [&](const DensityState& s) {
            CMat basis(s.dim(), s.dim());
            for (std::size_t i = 0; i < s.dim(); ++i)
                for (std::size_t k = 0; k < s.dim(); ++k) {
                    cplx acc = 0.0;
                    for (std::size_t j = 0; j < s.dim(); ++j)
                        acc += w(i, j) * s.eigenvectors()(j, k);
                    basis(i, k) = acc;
                }
            return DensityState(std::vector<double>(s.eigenvalues()), std::move(basis));
        };
        const DensityState rho_w = conjugate(rho);
        const DensityState sigma_w = conjugate(sigma);
        double worst = 0.0;
        for (double a : {0.5, 2.0})
            worst = std::max(worst, diff(petz_renyi(rho, sigma, AlphaOrder::interior(a)),
                                         petz_renyi(rho_w, sigma_w, AlphaOrder::interior(a))));
        at("quantum: unitary invariance").expect_le(worst, 1e-9, rho, sigma);
    }

    // Spectral order-zero formula against the classical one.
    {
        const JointPair joint = build_joint(rho, sigma);
        const ExtendedReal spectral = d_zero(rho, sigma);
        const ExtendedReal classical =
            renyi(joint.p_distribution(), joint.q_distribution(), AlphaOrder::zero());
        at("quantum: order-zero two routes").expect_le(diff(spectral, classical), 1e-10, rho,
                                                       sigma);
    }

    // Order-one trace route whenever the support condition allows it.
    if (support_included(rho, sigma)) {
        at("quantum: order-one two routes")
            .expect_le(diff(d_one(rho, sigma), d_one_trace(rho, sigma)), 1e-9, rho, sigma);
    }

    // Pinsker bound.
    {
        double worst = 0.0;
        for (double a : {0.5, 1.0}) {
            const ExtendedReal gap = quantum_pinsker_gap(rho, sigma, a);
            if (gap.is_finite()) worst = std::max(worst, -gap.value());
        }
        at("quantum: Pinsker bound").expect_le(worst, 1e-12, rho, sigma);
    }

    // First moment of the spectral distribution equals the sandwiched trace.
    {
        double worst = 0.0;
        for (double a : {0.5, 2.0}) {
            if (a > 1.0 && !condition1_check(rho, sigma, a).ok) continue;
            const MuMeasure mu = mu_measure(rho, sigma, a);
            const CMat half = matrix_power(rho, a / 2.0, true);
            const CMat mid = matrix_power(sigma, 1.0 - a, true);
            const double tr = (half * mid * half).trace().real();
            worst = std::max(worst, std::abs(mu.integral() - tr));
        }
        at("quantum: spectral-moment identity").expect_le(worst, 1e-10, rho, sigma);
    }

    // Curve monotonicity along the standard grid.
    {
        const DivergenceCurve curve = alpha_scan(rho, sigma, standard_grid());
        at("quantum: curve monotone in the order")
            .expect_true(curve.monotonicity_violations.empty(), rho, sigma);
    }

    // Norm-form comparisons, when sigma is invertible.
    if (sigma.rank() == sigma.dim()) {
        const DmaxReport report = d_max_comparison(rho, sigma);
        at("quantum: D_max chain").expect_true(report.chain_ok, rho, sigma);
        if (report.hypothesis_holds) {
            at("quantum: norm form equals the restricted sup")
                .expect_le(diff(d_infty_norm_form(rho, sigma), d_infty(rho, sigma)), 1e-9, rho,
                           sigma);
        }
    }
}

void Suite::check_equal_pair(std::size_t trial) {
    // Equal states presented in different (degenerate) eigenbases: the joint
    // pair must collapse to P = Q and every divergence to zero.
    const std::size_t dim = std::max<std::size_t>(3, opts_.dim);
    StateGenOptions opts;
    opts.degeneracy = 3;
    const DensityState rho = random_density(rng_, dim, opts);
    const DensityState sigma = remix_degenerate_basis(rng_, rho);
    (void)trial;

    at("reduction: remixed degenerate basis leaves P=Q")
        .expect_true(build_joint(rho, sigma).p_equals_q(), rho, sigma);
    double worst = 0.0;
    for (const AlphaOrder& a : standard_grid()) {
        const ExtendedReal v = petz_renyi(rho, sigma, a);
        if (v.is_finite()) worst = std::max(worst, std::abs(v.value()));
    }
    at("quantum: equal states give zero divergence").expect_le(worst, 1e-9, rho, sigma);
}

VerifyReport Suite::run() {
    for (std::size_t trial = 0; trial < opts_.trials; ++trial) {
        const Pair pr = draw_pair(trial);
        check_spectral(pr);
        check_classical(pr);
        check_reduction(pr);
        check_quantum(pr);
        if (trial % 10 == 5) check_equal_pair(trial);
    }
    VerifyReport report;
    report.checks.reserve(checks_.size());
    for (auto& [name, check] : checks_) report.checks.push_back(check.take());
    return report;
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (c.violations > 0) return false;
    return true;
}

std::string VerifyReport::to_string() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.violations == 0 ? "pass" : "FAIL") << "  " << c.name << "  ("
            << c.evaluations << " evaluations";
        if (c.violations > 0) out << ", " << c.violations << " violations";
        out << ")\n";
        if (c.violations > 0 && !c.reproduction.empty())
            out << "      reproduction: " << c.reproduction << "\n";
    }
    return out.str();
}

VerifyReport run_property_suite(const VerifyOptions& opts) { return Suite(opts).run(); }

}  // namespace petz
