#include "petz/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace petz {

ExtendedReal petz_renyi(const DensityState& rho, const DensityState& sigma,
                        const AlphaOrder& a) {
    const JointPair joint = build_joint(rho, sigma);
    return renyi(joint.p_distribution(), joint.q_distribution(), a);
}

Condition1Result condition1_check(const DensityState& rho, const DensityState& sigma,
                                  double alpha) {
    if (!(alpha > 1.0)) throw Error("condition1_check: order must be > 1");
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("condition1_check: states have different dimension");
    const OverlapMatrix w(rho, sigma);
    const double r_cut = kSupportTol * rho.max_eigenvalue();
    const double s_cut = kSupportTol * sigma.max_eigenvalue();
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        if (rho.eigenvalues()[i] <= r_cut) continue;
        for (std::size_t j = 0; j < sigma.dim(); ++j) {
            if (sigma.eigenvalues()[j] <= s_cut && w(i, j) > 0.0)
                return Condition1Result{false, std::make_pair(i, j)};
        }
    }
    return Condition1Result{true, std::nullopt};
}

ExtendedReal petz_renyi_direct(const DensityState& rho, const DensityState& sigma,
                               double alpha) {
    if (!(alpha > 0.0) || std::abs(alpha - 1.0) < 1e-12 || std::isinf(alpha))
        throw Error("petz_renyi_direct: order must be interior");
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("petz_renyi_direct: states have different dimension");

    if (alpha > 1.0 && !condition1_check(rho, sigma, alpha).ok)
        return ExtendedReal::plus_inf(InfReason::DomainViolation);

    const CMat half = matrix_power(rho, alpha / 2.0, /*pseudo=*/true);
    const CMat sig_pow = matrix_power(sigma, 1.0 - alpha, /*pseudo=*/true);
    const double tr = (half * sig_pow * half).trace().real();
    if (tr <= 0.0) {
        // The sandwiched trace vanishes only when the supports never meet.
        return ExtendedReal::plus_inf(InfReason::SupportViolation);
    }
    return ExtendedReal::finite(std::log(tr) / (alpha - 1.0));
}

ExtendedReal d_zero(const DensityState& rho, const DensityState& sigma) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("d_zero: states have different dimension");
    // tr Pi_rho sigma via the support projector, assembled as matrices.
    const SupportProjector pi = support_projector(rho);
    const CMat prod = pi.to_matrix() * sigma.to_matrix();
    const double mass = prod.trace().real();
    // Same discrete rule as supports_orthogonal: below the support threshold
    // the overlap mass is rounding noise, not a divergence value.
    if (mass <= kSupportTol) return ExtendedReal::plus_inf(InfReason::SupportViolation);
    return ExtendedReal::finite(0.0 - std::log(std::min(mass, 1.0)));
}

ExtendedReal d_one(const DensityState& rho, const DensityState& sigma) {
    const JointPair joint = build_joint(rho, sigma);
    return kl(joint.p_distribution(), joint.q_distribution());
}

ExtendedReal d_one_trace(const DensityState& rho, const DensityState& sigma) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("d_one_trace: states have different dimension");
    if (!support_included(rho, sigma))
        return ExtendedReal::plus_inf(InfReason::SupportViolation);
    const CMat rho_mat = rho.to_matrix();
    const CMat diff = matrix_log_pseudo(rho) - matrix_log_pseudo(sigma);
    return ExtendedReal::finite((rho_mat * diff).trace().real());
}

namespace {

// sup r_i / s_j over the requested cells with 0/0 = 0, x/0 = inf.
ExtendedReal log_sup_ratio(const DensityState& rho, const DensityState& sigma,
                           bool restrict_to_overlap) {
    const OverlapMatrix w(rho, sigma);
    const double r_cut = kSupportTol * rho.max_eigenvalue();
    const double s_cut = kSupportTol * sigma.max_eigenvalue();
    double sup = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        const double r = rho.eigenvalues()[i];
        if (r <= r_cut) continue;  // 0/s_j = 0 never attains the sup of a ratio set containing 1
        for (std::size_t j = 0; j < sigma.dim(); ++j) {
            if (restrict_to_overlap && w(i, j) == 0.0) continue;
            const double s = sigma.eigenvalues()[j];
            if (s <= s_cut) return ExtendedReal::plus_inf(InfReason::SupportViolation);
            sup = std::max(sup, r / s);
        }
    }
    if (sup == 0.0) return ExtendedReal::plus_inf(InfReason::SupportViolation);
    return ExtendedReal::finite(std::log(sup));
}

}  // namespace

ExtendedReal d_infty(const DensityState& rho, const DensityState& sigma) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("d_infty: states have different dimension");
    return log_sup_ratio(rho, sigma, /*restrict_to_overlap=*/true);
}

ExtendedReal d_infty_unrestricted(const DensityState& rho, const DensityState& sigma) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("d_infty_unrestricted: states have different dimension");
    return log_sup_ratio(rho, sigma, /*restrict_to_overlap=*/false);
}

bool d_infty_hypothesis_holds(const DensityState& rho, const DensityState& sigma) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("d_infty_hypothesis_holds: states have different dimension");
    const OverlapMatrix w(rho, sigma);
    const double r_cut = kSupportTol * rho.max_eigenvalue();
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        if (rho.eigenvalues()[i] <= r_cut) continue;
        for (std::size_t j = 0; j < sigma.dim(); ++j)
            if (w(i, j) == 0.0) return false;  // zero overlap with r_i != 0
    }
    return true;
}

ExtendedReal d_infty_norm_form(const DensityState& rho, const DensityState& sigma) {
    if (!d_infty_hypothesis_holds(rho, sigma))
        throw HypothesisFailedError(
            "d_infty_norm_form: some zero-overlap cell has r_i != 0");
    const double s_cut = kSupportTol * sigma.max_eigenvalue();
    const double s_min = sigma.eigenvalues().back();
    if (s_min <= s_cut) return ExtendedReal::plus_inf(InfReason::SupportViolation);
    return ExtendedReal::finite(std::log(rho.max_eigenvalue() / s_min));
}

DmaxReport d_max_comparison(const DensityState& rho, const DensityState& sigma) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("d_max_comparison: states have different dimension");
    const double s_cut = kSupportTol * sigma.max_eigenvalue();
    if (sigma.eigenvalues().back() <= s_cut)
        throw SingularSigmaError("d_max_comparison: sigma is singular");

    // ||sigma^(-1/2) rho sigma^(-1/2)|| as the top eigenvalue of the
    // (positive semidefinite) conjugated operator.
    const CMat inv_sqrt = matrix_power(sigma, -0.5, /*pseudo=*/false);
    const CMat conj = inv_sqrt * rho.to_matrix() * inv_sqrt;
    const EigResult eig = eig_hermitian(HermitianMatrix(conj));
    const double d_max = std::log(eig.eigenvalues.front());

    const double log_norm_product =
        std::log(rho.max_eigenvalue()) + std::log(1.0 / sigma.eigenvalues().back());
    const double log_sup_inv_s = std::log(1.0 / sigma.eigenvalues().back());
    const bool chain = d_max <= log_norm_product + 1e-10 &&
                       log_norm_product <= log_sup_inv_s + 1e-10;
    return DmaxReport{d_max, log_norm_product, log_sup_inv_s, chain,
                      d_infty_hypothesis_holds(rho, sigma)};
}

ExtendedReal quantum_pinsker_gap(const DensityState& rho, const DensityState& sigma,
                                 double a) {
    if (!(a > 0.0) || a > 1.0) throw Error("quantum_pinsker_gap: order must be in (0,1]");
    const ExtendedReal d = petz_renyi(rho, sigma, AlphaOrder::from_value(a));
    if (!d.is_finite()) return d;
    const double hs = hs_norm_sq_diff(rho, sigma);
    return ExtendedReal::finite(d.value() - 0.5 * a * hs * hs);
}

DivergenceCurve alpha_scan(const DensityState& rho, const DensityState& sigma,
                           const std::vector<AlphaOrder>& grid) {
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k - 1].numeric() < grid[k].numeric()))
            throw Error("alpha_scan: grid must be strictly ascending");

    DivergenceCurve curve;
    curve.grid = grid;
    curve.values.reserve(grid.size());
    const bool equal_states = hs_norm_sq_diff(rho, sigma) <= 1e-16;
    for (const AlphaOrder& a : grid) {
        const ExtendedReal v = petz_renyi(rho, sigma, a);
        curve.values.push_back(v);
        double transform;
        if (a.kind() == AlphaOrder::Kind::One) {
            transform = 0.0;  // convention, even when D_1 = inf
        } else if (a.kind() == AlphaOrder::Kind::Infinity) {
            // (1-a) D_a -> -inf at a = inf unless rho = sigma (convention 0).
            transform = equal_states ? 0.0 : -std::numeric_limits<double>::infinity();
        } else {
            const double one_minus = 1.0 - a.numeric();
            transform = v.is_finite() ? one_minus * v.value()
                                      : (one_minus < 0.0
                                             ? -std::numeric_limits<double>::infinity()
                                             : std::numeric_limits<double>::infinity());
        }
        curve.concavity_transform.push_back(transform);
    }
    for (std::size_t k = 1; k < curve.values.size(); ++k) {
        if (curve.values[k].as_double() < curve.values[k - 1].as_double() - 1e-10)
            curve.monotonicity_violations.push_back(k);
    }
    return curve;
}

MuMeasure::MuMeasure(std::vector<std::pair<double, double>> atoms) : atoms_(std::move(atoms)) {
    for (const auto& [loc, mass] : atoms_)
        if (mass < 0.0) throw Error("MuMeasure: negative mass");
    std::sort(atoms_.begin(), atoms_.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
}

double MuMeasure::integral() const {
    double s = 0.0;
    for (const auto& [loc, mass] : atoms_) s += loc * mass;
    return s;
}

MuMeasure mu_measure(const DensityState& rho, const DensityState& sigma, double alpha) {
    if (!(alpha > 0.0) || std::abs(alpha - 1.0) < 1e-12)
        throw Error("mu_measure: order must be interior");
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("mu_measure: states have different dimension");
    if (alpha > 1.0 && !condition1_check(rho, sigma, alpha).ok)
        throw DomainViolationError("mu_measure: domain condition fails for alpha > 1");

    const OverlapMatrix w(rho, sigma);
    const double s_cut = kSupportTol * sigma.max_eigenvalue();

    // Group the sigma spectrum into equal-eigenvalue clusters; each cluster is
    // one spectral point s^(1-a) of sigma^(1-a).
    const double group_tol = 1e-9 * sigma.max_eigenvalue();
    std::vector<std::pair<double, double>> atoms;  // (location, mass)
    std::size_t j = 0;
    while (j < sigma.dim()) {
        const double s = sigma.eigenvalues()[j];
        std::size_t j_end = j + 1;
        while (j_end < sigma.dim() &&
               std::abs(sigma.eigenvalues()[j_end] - s) <= group_tol)
            ++j_end;
        const bool kernel = s <= s_cut;
        if (kernel && alpha > 1.0) {
            j = j_end;
            continue;  // pseudo-inverse power: the kernel is dropped
        }
        double mass = 0.0;
        for (std::size_t i = 0; i < rho.dim(); ++i) {
            const double r = rho.eigenvalues()[i];
            if (r == 0.0) continue;
            for (std::size_t jj = j; jj < j_end; ++jj)
                mass += std::pow(r, alpha) * w(i, jj);
        }
        const double location = kernel ? 0.0 : std::pow(s, 1.0 - alpha);
        if (mass > 0.0) atoms.emplace_back(location, mass);
        j = j_end;
    }
    return MuMeasure(std::move(atoms));
}

}  // namespace petz
