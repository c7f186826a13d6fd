#include "petz/classical.hpp"

#include <algorithm>
#include <cmath>

namespace petz {

FiniteDistribution::FiniteDistribution(std::vector<std::pair<Key, double>> weights)
    : entries_(std::move(weights)) {
    double sum = 0.0;
    for (const auto& [key, w] : entries_) {
        if (w < 0.0 || std::isnan(w))
            throw InvalidDistributionError("FiniteDistribution: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw InvalidDistributionError("FiniteDistribution: weights do not sum to 1 within 1e-9");
    std::erase_if(entries_, [](const auto& e) { return e.second == 0.0; });
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 1; k < entries_.size(); ++k)
        if (entries_[k].first == entries_[k - 1].first)
            throw InvalidDistributionError("FiniteDistribution: duplicate key");
}

FiniteDistribution FiniteDistribution::from_weights(const std::vector<double>& w) {
    std::vector<std::pair<Key, double>> entries;
    entries.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) entries.emplace_back(k, w[k]);
    return FiniteDistribution(std::move(entries));
}

namespace {

// Walks the union of the two sorted supports, yielding (p, q) per key.
template <typename F>
void for_each_cell(const FiniteDistribution& p, const FiniteDistribution& q, F&& f) {
    const auto& pe = p.entries();
    const auto& qe = q.entries();
    std::size_t a = 0, b = 0;
    while (a < pe.size() || b < qe.size()) {
        if (b == qe.size() || (a < pe.size() && pe[a].first < qe[b].first)) {
            f(pe[a].second, 0.0);
            ++a;
        } else if (a == pe.size() || qe[b].first < pe[a].first) {
            f(0.0, qe[b].second);
            ++b;
        } else {
            f(pe[a].second, qe[b].second);
            ++a;
            ++b;
        }
    }
}

// log sum_k exp(t_k), stable for widely spread exponents.
double log_sum_exp(const std::vector<double>& t) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : t) m = std::max(m, x);
    if (std::isinf(m)) return m;
    double s = 0.0;
    for (double x : t) s += std::exp(x - m);
    return m + std::log(s);
}

ExtendedReal renyi_interior(const FiniteDistribution& p, const FiniteDistribution& q,
                            double alpha) {
    if (alpha > 1.0) {
        bool violated = false;
        for_each_cell(p, q, [&](double pv, double qv) {
            if (pv > 0.0 && qv == 0.0) violated = true;
        });
        if (violated) return ExtendedReal::plus_inf(InfReason::SupportViolation);
    }
    // Each cell contributes p^a q^(1-a); cells with p = 0 vanish for a > 0
    // and cells with q = 0 vanish for a < 1 by the 0 * inf = 0 convention.
    std::vector<double> logs;
    for_each_cell(p, q, [&](double pv, double qv) {
        if (pv > 0.0 && qv > 0.0)
            logs.push_back(alpha * std::log(pv) + (1.0 - alpha) * std::log(qv));
    });
    if (logs.empty()) return ExtendedReal::plus_inf(InfReason::SupportViolation);
    return ExtendedReal::finite(log_sum_exp(logs) / (alpha - 1.0));
}

ExtendedReal renyi_zero(const FiniteDistribution& p, const FiniteDistribution& q) {
    double mass = 0.0;
    for_each_cell(p, q, [&](double pv, double qv) {
        if (pv > 0.0) mass += qv;
    });
    if (mass == 0.0) return ExtendedReal::plus_inf(InfReason::SupportViolation);
    return ExtendedReal::finite(0.0 - std::log(mass));  // keep -log(1) at +0
}

ExtendedReal renyi_infinity(const FiniteDistribution& p, const FiniteDistribution& q) {
    double sup = 0.0;
    bool violated = false;
    for_each_cell(p, q, [&](double pv, double qv) {
        if (pv > 0.0) {
            if (qv == 0.0)
                violated = true;
            else
                sup = std::max(sup, pv / qv);
        }
    });
    if (violated) return ExtendedReal::plus_inf(InfReason::SupportViolation);
    return ExtendedReal::finite(std::log(sup));
}

}  // namespace

ExtendedReal kl(const FiniteDistribution& p, const FiniteDistribution& q) {
    bool violated = false;
    double sum = 0.0;
    for_each_cell(p, q, [&](double pv, double qv) {
        if (pv == 0.0) return;  // 0 log(0/q) = 0
        if (qv == 0.0) {
            violated = true;  // p log(p/0) = inf
            return;
        }
        sum += pv * (std::log(pv) - std::log(qv));
    });
    if (violated) return ExtendedReal::plus_inf(InfReason::SupportViolation);
    return ExtendedReal::finite(sum);
}

ExtendedReal renyi(const FiniteDistribution& p, const FiniteDistribution& q,
                   const AlphaOrder& a) {
    switch (a.kind()) {
        case AlphaOrder::Kind::Zero: return renyi_zero(p, q);
        case AlphaOrder::Kind::One: return kl(p, q);
        case AlphaOrder::Kind::Infinity: return renyi_infinity(p, q);
        case AlphaOrder::Kind::Interior: return renyi_interior(p, q, a.alpha());
    }
    throw Error("renyi: unreachable");
}

double total_variation(const FiniteDistribution& p, const FiniteDistribution& q) {
    double sum = 0.0;
    for_each_cell(p, q, [&](double pv, double qv) { sum += std::abs(pv - qv); });
    return sum;
}

ExtendedReal pinsker_gap(const FiniteDistribution& p, const FiniteDistribution& q, double a) {
    if (!(a > 0.0) || a > 1.0) throw Error("pinsker_gap: order must be in (0,1]");
    const ExtendedReal d = renyi(p, q, AlphaOrder::from_value(a));
    if (!d.is_finite()) return d;
    const double v = total_variation(p, q);
    return ExtendedReal::finite(d.value() - 0.5 * a * v * v);
}

std::optional<double> skew_symmetry_residual(const FiniteDistribution& p,
                                             const FiniteDistribution& q, double a) {
    if (!(a > 0.0) || !(a < 1.0)) throw Error("skew_symmetry_residual: order must be in (0,1)");
    const ExtendedReal lhs = renyi(p, q, AlphaOrder::interior(a));
    const ExtendedReal rhs = renyi(q, p, AlphaOrder::interior(1.0 - a));
    if (!lhs.is_finite() || !rhs.is_finite()) return std::nullopt;
    return std::abs(lhs.value() - (a / (1.0 - a)) * rhs.value());
}

}  // namespace petz
