#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "petz/classical.hpp"

using namespace petz;

namespace {

FiniteDistribution dist(const std::vector<double>& w) {
    return FiniteDistribution::from_weights(w);
}

// Brute-force interior-order divergence straight from the defining sum.
double oracle_interior(const std::vector<double>& p, const std::vector<double>& q,
                       double alpha) {
    double sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0.0) continue;
        sum += std::pow(p[k], alpha) * std::pow(q[k], 1.0 - alpha);
    }
    return std::log(sum) / (alpha - 1.0);
}

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n, bool allow_zero) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
        x = expo(rng);
        sum += x;
    }
    if (allow_zero && n > 1 && rng() % 3 == 0) {
        w[rng() % n] = 0.0;
        sum = 0.0;
        for (double x : w) sum += x;
    }
    for (auto& x : w) x /= sum;
    return w;
}

}  // namespace

TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(dist({0.5, 0.4}), InvalidDistributionError);
    CHECK_THROWS_AS(dist({1.5, -0.5}), InvalidDistributionError);
    CHECK_THROWS_AS(FiniteDistribution({{0, 0.5}, {0, 0.5}}), InvalidDistributionError);
    // Zero-weight keys are dropped.
    CHECK(dist({1.0, 0.0}).entries().size() == 1);
}

TEST_CASE("alpha order construction") {
    CHECK_THROWS_AS(AlphaOrder::interior(1.0 + 1e-13), Error);
    CHECK_THROWS_AS(AlphaOrder::interior(0.0), Error);
    CHECK_THROWS_AS(AlphaOrder::interior(-0.5), Error);
    CHECK(AlphaOrder::from_value(0.0).kind() == AlphaOrder::Kind::Zero);
    CHECK(AlphaOrder::from_value(1.0).kind() == AlphaOrder::Kind::One);
    CHECK(AlphaOrder::from_value(2.0).kind() == AlphaOrder::Kind::Interior);
    CHECK(AlphaOrder::from_value(std::numeric_limits<double>::infinity()).kind() ==
          AlphaOrder::Kind::Infinity);
}

TEST_CASE("identical distributions give zero at every order") {
    const FiniteDistribution p = dist({0.5, 0.5});
    for (double a : {0.0, 0.3, 1.0, 2.0}) {
        const ExtendedReal v = renyi(p, p, AlphaOrder::from_value(a));
        CHECK(v.is_finite());
        CHECK(std::abs(v.value()) <= 1e-12);
    }
    CHECK(std::abs(renyi(p, p, AlphaOrder::infinity()).value()) <= 1e-12);
}

TEST_CASE("order two closed form") {
    // sum p^2/q = 2 (4/9 + 1/9) = 10/9.
    const ExtendedReal v =
        renyi(dist({2.0 / 3.0, 1.0 / 3.0}), dist({0.5, 0.5}), AlphaOrder::interior(2.0));
    CHECK(v.value() == doctest::Approx(std::log(10.0 / 9.0)).epsilon(1e-12));
}

TEST_CASE("mutually singular distributions diverge below order one") {
    const ExtendedReal v = renyi(dist({1.0, 0.0}), dist({0.0, 1.0}), AlphaOrder::interior(0.5));
    REQUIRE(v.is_plus_inf());
    CHECK(v.reason() == InfReason::SupportViolation);
}

TEST_CASE("order zero formula") {
    const ExtendedReal v = renyi(dist({1.0, 0.0}), dist({0.5, 0.5}), AlphaOrder::zero());
    CHECK(v.value() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("kullback-leibler") {
    const FiniteDistribution p = dist({2.0 / 3.0, 1.0 / 3.0});
    const FiniteDistribution q = dist({0.5, 0.5});
    CHECK(std::abs(kl(p, p).value()) <= 1e-15);
    const double expected =
        (2.0 / 3.0) * std::log(4.0 / 3.0) + (1.0 / 3.0) * std::log(2.0 / 3.0);
    CHECK(kl(p, q).value() == doctest::Approx(expected).epsilon(1e-14));

    const ExtendedReal inf = kl(dist({0.5, 0.5}), dist({1.0, 0.0}));
    REQUIRE(inf.is_plus_inf());
    CHECK(inf.reason() == InfReason::SupportViolation);
}

TEST_CASE("total variation") {
    const FiniteDistribution p = dist({2.0 / 3.0, 1.0 / 3.0});
    CHECK(total_variation(p, p) == doctest::Approx(0.0));
    CHECK(total_variation(dist({1.0, 0.0}), dist({0.0, 1.0})) == doctest::Approx(2.0));
    CHECK(total_variation(p, dist({0.5, 0.5})) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("pinsker gap") {
    const FiniteDistribution p = dist({1.0, 0.0});
    const FiniteDistribution q = dist({0.5, 0.5});
    CHECK(std::abs(pinsker_gap(q, q, 0.5).value()) <= 1e-14);
    // D_1/2 = -2 log sum sqrt(pq) = log 2; V = 1; gap = log2 - 1/4.
    CHECK(pinsker_gap(p, q, 0.5).value() ==
          doctest::Approx(std::log(2.0) - 0.25).epsilon(1e-12));
    CHECK(pinsker_gap(dist({1.0, 0.0}), dist({0.0, 1.0}), 0.5).is_plus_inf());
}

TEST_CASE("skew symmetry residual") {
    const FiniteDistribution p = dist({2.0 / 3.0, 1.0 / 3.0});
    const FiniteDistribution q = dist({0.5, 0.5});
    CHECK(*skew_symmetry_residual(p, q, 0.5) <= 1e-9);
    CHECK(*skew_symmetry_residual(p, q, 0.25) <= 1e-9);
    CHECK(*skew_symmetry_residual(p, p, 0.3) <= 1e-15);
    // Propagates infinities as not-applicable.
    CHECK(!skew_symmetry_residual(dist({1.0, 0.0}), dist({0.0, 1.0}), 0.5).has_value());
}

TEST_CASE("interior order agrees with the brute-force sum") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        const std::vector<double> pw = random_weights(rng, n, false);
        const std::vector<double> qw = random_weights(rng, n, false);
        for (double a : {0.25, 0.5, 0.9, 1.5, 2.0, 4.0}) {
            const ExtendedReal v =
                renyi(dist(pw), dist(qw), AlphaOrder::interior(a));
            CHECK(v.value() ==
                  doctest::Approx(oracle_interior(pw, qw, a)).epsilon(1e-11));
        }
    }
}

TEST_CASE("monotone in the order and continuous at the ends") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        const FiniteDistribution p = dist(random_weights(rng, n, true));
        const FiniteDistribution q = dist(random_weights(rng, n, true));

        double prev = -1.0;
        for (double a : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0, 1.5, 2.0, 4.0}) {
            const double v = renyi(p, q, AlphaOrder::from_value(a)).as_double();
            CHECK(v >= prev - 1e-10);
            prev = std::max(prev, v);
        }
        CHECK(renyi(p, q, AlphaOrder::infinity()).as_double() >= prev - 1e-10);

        const ExtendedReal exact_kl = kl(p, q);
        if (exact_kl.is_finite()) {
            const ExtendedReal near = renyi(p, q, AlphaOrder::interior(1.0 - 1e-6));
            CHECK(std::abs(near.value() - exact_kl.value()) <= 1e-4);
        }

        const ExtendedReal zero = renyi(p, q, AlphaOrder::zero());
        const ExtendedReal tiny = renyi(p, q, AlphaOrder::interior(1e-8));
        if (zero.is_finite()) CHECK(std::abs(zero.value() - tiny.value()) <= 1e-4);
    }
}

TEST_CASE("support equivalences on discrete weights") {
    // Q << P iff D_0 = 0.
    CHECK(std::abs(renyi(dist({0.5, 0.5}), dist({1.0, 0.0}), AlphaOrder::zero()).value()) <=
          1e-14);
    CHECK(renyi(dist({1.0, 0.0}), dist({0.5, 0.5}), AlphaOrder::zero()).value() > 0.1);
    // P _|_ Q iff divergence is infinite at every order.
    const FiniteDistribution p({{0, 1.0}});
    const FiniteDistribution q({{1, 1.0}});
    for (double a : {0.0, 0.5, 1.0, 3.0})
        CHECK(renyi(p, q, AlphaOrder::from_value(a)).is_plus_inf());
}
