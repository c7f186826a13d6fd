#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "petz/araki.hpp"

using namespace petz;

namespace {
const double kC = 6.0 / (std::numbers::pi * std::numbers::pi);
}

TEST_CASE("modular spectrum atoms") {
    const ModularSpectrum one = modular_spectrum(1);
    REQUIRE(one.atoms.size() == 1);
    CHECK(one.atoms[0].first == 2.0);
    CHECK(one.atoms[0].second == doctest::Approx(kC).epsilon(1e-15));

    const ModularSpectrum three = modular_spectrum(3);
    CHECK(three.atoms[1].first == 4.0);
    CHECK(three.atoms[1].second == doctest::Approx(kC / 4.0).epsilon(1e-15));
    CHECK(three.atoms[2].first == 8.0);
    CHECK(three.atoms[2].second == doctest::Approx(kC / 9.0).epsilon(1e-15));

    // Strict sub-probability: the kernel always keeps some mass.
    for (std::size_t n : {1, 10, 100, 10000}) {
        const ModularSpectrum spec = modular_spectrum(n);
        double total = 0.0;
        for (const auto& [loc, w] : spec.atoms) total += w;
        CHECK(total < 1.0);
        CHECK(spec.kernel_mass == doctest::Approx(1.0 - total).epsilon(1e-12));
    }
}

TEST_CASE("modular weights coincide with the pair overlaps") {
    const SequencePair pair = counterexample_pair();
    const ModularSpectrum spec = modular_spectrum(1000);
    for (std::size_t j = 1; j <= 1000; ++j)
        CHECK(std::abs(spec.atoms[j - 1].second - pair.first_at(j)) <= 1e-14);
}

TEST_CASE("partial sums follow the harmonic identity") {
    CHECK(araki_partial_sum(1) == doctest::Approx(kC * std::log(2.0)).epsilon(1e-15));
    CHECK(araki_partial_sum(1) == doctest::Approx(0.4214).epsilon(1e-3));

    // c log2 H_N with H_N accumulated independently.
    double h = 0.0;
    std::size_t next = 1;
    for (std::size_t n = 1; n <= 1'000'000; ++n) {
        h += 1.0 / static_cast<double>(n);
        if (n == next) {
            CHECK(std::abs(araki_partial_sum(n) - kC * std::log(2.0) * h) <= 1e-12);
            next *= 10;
        }
    }

    // Harmonic growth: the gap between decades is c log2 log(100) up to 2%.
    const double gap = araki_partial_sum(10'000) - araki_partial_sum(100);
    CHECK(std::abs(gap - kC * std::log(2.0) * std::log(100.0)) <= 0.02 * gap);
}

TEST_CASE("threshold crossing") {
    const std::size_t n = araki_threshold(5.0);
    CHECK(araki_partial_sum(n) > 5.0);
    CHECK(araki_partial_sum(n - 1) <= 5.0);
}

TEST_CASE("degenerate trace value against the divergent integral") {
    const ItValueReport report = it_relative_entropy_value();
    REQUIRE(report.value.is_finite());
    CHECK(report.value.value() == 0.0);
    CHECK(report.degenerate_reason == InfReason::DomainViolation);
    CHECK(report.domain_certificate.verdict == Verdict::Diverges);
    // The domain series has constant terms c.
    for (std::uint64_t j : {1, 2, 10, 1000})
        CHECK(std::abs(report.domain_series_term.eval(j) - kC) <= 1e-14);
    CHECK(report.mismatch_with_spectral_integral);
}

TEST_CASE("term-level identification of the two entropies") {
    CHECK(kl_term_compare(1000) <= 1e-14);

    // Spot values: both terms equal c log2 / j.
    const SequencePair pair = counterexample_pair();
    for (std::uint64_t j : {1, 7}) {
        const double w = pair.first_at(j);
        const double kl_term = w * std::log(1.0 / pair.s_at(j));
        const double expected = kC * std::log(2.0) / static_cast<double>(j);
        CHECK(kl_term == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("three divergence routes agree termwise") {
    // Spectral-integral terms, KL terms of the reduced pair, and the
    // order-one summand of the symbolic route.
    const SequencePair pair = counterexample_pair();
    for (std::uint64_t j = 1; j <= 1000; ++j) {
        const double x = static_cast<double>(j);
        const double integrand = (x * std::log(2.0)) * (kC / (x * x));
        const double w = pair.first_at(j);
        const double q = pair.s_at(j) * w;
        const double kl_term = w * std::log(w / q);
        const double symbolic = w * (-std::log(pair.s_at(j)));
        CHECK(std::abs(integrand - kl_term) <= 1e-14);
        CHECK(std::abs(kl_term - symbolic) <= 1e-14);
    }
}
