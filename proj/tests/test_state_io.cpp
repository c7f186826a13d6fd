#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "petz/random_states.hpp"
#include "petz/state_io.hpp"
#include "test_helpers.hpp"

using namespace petz;
using test::diag_state;

TEST_CASE("matrix form parses and validates") {
    const DensityState s = parse_state(
        R"({"dim": 2, "matrix": [[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]]})");
    CHECK(s.dim() == 2);
    CHECK(s.eigenvalues()[0] == doctest::Approx(0.5));
}

TEST_CASE("eigen form parses") {
    const DensityState s = parse_state(
        R"({"dim": 2, "eigenvalues": [0.75, 0.25],
            "eigenvectors": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]})");
    CHECK(s.eigenvalues()[0] == doctest::Approx(0.75));
}

TEST_CASE("state file rejections name the violated invariant") {
    CHECK_THROWS_AS(parse_state("not json"), InvalidStateError);
    CHECK_THROWS_AS(parse_state(R"({"matrix": []})"), InvalidStateError);
    // Both forms at once.
    CHECK_THROWS_AS(parse_state(
                        R"({"dim": 1, "matrix": [[[1, 0]]], "eigenvalues": [1],
                            "eigenvectors": [[[1, 0]]]})"),
                    InvalidStateError);
    // Neither form.
    CHECK_THROWS_AS(parse_state(R"({"dim": 2})"), InvalidStateError);
    // Trace violation surfaces from the validator.
    CHECK_THROWS_AS(parse_state(R"({"dim": 2, "matrix": [[[0.9, 0], [0, 0]],
                                    [[0, 0], [0.9, 0]]]})"),
                    TraceNotOneError);
    // Non-Hermitian matrix.
    CHECK_THROWS_AS(parse_state(R"({"dim": 2, "matrix": [[[0.5, 0], [0.2, 0]],
                                    [[0, 0], [0.5, 0]]]})"),
                    NonHermitianError);
    // Non-PSD matrix.
    CHECK_THROWS_AS(parse_state(R"({"dim": 2, "matrix": [[[1.1, 0], [0, 0]],
                                    [[0, 0], [-0.1, 0]]]})"),
                    NotPsdError);
}

TEST_CASE("state json round trip") {
    std::mt19937_64 rng(3);
    const DensityState s = random_density(rng, 4);
    const DensityState back = parse_state(state_to_json(s));
    CHECK(back.dim() == 4);
    CHECK(hs_norm_sq_diff(s, back) <= 1e-20);
}

TEST_CASE("curve csv emit and parse round trip") {
    std::vector<AlphaOrder> grid = {AlphaOrder::zero(), AlphaOrder::interior(0.5),
                                    AlphaOrder::one(), AlphaOrder::interior(2.0),
                                    AlphaOrder::infinity()};
    const DivergenceCurve curve =
        alpha_scan(diag_state({0.5, 0.5}), diag_state({1.0, 0.0}), grid);
    const std::string csv = curve_to_csv(curve);

    CHECK(csv.substr(0, 18) == "alpha,value,status");
    const ParsedCurve parsed = parse_curve_csv(csv);
    REQUIRE(parsed.grid.size() == grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(parsed.grid[k].kind() == grid[k].kind());
        CHECK(parsed.values[k].kind() == curve.values[k].kind());
        if (curve.values[k].is_plus_inf())
            CHECK(parsed.values[k].reason() == curve.values[k].reason());
    }
    // Re-emission is byte-identical.
    DivergenceCurve rebuilt;
    rebuilt.grid = parsed.grid;
    rebuilt.values = parsed.values;
    CHECK(curve_to_csv(rebuilt) == csv);

    CHECK_THROWS_AS(parse_curve_csv("bad header\n"), Error);
}

TEST_CASE("curve csv respects the output base") {
    std::vector<AlphaOrder> grid = {AlphaOrder::infinity()};
    DivergenceCurve curve;
    curve.grid = grid;
    curve.values.push_back(ExtendedReal::finite(std::log(2.0)));
    curve.concavity_transform.push_back(0.0);
    const std::string csv = curve_to_csv(curve, LogBase::Two);
    CHECK(csv.find("inf,1,finite") != std::string::npos);
}
