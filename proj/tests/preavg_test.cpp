#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "purejump/model.hpp"
#include "purejump/preaverage.hpp"

using namespace purejump;

namespace {

// z_i = i for i = 0..n: every K-lag difference is K, so each block average is K
SamplePath ramp(std::size_t n) {
    std::vector<double> v(n + 1);
    std::iota(v.begin(), v.end(), 0.0);
    return SamplePath(1.0, std::move(v));
}

}  // namespace

TEST_CASE("preaverage_blocks: hand enumeration on a ramp") {
    PreAvgSpec spec;
    spec.block_size = 4;
    spec.gap = 2;
    spec.threshold = ThresholdSpec::direct(20.0, 1.5, 2);
    const auto pre = preaverage_blocks(ramp(16), spec);
    REQUIRE(pre.zbar.size() == 4);  // floor(16 / 4)
    for (double z : pre.zbar) CHECK(z == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(pre.delta_eff() == doctest::Approx(0.25));
}

TEST_CASE("preaverage_blocks: averages only the last M-K in-block differences") {
    // block 0 of size 4 with K = 2 uses observations 2 and 3:
    // zbar_0 = ((z2 - z0) + (z3 - z1)) / 2
    PreAvgSpec spec;
    spec.block_size = 4;
    spec.gap = 2;
    std::vector<double> z(17, 0.0);
    z[2] = 3.0;
    z[3] = 5.0;  // others zero
    const auto pre = preaverage_blocks(SamplePath(1.0, std::move(z)), spec);
    CHECK(pre.zbar[0] == doctest::Approx((3.0 + 5.0) / 2.0));
    CHECK(pre.zbar[1] == doctest::Approx(0.0));
}

TEST_CASE("preaverage_blocks: rejects paths with fewer than four blocks") {
    PreAvgSpec spec;
    spec.block_size = 8;
    spec.gap = 4;
    CHECK_THROWS(preaverage_blocks(ramp(24), spec));   // 3 blocks
    CHECK_NOTHROW(preaverage_blocks(ramp(32), spec));  // 4 blocks
}

TEST_CASE("PreAvgSpec validation") {
    PreAvgSpec spec;
    spec.block_size = 10;
    spec.gap = 10;  // gap must be < block_size
    CHECK_THROWS(spec.validate());
    spec.gap = 0;
    CHECK_THROWS(spec.validate());
    spec.gap = 5;
    CHECK_NOTHROW(spec.validate());
}

TEST_CASE("v_bar_test: hand-checked counts on the ramp") {
    // all four block averages equal 2; d = 1/4
    // fine:   |2| <= alpha d^1.5 = 20 * 0.125 = 2.5  -> 4 hits
    // coarse: |2+2| <= alpha (2d)^1.5 ~ 7.07         -> 2 hits
    PreAvgSpec spec;
    spec.block_size = 4;
    spec.gap = 2;
    spec.threshold = ThresholdSpec::direct(20.0, 1.5, 2);
    const auto res = v_bar_test(ramp(16), spec);
    CHECK(!res.inconclusive);
    CHECK(res.blocks == 4);
    CHECK(res.u_fine == 4);
    CHECK(res.u_coarse == 2);
    CHECK(res.v_bar == doctest::Approx(2.0));
    CHECK(res.delta_eff == doctest::Approx(0.25));
}

TEST_CASE("v_bar_test: zero coarse count is inconclusive") {
    PreAvgSpec spec;
    spec.block_size = 4;
    spec.gap = 2;
    spec.threshold = ThresholdSpec::direct(1e-9, 1.5, 2);
    const auto res = v_bar_test(ramp(16), spec);
    CHECK(res.inconclusive);
}

TEST_CASE("to_cumulative_path reproduces block averages as increments") {
    PreAvgSpec spec;
    spec.block_size = 4;
    spec.gap = 2;
    const auto pre = preaverage_blocks(ramp(32), spec);
    const auto path = pre.to_cumulative_path();
    REQUIRE(path.n() == pre.zbar.size());
    CHECK(path.T == doctest::Approx(pre.T));
    for (std::size_t j = 0; j < pre.zbar.size(); ++j)
        CHECK(path.values[j + 1] - path.values[j] == doctest::Approx(pre.zbar[j]).epsilon(1e-12));
}

TEST_CASE("reference configuration wiring") {
    const auto spec = preavg_reference_spec();
    CHECK(spec.block_size == 100);
    CHECK(spec.gap == 50);
    CHECK(spec.threshold.mode == ThresholdSpec::Mode::direct);
    CHECK(spec.threshold.alpha == doctest::Approx(9.0));
    CHECK(spec.threshold.varpi == doctest::Approx(1.5));

    const auto h0 = preavg_reference_h0();
    CHECK(h0.diffusion == DiffusionKind::brownian);
    CHECK(h0.sigma == doctest::Approx(0.5));
    CHECK(h0.jump == JumpKind::stable);
    CHECK(h0.beta == doctest::Approx(1.0));
    CHECK(h0.noise_sd == doctest::Approx(0.01));

    const auto h1 = preavg_reference_h1();
    CHECK(h1.diffusion == DiffusionKind::none);
    CHECK(h1.beta == doctest::Approx(1.0));
    CHECK(h1.noise_sd == doctest::Approx(0.01));

    // 23,400 observations split into 234 blocks of 100
    const auto pre = preaverage_blocks(simulate(h0, 23400, 1.0, 8), spec);
    CHECK(pre.zbar.size() == 234);
}
