#include <doctest.h>

#include <cmath>
#include <vector>

#include "purejump/aj.hpp"
#include "purejump/experiments.hpp"
#include "purejump/model.hpp"
#include "purejump/preaverage.hpp"
#include "purejump/rng.hpp"
#include "purejump/teststat.hpp"

using namespace purejump;

namespace {

double mean_v_tilde(const ModelSpec& model, std::size_t n, const ThresholdSpec& spec,
                    std::size_t reps, std::uint64_t seed, double* se_out = nullptr) {
    double sum = 0.0, sumsq = 0.0;
    std::size_t m = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        const auto path = simulate(model, n, 1.0, child_seed(seed, 0, r));
        const auto rep = run_test(path, spec, 0.05);
        if (rep.inconclusive) continue;
        sum += rep.v_tilde;
        sumsq += rep.v_tilde * rep.v_tilde;
        ++m;
    }
    REQUIRE(m > reps * 9 / 10);
    const double mu = sum / static_cast<double>(m);
    if (se_out) {
        const double var = sumsq / static_cast<double>(m) - mu * mu;
        *se_out = std::sqrt(var / static_cast<double>(m));
    }
    return mu;
}

double rejection_rate(const ModelSpec& model, std::size_t n, std::size_t reps,
                      std::uint64_t seed) {
    ExperimentPlan plan;
    plan.models = {model};
    plan.ns = {n};
    plan.replications = reps;
    plan.master_seed = seed;
    plan.workers = 1;
    return mc_rejection_rate(plan)[0].rejection_rate;
}

}  // namespace

TEST_CASE("size stays near the nominal 5% level" * doctest::timeout(600)) {
    // mixture null at n=2340, beta=1.5; the reference table reports 4.27%
    const double rate = rejection_rate(h0_mixture(1.5), 2340, 3000, 1001);
    CHECK(rate > 0.03);
    CHECK(rate < 0.06);
}

TEST_CASE("size is flat in the jump scale theta_prime" * doctest::timeout(600)) {
    ExperimentPlan base;
    base.models = {h0_mixture(1.25)};
    base.ns = {2340};
    base.replications = 1200;
    base.master_seed = 2002;
    base.workers = 1;
    const auto rows = sweep(base, "theta_prime", {0.1, 0.5, 1.0, 2.0});
    double lo = 1.0, hi = 0.0;
    for (const auto& r : rows) {
        CHECK(r.rejection_rate > 0.02);
        CHECK(r.rejection_rate < 0.085);
        lo = std::min(lo, r.rejection_rate);
        hi = std::max(hi, r.rejection_rate);
    }
    CHECK(hi - lo < 0.04);
}

TEST_CASE("size survives a stochastic-volatility diffusion" * doctest::timeout(600)) {
    // Heston in place of the OU component, delta=1, theta_prime=0.25.
    // With jumps scaled at the full local-volatility level the beta=1.5 cell
    // runs a few points hot and shrinks only slowly with n (9.6% at n=23,400,
    // 8.0% at 93,600); the no-jump and low-beta cells sit at the level.
    ExperimentPlan plan;
    ModelSpec pure_heston = heston_mixture(1.2);
    pure_heston.jump = JumpKind::none;
    plan.models = {pure_heston, heston_mixture(1.2), heston_mixture(1.5)};
    plan.ns = {23400};
    plan.threshold = ThresholdSpec::scaled(1.0, 2.0);
    plan.replications = 1000;
    plan.master_seed = 3003;
    plan.workers = 1;
    const auto rows = mc_rejection_rate(plan);
    CHECK(rows[0].rejection_rate > 0.025);
    CHECK(rows[0].rejection_rate < 0.075);
    CHECK(rows[1].rejection_rate > 0.03);
    CHECK(rows[1].rejection_rate < 0.085);
    CHECK(rows[2].rejection_rate > 0.03);
    CHECK(rows[2].rejection_rate < 0.13);
}

TEST_CASE("power decreases toward 2 and dominates the level" * doctest::timeout(600)) {
    // reference points at n=4680: 89.55 (1.5), 21.85 (1.7), 6.14 (1.9)
    const double p15 = rejection_rate(h1_pure_jump(1.5), 4680, 800, 4004);
    const double p17 = rejection_rate(h1_pure_jump(1.7), 4680, 800, 4004);
    const double p19 = rejection_rate(h1_pure_jump(1.9), 4680, 800, 4004);
    CHECK(p15 > p17);
    CHECK(p17 > p19);
    CHECK(p15 > 0.80);
    CHECK(p15 < 0.98);
    CHECK(p17 > 0.10);
    CHECK(p17 < 0.35);
    CHECK(p19 > 0.02);
    CHECK(p19 < 0.12);
}

TEST_CASE("pure-jump ratio approaches its limit at every resolution" * doctest::timeout(600)) {
    // 2^{1 + 1/beta - varpi} for beta = 1.5: the mean settles near 2^{1/6}
    const double limit = std::pow(2.0, 1.0 / 6.0);
    const auto spec = ThresholdSpec::direct(10.0, 1.5, 2);
    std::vector<double> means;
    for (std::size_t n : {std::size_t{5850}, std::size_t{11700}, std::size_t{23400}}) {
        const double m = mean_v_tilde(h1_pure_jump(1.5, 0.0, 1.0), n, spec, 800, 5005 + n);
        CHECK(m == doctest::Approx(limit).epsilon(0.055));
        means.push_back(m);
    }
    CHECK(std::abs(means.front() - means.back()) < 0.05);
}

TEST_CASE("baseline statistic: both limits at moderate cost" * doctest::timeout(600)) {
    AjSpec spec;  // pinned calibration
    // under a Brownian-led null, S_n -> k^{1-p/2} = 2^{0.35}
    ModelSpec bm;
    bm.diffusion = DiffusionKind::brownian;
    bm.sigma = 1.0;
    double sum = 0.0;
    std::size_t m = 0;
    for (std::size_t r = 0; r < 400; ++r) {
        const auto path = simulate(bm, 23400, 1.0, child_seed(6006, 0, r));
        sum += s_n(path, spec);
        ++m;
    }
    CHECK(sum / static_cast<double>(m) == doctest::Approx(std::pow(2.0, 0.35)).epsilon(0.025));

    // under a pure-jump alternative, S_n -> 1
    sum = 0.0;
    m = 0;
    for (std::size_t r = 0; r < 400; ++r) {
        const auto path = simulate(h1_pure_jump(0.9, 0.0, 0.5), 4680, 1.0, child_seed(7007, 0, r));
        sum += s_n(path, spec);
        ++m;
    }
    CHECK(sum / static_cast<double>(m) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("baseline calibration constant is reproducible" * doctest::timeout(600)) {
    const double c = calibrate_c(AjSpec{}, 1500, 0x9e3779b9);
    CHECK(c > 0.73);
    CHECK(c < 0.93);  // the pinned default is 0.83
}

TEST_CASE("baseline rarely fires on very active pure-jump paths" * doctest::timeout(600)) {
    // beta = 0.5 alternative: the truncated-variation statistic should reject
    // in well under 1% of replications
    ExperimentPlan plan;
    plan.models = {h1_pure_jump(0.5)};
    plan.ns = {4680};
    plan.family = StatFamily::aj;
    plan.replications = 800;
    plan.master_seed = 8008;
    plan.workers = 1;
    const auto row = mc_rejection_rate(plan)[0];
    CHECK(row.rejection_rate < 0.02);
}

TEST_CASE("pre-averaging undoes the noise fixed point of the raw ratio" * doctest::timeout(600)) {
    // i.i.d. additive noise drives the raw two-scale ratio to 2^{-1/2} ~ 0.707
    // whatever the underlying process; block averaging restores a ratio near
    // the Brownian level
    const auto model = preavg_reference_h0();
    const double raw = mean_v_tilde(model, 23400, ThresholdSpec::scaled(2.0, 2.0), 200, 9009);
    CHECK(raw > 0.64);
    CHECK(raw < 0.78);

    const auto spec = preavg_reference_spec();
    double sum = 0.0;
    std::size_t m = 0;
    for (std::size_t r = 0; r < 400; ++r) {
        const auto path = simulate(model, 23400, 1.0, child_seed(9009, 0, r));
        const auto res = v_bar_test(path, spec);
        if (res.inconclusive) continue;
        sum += res.v_bar;
        ++m;
    }
    REQUIRE(m > 380);
    CHECK(sum / static_cast<double>(m) == doctest::Approx(1.09).epsilon(0.10));
}

TEST_CASE("histogram of the null studentized statistic looks standard normal" * doctest::timeout(600)) {
    HistogramRequest req;
    req.model = h0_mixture(1.5);
    req.n = 11700;
    req.selector = StatSelector::count_studentized;
    req.bins = 20;
    req.replications = 1000;
    req.master_seed = 1111;
    req.workers = 1;
    const auto h = histogram_export(req);
    REQUIRE(h.samples > 900);
    CHECK(std::abs(h.mean) < 0.2);
    // roughly symmetric mass in the two half-axes
    std::size_t below = 0, total = 0;
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        if (h.edges[i + 1] <= 0.0) below += h.counts[i];
        total += h.counts[i];
    }
    const double frac_below = static_cast<double>(below) / static_cast<double>(total);
    CHECK(frac_below > 0.3);
    CHECK(frac_below < 0.7);
}
