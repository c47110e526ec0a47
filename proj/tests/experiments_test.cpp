#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "purejump/experiments.hpp"
#include "purejump/model.hpp"

using namespace purejump;

namespace {

ExperimentPlan tiny_plan() {
    ExperimentPlan plan;
    plan.models = {h0_mixture(1.5), h1_pure_jump(1.2)};
    plan.ns = {600};
    plan.replications = 80;
    plan.master_seed = 31;
    plan.workers = 1;
    return plan;
}

}  // namespace

TEST_CASE("mc_rejection_rate: one summary per model x n, labeled keys") {
    auto plan = tiny_plan();
    plan.ns = {600, 900};
    const auto rows = mc_rejection_rate(plan);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].cell_key.find("n=600") != std::string::npos);
    CHECK(rows[1].cell_key.find("n=900") != std::string::npos);
    CHECK(rows[0].cell_key.find("ou") != std::string::npos);
    CHECK(rows[2].cell_key.find("stable") != std::string::npos);
    for (const auto& r : rows) {
        CHECK(r.replications == 80);
        CHECK(r.rejection_rate >= 0.0);
        CHECK(r.rejection_rate <= 1.0);
    }
}

TEST_CASE("mc_se matches the binomial formula") {
    const auto rows = mc_rejection_rate(tiny_plan());
    for (const auto& r : rows) {
        const auto effective = static_cast<double>(r.replications - r.inconclusive);
        const double expected = std::sqrt(r.rejection_rate * (1.0 - r.rejection_rate) / effective);
        CHECK(r.mc_se == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("results do not depend on the worker count") {
    auto plan = tiny_plan();
    plan.workers = 1;
    const auto serial = mc_rejection_rate(plan);
    plan.workers = 3;
    const auto threaded = mc_rejection_rate(plan);
    plan.workers = 0;  // hardware default
    const auto defaulted = mc_rejection_rate(plan);

    REQUIRE(serial.size() == threaded.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].cell_key == threaded[i].cell_key);
        CHECK(serial[i].rejection_rate == threaded[i].rejection_rate);  // bitwise
        CHECK(serial[i].inconclusive == threaded[i].inconclusive);
        CHECK(serial[i].rejection_rate == defaulted[i].rejection_rate);
    }
}

TEST_CASE("same seed, same table; different seed, different table") {
    const auto a = mc_rejection_rate(tiny_plan());
    const auto b = mc_rejection_rate(tiny_plan());
    auto plan = tiny_plan();
    plan.master_seed = 32;
    const auto c = mc_rejection_rate(plan);
    CHECK(a[0].rejection_rate == b[0].rejection_rate);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        any_diff = any_diff || a[i].rejection_rate != c[i].rejection_rate;
    CHECK(any_diff);
}

TEST_CASE("plan validation") {
    ExperimentPlan plan;
    CHECK_THROWS(plan.validate());  // no models, no ns
    plan = tiny_plan();
    plan.replications = 0;
    CHECK_THROWS(plan.validate());
    plan = tiny_plan();
    plan.theta = 0.0;
    CHECK_THROWS(plan.validate());
    plan = tiny_plan();
    plan.ns = {1};  // too short to form a path
    CHECK_THROWS(plan.validate());
}

TEST_CASE("sweep: common random numbers across values") {
    ExperimentPlan base;
    base.models = {h0_mixture(1.25)};
    base.ns = {600};
    base.replications = 60;
    base.master_seed = 7;
    base.workers = 1;

    const auto rows = sweep(base, "theta_prime", {0.5, 0.5, 1.0});
    REQUIRE(rows.size() == 3);
    // identical parameter value (with shared seeds) must give identical rates
    CHECK(rows[0].rejection_rate == rows[1].rejection_rate);
    CHECK(rows[0].cell_key.find("theta_prime=0.5") != std::string::npos);
    CHECK(rows[2].cell_key.find("theta_prime=1") != std::string::npos);
}

TEST_CASE("sweep: rejects multi-cell bases and unknown parameters") {
    auto multi = tiny_plan();  // two models
    CHECK_THROWS((void)sweep(multi, "beta", {1.0}));
    ExperimentPlan base;
    base.models = {h0_mixture(1.25)};
    base.ns = {600};
    base.replications = 10;
    CHECK_THROWS((void)sweep(base, "no_such_knob", {1.0}));
}

TEST_CASE("histogram_export: bins partition the samples") {
    HistogramRequest req;
    req.model = h0_mixture(1.5);
    req.n = 600;
    req.selector = StatSelector::v_tilde_stat;
    req.bins = 25;
    req.replications = 120;
    req.master_seed = 11;
    req.workers = 1;
    const auto h = histogram_export(req);
    REQUIRE(h.edges.size() == 26);
    REQUIRE(h.counts.size() == 25);
    CHECK(h.samples + h.skipped == 120);
    CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::size_t{0}) == h.samples);
    for (std::size_t i = 1; i < h.edges.size(); ++i) CHECK(h.edges[i] > h.edges[i - 1]);
    CHECK(h.mean > 0.0);  // a count ratio is positive
}

TEST_CASE("histogram_export: increment selector pools one-step increments") {
    HistogramRequest req;
    req.model = h0_mixture(1.0);
    req.n = 300;
    req.selector = StatSelector::increment;
    req.bins = 10;
    req.replications = 4;
    req.master_seed = 3;
    req.workers = 1;
    const auto h = histogram_export(req);
    CHECK(h.samples == 4 * 300);
    CHECK(std::abs(h.mean) < 0.05);
}

TEST_CASE("histogram_export: insists on a sane bin count") {
    HistogramRequest req;
    req.model = h0_mixture(1.0);
    req.n = 300;
    req.bins = 5;
    req.replications = 10;
    CHECK_THROWS((void)histogram_export(req));
}

TEST_CASE("to_csv formats") {
    std::vector<McSummary> rows(1);
    rows[0].cell_key = "demo;n=600";
    rows[0].rejection_rate = 0.25;
    rows[0].replications = 80;
    rows[0].mc_se = 0.048;
    rows[0].inconclusive = 2;
    const std::string grid = to_csv(rows);
    CHECK(grid.find("cell_key,rejection_rate,R,mc_se,inconclusive\n") == 0);
    CHECK(grid.find("demo;n=600,0.25,80,0.048,2\n") != std::string::npos);

    Histogram h;
    h.edges = {0.0, 0.5, 1.0};
    h.counts = {3, 7};
    h.samples = 10;
    const std::string hist = to_csv(h);
    CHECK(hist.find("bin_left,bin_right,count\n") == 0);
    CHECK(hist.find("0,0.5,3\n") != std::string::npos);
    CHECK(hist.find("0.5,1,7\n") != std::string::npos);

    CountTable t;
    t.betas = {1.5};
    t.mean_counts = {{10.25, 20.5, 30.75}};
    const std::string table = to_csv(t);
    CHECK(table.find("beta,mixture,brownian,stable\n") == 0);
    CHECK(table.find("1.5,10.25,20.5,30.75\n") != std::string::npos);
}

TEST_CASE("heston variance path stays nonnegative with mean near its long-run level") {
    const auto model = heston_mixture(1.5);
    const auto v = heston_variance_path(model, 5000, 1.0, 21);
    double sum = 0.0;
    for (double x : v.values) {
        CHECK(x >= 0.0);
        sum += x;
    }
    const double mean = sum / static_cast<double>(v.values.size());
    CHECK(mean > 0.03);
    CHECK(mean < 0.10);  // eta = 1/16
}

TEST_CASE("add_noise: zero sd is the identity, small sd perturbs at the right scale") {
    const auto clean = simulate(h0_mixture(1.5), 5000, 1.0, 17);
    const auto same = add_noise(clean, 0.0, 5);
    CHECK(same.values == clean.values);

    const auto noisy = add_noise(clean, 0.05, 5);
    double s2 = 0.0;
    for (std::size_t i = 0; i <= clean.n(); ++i) {
        const double d = noisy.values[i] - clean.values[i];
        s2 += d * d;
    }
    const double sd = std::sqrt(s2 / static_cast<double>(clean.n() + 1));
    CHECK(sd == doctest::Approx(0.05).epsilon(0.05));
}

TEST_CASE("model validation and labels") {
    ModelSpec m;
    m.jump = JumpKind::stable;
    m.beta = 2.5;
    CHECK_THROWS(m.validate());
    m.beta = 1.5;
    m.theta_prime = -1.0;
    CHECK_THROWS(m.validate());
    m.theta_prime = 0.5;
    m.noise_sd = -0.1;
    CHECK_THROWS(m.validate());

    CHECK(h0_mixture(1.5).label() != h1_pure_jump(1.5).label());
    CHECK(h0_mixture(1.5).label() != h0_mixture(1.4).label());
    CHECK(h0_mixture(1.5).label() == h0_mixture(1.5).label());
}

TEST_CASE("simulate: deterministic, seed-sensitive, right shape") {
    const auto a = simulate(h0_mixture(1.3), 400, 1.0, 77);
    const auto b = simulate(h0_mixture(1.3), 400, 1.0, 77);
    const auto c = simulate(h0_mixture(1.3), 400, 1.0, 78);
    CHECK(a.values == b.values);
    CHECK(a.values != c.values);
    CHECK(a.n() == 400);
    CHECK(a.values[0] == 0.0);
    CHECK(a.T == 1.0);
}

TEST_CASE("simulate: pure drift component is the deterministic exp-decay level") {
    ModelSpec m;
    m.drift = DriftKind::exp_decay;
    m.gamma_d = 2.0;
    const auto path = simulate(m, 100, 1.0, 1);
    for (std::size_t i = 0; i <= 100; ++i) {
        const double t = static_cast<double>(i) / 100.0;
        CHECK(path.values[i] == doctest::Approx(std::exp(-2.0 * t)).epsilon(1e-12));
    }
}
