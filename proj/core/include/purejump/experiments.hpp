#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "purejump/aj.hpp"
#include "purejump/model.hpp"
#include "purejump/preaverage.hpp"
#include "purejump/teststat.hpp"

namespace purejump {

enum class StatFamily { count, aj };

// One Monte Carlo run over a model x n grid. Replication r of cell c draws its
// own child seed from (master_seed, c, r), so results are independent of the
// worker count and of execution order.
struct ExperimentPlan {
    std::vector<ModelSpec> models;
    std::vector<std::size_t> ns;
    double T = 1.0;
    StatFamily family = StatFamily::count;
    ThresholdSpec threshold{};
    AjSpec aj{};
    double theta = 0.05;
    std::size_t replications = 2000;
    std::uint64_t master_seed = 1;
    unsigned workers = 0;  // 0 = hardware concurrency

    void validate() const;
};

struct McSummary {
    std::string cell_key;
    double rejection_rate = 0.0;  // rejects / (R - inconclusive)
    std::size_t replications = 0;
    double mc_se = 0.0;
    std::size_t inconclusive = 0;
};

std::vector<McSummary> mc_rejection_rate(const ExperimentPlan& plan);

// Re-runs a single-cell plan once per value of one scalar parameter
// ("theta_prime", "beta", "gamma_d", "noise_sd", "sigma", "delta", or "alpha");
// the cell key is suffixed with parameter=value.
std::vector<McSummary> sweep(const ExperimentPlan& base, const std::string& parameter,
                             const std::vector<double>& values);

enum class StatSelector {
    increment,         // pooled one-step increments
    v_tilde_stat,      // two-scale count ratio
    count_studentized, // studentized count statistic
    aj_studentized,    // studentized truncated-variation statistic
    v_bar_stat,        // pre-averaged ratio
};

struct HistogramRequest {
    ModelSpec model;
    std::size_t n = 23400;
    double T = 1.0;
    StatSelector selector = StatSelector::v_tilde_stat;
    std::size_t bins = 50;  // >= 10
    std::size_t replications = 2000;
    std::uint64_t master_seed = 1;
    unsigned workers = 0;
    ThresholdSpec threshold{};
    AjSpec aj{};
    PreAvgSpec preavg{};
    double theta = 0.05;
};

struct Histogram {
    std::vector<double> edges;        // bins + 1
    std::vector<std::size_t> counts;  // bins
    std::size_t samples = 0;
    std::size_t skipped = 0;  // inconclusive replications
    double mean = 0.0;
};

Histogram histogram_export(const HistogramRequest& request);

// Mean small-increment counts (alpha = 2, varpi = 1, n = 23,400, 500 reps) for
// the mixture 0.5*W + S_beta, the Brownian part alone, and the stable part
// alone, at beta = 1.5 / 1.0 / 0.5.
struct CountTable {
    std::array<double, 3> betas{{1.5, 1.0, 0.5}};
    // rows follow betas; columns: mixture, brownian, stable
    std::array<std::array<double, 3>, 3> mean_counts{};
};

CountTable table1_demo(std::uint64_t seed);

std::string to_csv(const std::vector<McSummary>& rows);
std::string to_csv(const Histogram& h);
std::string to_csv(const CountTable& t);

}  // namespace purejump
