#pragma once

#include <vector>

#include "purejump/model.hpp"
#include "purejump/path.hpp"
#include "purejump/teststat.hpp"

namespace purejump {

// Noise-robust variant: the observations are cut into B = floor(n/M)
// nonoverlapping blocks of M observations, each block is reduced to the
// average of its K-step increments, and the two-scale count ratio is applied
// to the B block averages with effective spacing T/B.
struct PreAvgSpec {
    std::size_t block_size = 100;  // M, observations per block
    std::size_t gap = 50;          // K, increment step inside a block
    ThresholdSpec threshold = ThresholdSpec::direct(9.0, 1.5, 2);

    void validate() const;
};

struct PreAveraged {
    double T = 1.0;
    std::vector<double> zbar;  // B block averages
    double delta_eff() const { return T / static_cast<double>(zbar.size()); }

    // cumulative-sum path (levels) so the counting machinery can difference it
    SamplePath to_cumulative_path() const;
};

// Block average: zbar_j = (1/(M-K)) * sum over the block of (Z_i - Z_{i-K}),
// i ranging over the last M-K observations of block j.
PreAveraged preaverage_blocks(const SamplePath& path, const PreAvgSpec& spec);

struct VBarResult {
    double v_bar = 0.0;
    std::size_t u_fine = 0;
    std::size_t u_coarse = 0;
    std::size_t blocks = 0;
    double delta_eff = 0.0;
    bool inconclusive = false;
};

// Fine count: #{ |zbar_j| <= alpha * d^varpi }; coarse count: nonoverlapping
// pair sums |zbar_{2i-1} + zbar_{2i}| against alpha * (k*d)^varpi, d = T/B.
VBarResult v_bar_test(const SamplePath& noisy_path, const PreAvgSpec& spec);

// The reference demonstration configuration: n = 23,400 observations in
// 100-observation blocks (234 block averages), K = 50, alpha = 9, varpi = 3/2,
// observation noise sd 0.01.
PreAvgSpec preavg_reference_spec();
ModelSpec preavg_reference_h0();  // 0.5 * Brownian + unit Cauchy + noise
ModelSpec preavg_reference_h1();  // unit Cauchy + noise

}  // namespace purejump
