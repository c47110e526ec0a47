#pragma once

#include <cstdint>
#include <string>

#include "purejump/path.hpp"

namespace purejump {

// Small-increment threshold alpha * dn^varpi, with alpha either given directly
// or scaled with the sample size as delta * (ln n)^kappa.
struct ThresholdSpec {
    enum class Mode { direct, scaled };
    Mode mode = Mode::scaled;
    double alpha = 2.0;  // direct mode
    double delta = 2.0;  // scaled mode
    double kappa = 2.0;  // scaled mode
    double varpi = 1.5;  // must exceed 1/2
    int k = 2;           // coarse time-scale multiple

    static ThresholdSpec direct(double alpha, double varpi = 1.5, int k = 2);
    static ThresholdSpec scaled(double delta, double kappa, double varpi = 1.5, int k = 2);

    void validate() const;
};

double compute_alpha(const ThresholdSpec& spec, std::size_t n);

// #{ i : |Y_{(i-1)*step + offset + step} - Y_{(i-1)*step + offset}| <= threshold },
// all indices within [0, n]. (step=1, offset=0) -> U(dn); (step=k, 0) -> U(k*dn);
// (step=2, offset=1) -> the offset count U'(2*dn). Inclusive comparison.
std::size_t count_small(const SamplePath& path, std::size_t step, std::size_t offset, double threshold);

// Two-scale count ratio U(dn)/U(k*dn); the coarse count uses threshold alpha*(k*dn)^varpi.
// Throws DegenerateStatistic on a zero coarse count.
double v_n(const SamplePath& path, const ThresholdSpec& spec);

struct VTildeParts {
    double v_tilde = 0.0;
    std::size_t u_fine = 0;
    std::size_t u_coarse = 0;
    std::size_t u_offset = 0;  // capped at floor(n/2) - 1 terms
    double u_l = 0.0;          // (u_coarse + u_offset) / 2
};

// Offset-symmetrized ratio U(dn) / U_L(2*dn); requires spec.k == 2.
VTildeParts v_tilde(const SamplePath& path, const ThresholdSpec& spec);

// (U + 2^{3/2-varpi} * U_L / 2) / (dn^{3/2-varpi} * U_L^2), dn = T/n.
double sigma_tilde_sq(std::size_t u_fine, double u_l, std::size_t n, double T, double varpi);

// Single-scale analogue (1 + k^{3/2-varpi}) * k^{3-2*varpi} / (dn^{3/2-varpi} * U).
double sigma_hat_sq(std::size_t u_fine, std::size_t n, double T, double varpi, int k);

struct DegenerateStatistic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Full audit record of one test run. `family` is "count" for the two-scale
// count test and "aj" for the truncated-power-variation baseline; statistic
// and variance fields are Ṽ_n / σ̃² for the former, S_n / v_n² for the latter.
struct TestReport {
    std::string family = "count";
    bool inconclusive = false;
    std::string note;

    std::size_t n = 0;
    double T = 0.0;
    double theta = 0.0;
    double critical_z = 0.0;
    double studentized = 0.0;
    bool reject_h0 = false;

    // count family
    double alpha = 0.0;
    double varpi = 0.0;
    int k = 0;
    std::size_t u_fine = 0;
    std::size_t u_coarse = 0;
    std::size_t u_offset = 0;
    double u_l = 0.0;
    double v_tilde = 0.0;
    double sigma_tilde_sq = 0.0;

    // aj family (zero otherwise)
    double p = 0.0;
    double u_n = 0.0;
    double b_fine = 0.0;
    double b_coarse = 0.0;
    double b_2p = 0.0;
    double s_n = 0.0;
    double v_n_sq = 0.0;
    double calibration_c = 0.0;
};

// Level-theta decision: reject H0 when the studentized statistic exceeds
// z_{1-theta}; degenerate counts yield an inconclusive report, never a silent
// accept. Requires spec.k == 2 (the studentization is a k = 2 result).
TestReport run_test(const SamplePath& path, const ThresholdSpec& spec, double theta);

}  // namespace purejump
