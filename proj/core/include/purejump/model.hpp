#pragma once

#include <cstdint>
#include <string>

#include "purejump/path.hpp"

namespace purejump {

// Declarative model description: Y = diffusion + drift + jump (+ observation noise).

enum class DiffusionKind { none, brownian, ou, heston };
enum class DriftKind { none, exp_decay };
enum class JumpKind { none, stable };

struct HestonParams {
    double eta = 1.0 / 16.0;  // long-run variance
    double gamma = 0.5;       // vol-of-vol
    double kappa_v = 5.0;     // mean-reversion speed
    double rho = -0.5;        // price/vol correlation
    double v0 = 1.0 / 16.0;   // initial variance
};

struct ModelSpec {
    DiffusionKind diffusion = DiffusionKind::none;
    double sigma = 1.0;  // brownian only
    HestonParams heston;

    DriftKind drift = DriftKind::none;
    double gamma_d = 0.0;  // exp_decay rate; drift(t) = exp(-gamma_d * t)

    JumpKind jump = JumpKind::none;
    double beta = 1.0;         // stability index in (0, 2]
    double theta_prime = 0.5;  // jump scale; per-step stable scale is theta_prime * dn^{1/beta}

    double noise_sd = 0.0;

    void validate() const;

    // short canonical text, used as Monte Carlo cell key material
    std::string label() const;
};

// Presets used by the simulation study.
ModelSpec h0_mixture(double beta, double theta_prime = 0.5);          // OU + stable
ModelSpec h1_pure_jump(double beta, double gamma_d = 0.0,             // exp-decay drift + stable
                       double theta_prime = 0.5);
ModelSpec brownian_stable_mixture(double beta, double sigma = 0.5,    // sigma*W + unit-scale stable
                                  double theta_prime = 1.0);
ModelSpec heston_mixture(double beta, double theta_prime = 0.25);     // Heston + stable

// Exact OU transition, full-truncation Euler for Heston, CMS stable increments.
// One seed, one stream; draw order is diffusion, then jumps, then noise.
SamplePath simulate(const ModelSpec& model, std::size_t n, double T, std::uint64_t seed);

// Effective (truncated) Heston variance path v+ on the same grid and stream as
// simulate() would use; nonnegative by construction.
SamplePath heston_variance_path(const ModelSpec& model, std::size_t n, double T, std::uint64_t seed);

// iid centered Gaussian perturbation of each observation; grid unchanged.
SamplePath add_noise(const SamplePath& path, double noise_sd, std::uint64_t seed);

}  // namespace purejump
