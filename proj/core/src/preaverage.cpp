#include "purejump/preaverage.hpp"

#include <cmath>
#include <stdexcept>

namespace purejump {

void PreAvgSpec::validate() const {
    if (block_size < 2) throw std::invalid_argument("PreAvgSpec: block_size must be >= 2");
    if (gap < 1 || gap >= block_size) throw std::invalid_argument("PreAvgSpec: need 1 <= gap < block_size");
    threshold.validate();
}

SamplePath PreAveraged::to_cumulative_path() const {
    std::vector<double> levels(zbar.size() + 1, 0.0);
    for (std::size_t i = 0; i < zbar.size(); ++i) levels[i + 1] = levels[i] + zbar[i];
    return SamplePath(T, std::move(levels));
}

PreAveraged preaverage_blocks(const SamplePath& path, const PreAvgSpec& spec) {
    spec.validate();
    const std::size_t n = path.n();
    const std::size_t M = spec.block_size;
    const std::size_t K = spec.gap;
    const std::size_t B = n / M;  // blocks of M observations
    if (B < 4) throw std::invalid_argument("preaverage_blocks: need at least 4 blocks");

    PreAveraged out;
    out.T = path.T;
    out.zbar.resize(B);
    const double* z = path.values.data();
    const double denom = static_cast<double>(M - K);
    for (std::size_t j = 0; j < B; ++j) {
        const std::size_t first = j * M;
        double sum = 0.0;
        for (std::size_t i = first + K; i < first + M; ++i) sum += z[i] - z[i - K];
        out.zbar[j] = sum / denom;
    }
    return out;
}

VBarResult v_bar_test(const SamplePath& noisy_path, const PreAvgSpec& spec) {
    if (spec.threshold.k != 2) throw std::invalid_argument("v_bar_test: defined for k = 2");
    const PreAveraged pre = preaverage_blocks(noisy_path, spec);
    const std::size_t B = pre.zbar.size();

    VBarResult res;
    res.blocks = B;
    res.delta_eff = pre.delta_eff();
    const double alpha = compute_alpha(spec.threshold, B);
    const double fine_thr = alpha * std::pow(res.delta_eff, spec.threshold.varpi);
    const double coarse_thr = alpha * std::pow(2.0 * res.delta_eff, spec.threshold.varpi);

    for (double v : pre.zbar)
        if (std::fabs(v) <= fine_thr) ++res.u_fine;
    for (std::size_t i = 0; i + 2 <= B; i += 2)
        if (std::fabs(pre.zbar[i] + pre.zbar[i + 1]) <= coarse_thr) ++res.u_coarse;

    if (res.u_coarse == 0) {
        res.inconclusive = true;
        return res;
    }
    res.v_bar = static_cast<double>(res.u_fine) / static_cast<double>(res.u_coarse);
    return res;
}

PreAvgSpec preavg_reference_spec() {
    PreAvgSpec s;
    s.block_size = 100;
    s.gap = 50;
    s.threshold = ThresholdSpec::direct(9.0, 1.5, 2);
    return s;
}

ModelSpec preavg_reference_h0() {
    ModelSpec m = brownian_stable_mixture(1.0, 0.5, 1.0);
    m.noise_sd = 0.01;
    return m;
}

ModelSpec preavg_reference_h1() {
    ModelSpec m;
    m.jump = JumpKind::stable;
    m.beta = 1.0;
    m.theta_prime = 1.0;
    m.noise_sd = 0.01;
    return m;
}

}  // namespace purejump
