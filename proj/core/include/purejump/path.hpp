#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace purejump {

// Equispaced observations Y_{t_i}, t_i = t0 + i*(T/n), i = 0..n.
// The spacing is always derived as T/n, never stored.
struct SamplePath {
    double t0 = 0.0;
    double T = 1.0;
    std::vector<double> values;  // n+1 observations

    SamplePath() = default;
    SamplePath(double horizon, std::vector<double> obs, double origin = 0.0)
        : t0(origin), T(horizon), values(std::move(obs)) {
        if (T <= 0.0) throw std::invalid_argument("SamplePath: T must be positive");
        if (values.size() < 3) throw std::invalid_argument("SamplePath: need n >= 2 (3+ observations)");
    }

    std::size_t n() const { return values.size() - 1; }
    double delta_n() const { return T / static_cast<double>(n()); }
    double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * delta_n(); }
};

}  // namespace purejump
