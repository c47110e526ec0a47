#include "purejump/stable.hpp"

#include <cmath>
#include <stdexcept>

namespace purejump {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

void check_args(double beta, double scale) {
    if (!(beta > 0.0 && beta <= 2.0)) throw std::invalid_argument("stable: beta must be in (0, 2]");
    if (!(scale >= 0.0)) throw std::invalid_argument("stable: scale must be nonnegative");
}
}  // namespace

double stable_draw(Rng& rng, double beta, double scale) {
    if (scale == 0.0) {
        // keep the stream advancing so mixtures stay reproducible
        rng.uniform_pos();
        rng.uniform_pos();
        return 0.0;
    }
    const double V = kPi * (rng.uniform_pos() - 0.5);
    const double W = rng.exponential();
    if (beta == 1.0) return scale * std::tan(V);
    const double x = std::sin(beta * V) / std::pow(std::cos(V), 1.0 / beta) *
                     std::pow(std::cos((1.0 - beta) * V) / W, (1.0 - beta) / beta);
    return scale * x;
}

std::vector<double> sample_stable(double beta, double scale, std::size_t count, std::uint64_t seed) {
    check_args(beta, scale);
    Rng rng(seed);
    std::vector<double> out(count);
    for (auto& v : out) v = stable_draw(rng, beta, scale);
    return out;
}

}  // namespace purejump
