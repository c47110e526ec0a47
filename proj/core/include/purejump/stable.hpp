#pragma once

#include <cstdint>
#include <vector>

#include "purejump/rng.hpp"

namespace purejump {

// One draw from the symmetric beta-stable law with characteristic function
// exp(-|scale*u|^beta), by the Chambers-Mallows-Stuck transform.
// beta = 1 reduces to scale * tan(V) (Cauchy), beta = 2 to N(0, 2*scale^2).
double stable_draw(Rng& rng, double beta, double scale);

// `count` iid draws, deterministic in seed.
std::vector<double> sample_stable(double beta, double scale, std::size_t count, std::uint64_t seed);

}  // namespace purejump
