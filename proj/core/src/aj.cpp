#include "purejump/aj.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "purejump/mathutil.hpp"
#include "purejump/model.hpp"
#include "purejump/rng.hpp"

namespace purejump {

void AjSpec::validate() const {
    if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("AjSpec: p must be in (1, 2)");
    if (!(rho > 0.0 && rho < 0.5)) throw std::invalid_argument("AjSpec: rho must be in (0, 1/2)");
    if (!(alpha_u > 0.0)) throw std::invalid_argument("AjSpec: alpha_u must be positive");
    if (k < 2) throw std::invalid_argument("AjSpec: k must be >= 2");
    if (calibration_c && !(*calibration_c > 0.0))
        throw std::invalid_argument("AjSpec: calibration_c must be positive");
}

double AjSpec::u_n(double dn) const { return alpha_u * std::pow(dn, rho); }

double truncated_power_variation(const SamplePath& path, double p, double u) {
    if (!(p > 0.0)) throw std::invalid_argument("truncated_power_variation: p must be positive");
    if (!(u > 0.0)) throw std::invalid_argument("truncated_power_variation: u must be positive");
    const double* y = path.values.data();
    const std::size_t n = path.n();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::fabs(y[i + 1] - y[i]);
        if (a <= u) sum += std::pow(a, p);
    }
    return sum;
}

double truncated_power_variation_coarse(const SamplePath& path, double p, double u, int k) {
    if (k < 1) throw std::invalid_argument("truncated_power_variation_coarse: k must be >= 1");
    if (!(p > 0.0) || !(u > 0.0))
        throw std::invalid_argument("truncated_power_variation_coarse: p and u must be positive");
    const double* y = path.values.data();
    const std::size_t n = path.n();
    const std::size_t step = static_cast<std::size_t>(k);
    double sum = 0.0;
    for (std::size_t start = 0; start + step <= n; start += step) {
        const double a = std::fabs(y[start + step] - y[start]);
        if (a <= u) sum += std::pow(a, p);
    }
    return sum;
}

double s_n(const SamplePath& path, const AjSpec& spec) {
    spec.validate();
    const double u = spec.u_n(path.delta_n());
    const double fine = truncated_power_variation(path, spec.p, u);
    const double coarse = truncated_power_variation_coarse(path, spec.p, u, spec.k);
    if (coarse <= 0.0) throw DegenerateStatistic("s_n: empty coarse variation");
    return fine / coarse;
}

namespace {

struct RawStudentized {
    double value = 0.0;
    double s = 0.0, b_fine = 0.0, b_coarse = 0.0, b_2p = 0.0;
    bool degenerate = false;
};

RawStudentized raw_studentized(const SamplePath& path, const AjSpec& spec) {
    RawStudentized r;
    const double u = spec.u_n(path.delta_n());
    r.b_fine = truncated_power_variation(path, spec.p, u);
    r.b_coarse = truncated_power_variation_coarse(path, spec.p, u, spec.k);
    r.b_2p = truncated_power_variation(path, 2.0 * spec.p, u);
    if (r.b_fine <= 0.0 || r.b_coarse <= 0.0 || r.b_2p <= 0.0) {
        r.degenerate = true;
        return r;
    }
    r.s = r.b_fine / r.b_coarse;
    const double center = std::pow(static_cast<double>(spec.k), 1.0 - spec.p / 2.0);
    r.value = (r.s - center) / std::sqrt(r.b_2p / (r.b_fine * r.b_fine));
    return r;
}

}  // namespace

double calibrate_c(const AjSpec& spec, std::size_t reps, std::uint64_t seed) {
    spec.validate();
    const std::size_t n = 23400;
    ModelSpec bm;
    bm.diffusion = DiffusionKind::brownian;
    bm.sigma = 1.0;
    double sum = 0.0, sumsq = 0.0;
    std::size_t m = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        const SamplePath path = simulate(bm, n, 1.0, child_seed(seed, 0, r));
        const RawStudentized raw = raw_studentized(path, spec);
        if (raw.degenerate) continue;
        sum += raw.value;
        sumsq += raw.value * raw.value;
        ++m;
    }
    if (m < 2) throw DegenerateStatistic("calibrate_c: no usable replications");
    const double mean = sum / static_cast<double>(m);
    return sumsq / static_cast<double>(m) - mean * mean;
}

namespace {

// cache for "calibrate on demand" specs, keyed by the parameters that matter
std::map<std::tuple<double, double, double, int>, double> g_calibration_cache;
std::mutex g_calibration_mutex;

double effective_c(const AjSpec& spec) {
    if (spec.calibration_c) return *spec.calibration_c;
    const auto key = std::make_tuple(spec.p, spec.alpha_u, spec.rho, spec.k);
    std::lock_guard<std::mutex> lock(g_calibration_mutex);
    auto it = g_calibration_cache.find(key);
    if (it != g_calibration_cache.end()) return it->second;
    const double c = calibrate_c(spec);
    g_calibration_cache.emplace(key, c);
    return c;
}

}  // namespace

TestReport aj_test(const SamplePath& path, const AjSpec& spec, double theta) {
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("aj_test: theta must be in (0, 1)");
    spec.validate();

    TestReport r;
    r.family = "aj";
    r.n = path.n();
    r.T = path.T;
    r.theta = theta;
    r.k = spec.k;
    r.p = spec.p;
    r.u_n = spec.u_n(path.delta_n());
    r.critical_z = normal_quantile(theta);  // left tail

    const RawStudentized raw = raw_studentized(path, spec);
    r.b_fine = raw.b_fine;
    r.b_coarse = raw.b_coarse;
    r.b_2p = raw.b_2p;
    if (raw.degenerate) {
        r.inconclusive = true;
        r.note = "inconclusive: empty truncated variation";
        return r;
    }
    const double c = effective_c(spec);
    r.calibration_c = c;
    r.s_n = raw.s;
    r.v_n_sq = c * raw.b_2p / (raw.b_fine * raw.b_fine);
    r.studentized = raw.value / std::sqrt(c);
    r.reject_h0 = r.studentized < r.critical_z;
    return r;
}

}  // namespace purejump
