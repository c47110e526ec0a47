#include "purejump/teststat.hpp"

#include <cmath>
#include <stdexcept>

#include "purejump/mathutil.hpp"

namespace purejump {

ThresholdSpec ThresholdSpec::direct(double alpha, double varpi, int k) {
    ThresholdSpec s;
    s.mode = Mode::direct;
    s.alpha = alpha;
    s.varpi = varpi;
    s.k = k;
    return s;
}

ThresholdSpec ThresholdSpec::scaled(double delta, double kappa, double varpi, int k) {
    ThresholdSpec s;
    s.mode = Mode::scaled;
    s.delta = delta;
    s.kappa = kappa;
    s.varpi = varpi;
    s.k = k;
    return s;
}

void ThresholdSpec::validate() const {
    if (!(varpi > 0.5)) throw std::invalid_argument("ThresholdSpec: varpi must exceed 1/2");
    if (k < 2) throw std::invalid_argument("ThresholdSpec: k must be >= 2");
    if (mode == Mode::direct) {
        if (!(alpha > 0.0)) throw std::invalid_argument("ThresholdSpec: alpha must be positive");
    } else {
        if (!(delta > 0.0)) throw std::invalid_argument("ThresholdSpec: delta must be positive");
        if (!(kappa >= 0.0)) throw std::invalid_argument("ThresholdSpec: kappa must be >= 0");
    }
}

double compute_alpha(const ThresholdSpec& spec, std::size_t n) {
    spec.validate();
    if (n < 2) throw std::invalid_argument("compute_alpha: n must be >= 2");
    if (spec.mode == ThresholdSpec::Mode::direct) return spec.alpha;
    return spec.delta * std::pow(std::log(static_cast<double>(n)), spec.kappa);
}

namespace {

std::size_t count_small_limited(const SamplePath& path, std::size_t step, std::size_t offset,
                                double threshold, std::size_t max_terms) {
    const std::size_t n = path.n();
    const double* y = path.values.data();
    std::size_t count = 0, terms = 0;
    for (std::size_t start = offset; start + step <= n && terms < max_terms; start += step, ++terms) {
        const double inc = y[start + step] - y[start];
        if (std::fabs(inc) <= threshold) ++count;
    }
    return count;
}

}  // namespace

std::size_t count_small(const SamplePath& path, std::size_t step, std::size_t offset, double threshold) {
    if (step < 1) throw std::invalid_argument("count_small: step must be >= 1");
    if (offset >= step) throw std::invalid_argument("count_small: offset must be < step");
    if (!(threshold > 0.0)) throw std::invalid_argument("count_small: threshold must be positive");
    return count_small_limited(path, step, offset, threshold, static_cast<std::size_t>(-1));
}

double v_n(const SamplePath& path, const ThresholdSpec& spec) {
    const double alpha = compute_alpha(spec, path.n());
    const double dn = path.delta_n();
    const double fine = alpha * std::pow(dn, spec.varpi);
    const double coarse = alpha * std::pow(static_cast<double>(spec.k) * dn, spec.varpi);
    const std::size_t uf = count_small(path, 1, 0, fine);
    const std::size_t uc = count_small(path, static_cast<std::size_t>(spec.k), 0, coarse);
    if (uc == 0) throw DegenerateStatistic("v_n: zero coarse count");
    return static_cast<double>(uf) / static_cast<double>(uc);
}

namespace {

// Counts for the offset-symmetrized ratio; u_l may legitimately be zero here.
VTildeParts v_tilde_counts(const SamplePath& path, const ThresholdSpec& spec) {
    const std::size_t n = path.n();
    const double alpha = compute_alpha(spec, n);
    const double dn = path.delta_n();
    const double fine = alpha * std::pow(dn, spec.varpi);
    const double coarse = alpha * std::pow(2.0 * dn, spec.varpi);

    VTildeParts parts;
    parts.u_fine = count_small(path, 1, 0, fine);
    parts.u_coarse = count_small(path, 2, 0, coarse);
    // the offset count runs over [T/(2*dn)] - 1 pairs
    const std::size_t offset_terms = n / 2 >= 1 ? n / 2 - 1 : 0;
    parts.u_offset = count_small_limited(path, 2, 1, coarse, offset_terms);
    parts.u_l = (static_cast<double>(parts.u_coarse) + static_cast<double>(parts.u_offset)) / 2.0;
    parts.v_tilde = parts.u_l > 0.0 ? static_cast<double>(parts.u_fine) / parts.u_l : 0.0;
    return parts;
}

}  // namespace

VTildeParts v_tilde(const SamplePath& path, const ThresholdSpec& spec) {
    if (spec.k != 2) throw std::invalid_argument("v_tilde: defined for k = 2");
    VTildeParts parts = v_tilde_counts(path, spec);
    if (parts.u_l <= 0.0) throw DegenerateStatistic("v_tilde: zero coarse count");
    return parts;
}

double sigma_tilde_sq(std::size_t u_fine, double u_l, std::size_t n, double T, double varpi) {
    if (!(u_l > 0.0)) throw DegenerateStatistic("sigma_tilde_sq: u_l must be positive");
    const double dn = T / static_cast<double>(n);
    const double pow_term = std::pow(2.0, 1.5 - varpi);
    const double num = static_cast<double>(u_fine) + pow_term * u_l / 2.0;
    return num / (std::pow(dn, 1.5 - varpi) * u_l * u_l);
}

double sigma_hat_sq(std::size_t u_fine, std::size_t n, double T, double varpi, int k) {
    if (u_fine == 0) throw DegenerateStatistic("sigma_hat_sq: zero fine count");
    const double dn = T / static_cast<double>(n);
    const double kd = static_cast<double>(k);
    return (1.0 + std::pow(kd, 1.5 - varpi)) * std::pow(kd, 3.0 - 2.0 * varpi) /
           (std::pow(dn, 1.5 - varpi) * static_cast<double>(u_fine));
}

TestReport run_test(const SamplePath& path, const ThresholdSpec& spec, double theta) {
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("run_test: theta must be in (0, 1)");
    if (spec.k != 2) throw std::invalid_argument("run_test: studentization requires k = 2");
    spec.validate();

    TestReport r;
    r.family = "count";
    r.n = path.n();
    r.T = path.T;
    r.theta = theta;
    r.alpha = compute_alpha(spec, path.n());
    r.varpi = spec.varpi;
    r.k = spec.k;
    r.critical_z = normal_quantile(1.0 - theta);

    const VTildeParts parts = v_tilde_counts(path, spec);
    r.u_fine = parts.u_fine;
    r.u_coarse = parts.u_coarse;
    r.u_offset = parts.u_offset;
    r.u_l = parts.u_l;
    if (parts.u_l <= 0.0) {  // raw counts stay attached; never a silent accept
        r.inconclusive = true;
        r.note = "inconclusive: zero coarse count";
        return r;
    }
    r.v_tilde = parts.v_tilde;
    r.sigma_tilde_sq = sigma_tilde_sq(parts.u_fine, parts.u_l, r.n, r.T, spec.varpi);
    const double dn = path.delta_n();
    const double center = std::pow(2.0, 1.5 - spec.varpi);
    r.studentized = std::pow(dn, (spec.varpi - 1.5) / 2.0) * (parts.v_tilde - center) /
                    std::sqrt(r.sigma_tilde_sq);
    r.reject_h0 = r.studentized > r.critical_z;
    return r;
}

}  // namespace purejump
