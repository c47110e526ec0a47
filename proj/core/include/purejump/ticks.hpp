#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "purejump/path.hpp"
#include "purejump/teststat.hpp"

namespace purejump {

struct TickRecord {
    double timestamp = 0.0;  // seconds from midnight, fractional part allowed
    double price = 0.0;
};

struct TickSeries {
    std::vector<TickRecord> records;  // nondecreasing timestamps after load
};

struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CSV with header "timestamp,price". Malformed or nonpositive-price rows are
// collected and reported together, with 1-based line numbers. Out-of-order
// rows are accepted and stably sorted.
TickSeries load_ticks(std::istream& in);
TickSeries load_ticks_file(const std::string& filename);

struct Session {
    double open = 34200.0;   // 09:30
    double close = 57600.0;  // 16:00
};

// (1) average prices recorded at identical timestamps, (2) previous-tick sample
// at open, open+interval, ..., (3) take logs. T is normalized to 1 trading day.
SamplePath regularize(const TickSeries& ticks, double interval, const Session& session = Session{});

// (1/T) * sum of squared increments no larger than dn^{1/4}; a jump-robust
// proxy for the average diffusion variance.
double sigma_star_sq(const SamplePath& path);

struct DeltaGrid {
    std::vector<double> deltas;  // ascending; every delta*(ln n)^kappa*dn^varpi <= sigma_star*dn^(1/2)
    double kappa = 2.0;
    double varpi = 1.5;
    double sigma_star_sq = 0.0;

    bool empty() const { return deltas.empty(); }
};

// Admissible thresholds {step, 2*step, ...} up to
// sigma_star * dn^{1/2 - varpi} / (ln n)^kappa.
DeltaGrid delta_grid(const SamplePath& path, double kappa, double varpi, double step);

struct DayResult {
    double delta = 0.0;
    TestReport report;
};

// Runs the two-scale count test once per grid delta.
std::vector<DayResult> analyze_day(const SamplePath& path, const DeltaGrid& grid, double theta);

}  // namespace purejump
