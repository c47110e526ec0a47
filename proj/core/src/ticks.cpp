#include "purejump/ticks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

namespace purejump {

namespace {

void strip_cr(std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end == text.c_str() + text.size() && std::isfinite(out);
}

}  // namespace

TickSeries load_ticks(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw LoadError("load_ticks: empty input");
    strip_cr(line);
    if (line != "timestamp,price")
        throw LoadError("load_ticks: expected header \"timestamp,price\", got \"" + line + "\"");

    TickSeries series;
    std::vector<std::size_t> bad_lines;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        double ts = 0.0, price = 0.0;
        const bool ok = comma != std::string::npos &&
                        parse_double(line.substr(0, comma), ts) &&
                        parse_double(line.substr(comma + 1), price) && price > 0.0;
        if (!ok) {
            bad_lines.push_back(line_no);
            continue;
        }
        series.records.push_back({ts, price});
    }
    if (!bad_lines.empty()) {
        std::ostringstream os;
        os << "load_ticks: rejected " << bad_lines.size() << " row(s) at line";
        os << (bad_lines.size() > 1 ? "s " : " ");
        for (std::size_t i = 0; i < bad_lines.size(); ++i) os << (i ? "," : "") << bad_lines[i];
        throw LoadError(os.str());
    }
    if (series.records.empty()) throw LoadError("load_ticks: no data rows");
    std::stable_sort(series.records.begin(), series.records.end(),
                     [](const TickRecord& a, const TickRecord& b) { return a.timestamp < b.timestamp; });
    return series;
}

TickSeries load_ticks_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw LoadError("load_ticks: cannot open " + filename);
    return load_ticks(in);
}

SamplePath regularize(const TickSeries& ticks, double interval, const Session& session) {
    if (!(interval > 0.0)) throw std::invalid_argument("regularize: interval must be positive");
    if (!(session.close > session.open)) throw std::invalid_argument("regularize: empty session");

    // collapse identical timestamps to their average price
    std::vector<TickRecord> clean;
    clean.reserve(ticks.records.size());
    for (std::size_t i = 0; i < ticks.records.size();) {
        const double ts = ticks.records[i].timestamp;
        double sum = 0.0;
        std::size_t j = i;
        for (; j < ticks.records.size() && ticks.records[j].timestamp == ts; ++j)
            sum += ticks.records[j].price;
        clean.push_back({ts, sum / static_cast<double>(j - i)});
        i = j;
    }

    const std::size_t grid_points = static_cast<std::size_t>(
        std::floor((session.close - session.open) / interval)) + 1;
    if (grid_points < 3) throw std::invalid_argument("regularize: grid has fewer than 3 points");

    std::vector<double> values(grid_points);
    std::size_t cursor = 0;
    bool have_price = false;
    double last_price = 0.0;
    for (std::size_t g = 0; g < grid_points; ++g) {
        const double t = session.open + static_cast<double>(g) * interval;
        while (cursor < clean.size() && clean[cursor].timestamp <= t) {
            last_price = clean[cursor].price;
            have_price = true;
            ++cursor;
        }
        if (!have_price)
            throw std::invalid_argument("regularize: no tick at or before the first grid time");
        values[g] = std::log(last_price);
    }
    return SamplePath(1.0, std::move(values));  // T = 1 trading day
}

double sigma_star_sq(const SamplePath& path) {
    const std::size_t n = path.n();
    const double dn = path.delta_n();
    const double cutoff = std::pow(dn, 0.25);
    const double* y = path.values.data();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double inc = y[i + 1] - y[i];
        if (std::fabs(inc) <= cutoff) sum += inc * inc;
    }
    return sum / path.T;
}

DeltaGrid delta_grid(const SamplePath& path, double kappa, double varpi, double step) {
    if (!(kappa >= 0.0)) throw std::invalid_argument("delta_grid: kappa must be >= 0");
    if (!(varpi > 0.5)) throw std::invalid_argument("delta_grid: varpi must exceed 1/2");
    if (!(step > 0.0)) throw std::invalid_argument("delta_grid: step must be positive");

    DeltaGrid grid;
    grid.kappa = kappa;
    grid.varpi = varpi;
    grid.sigma_star_sq = sigma_star_sq(path);
    const double sigma_star = std::sqrt(grid.sigma_star_sq);
    if (sigma_star == 0.0) return grid;  // empty; caller decides

    const double n = static_cast<double>(path.n());
    const double dn = path.delta_n();
    const double delta_max = sigma_star * std::pow(dn, 0.5 - varpi) / std::pow(std::log(n), kappa);
    for (std::size_t i = 1;; ++i) {
        const double d = static_cast<double>(i) * step;
        if (d > delta_max) break;
        grid.deltas.push_back(d);
    }
    return grid;
}

std::vector<DayResult> analyze_day(const SamplePath& path, const DeltaGrid& grid, double theta) {
    if (grid.empty()) throw std::invalid_argument("analyze_day: empty delta grid");
    std::vector<DayResult> out;
    out.reserve(grid.deltas.size());
    for (double d : grid.deltas) {
        const ThresholdSpec spec = ThresholdSpec::scaled(d, grid.kappa, grid.varpi, 2);
        out.push_back({d, run_test(path, spec, theta)});
    }
    return out;
}

}  // namespace purejump
