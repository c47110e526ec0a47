#include "purejump/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "purejump/csv.hpp"
#include "purejump/rng.hpp"

namespace purejump {

void ExperimentPlan::validate() const {
    if (models.empty() || ns.empty()) throw std::invalid_argument("ExperimentPlan: empty grid");
    if (replications < 1) throw std::invalid_argument("ExperimentPlan: replications must be >= 1");
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("ExperimentPlan: theta must be in (0, 1)");
    if (!(T > 0.0)) throw std::invalid_argument("ExperimentPlan: T must be positive");
    for (const auto& m : models) m.validate();
    for (auto n : ns)
        if (n < 2) throw std::invalid_argument("ExperimentPlan: n must be >= 2");
    if (family == StatFamily::count)
        threshold.validate();
    else
        aj.validate();
}

namespace {

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Splits [0, reps) across workers; the aggregate is a sum of per-replication
// contributions, so any split yields the same totals.
template <typename PerRep>
void parallel_reps(std::size_t reps, unsigned workers, PerRep&& body) {
    workers = std::min<std::size_t>(resolve_workers(workers), reps);
    if (workers <= 1) {
        for (std::size_t r = 0; r < reps; ++r) body(r);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (reps + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = static_cast<std::size_t>(w) * chunk;
        const std::size_t hi = std::min(reps, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t r = lo; r < hi; ++r) body(r);
        });
    }
    for (auto& t : pool) t.join();
}

McSummary run_cell(const ExperimentPlan& plan, const ModelSpec& model, std::size_t n,
                   std::size_t cell_index) {
    const std::size_t reps = plan.replications;
    std::vector<unsigned char> rejected(reps, 0), skipped(reps, 0);

    parallel_reps(reps, plan.workers, [&](std::size_t r) {
        const SamplePath path = simulate(model, n, plan.T, child_seed(plan.master_seed, cell_index, r));
        const TestReport report = plan.family == StatFamily::count
                                      ? run_test(path, plan.threshold, plan.theta)
                                      : aj_test(path, plan.aj, plan.theta);
        if (report.inconclusive)
            skipped[r] = 1;
        else if (report.reject_h0)
            rejected[r] = 1;
    });

    McSummary s;
    std::ostringstream key;
    key << model.label() << ";n=" << n;
    s.cell_key = key.str();
    s.replications = reps;
    for (std::size_t r = 0; r < reps; ++r) s.inconclusive += skipped[r];
    std::size_t rejects = 0;
    for (std::size_t r = 0; r < reps; ++r) rejects += rejected[r];
    const std::size_t usable = reps - s.inconclusive;
    if (usable > 0) {
        s.rejection_rate = static_cast<double>(rejects) / static_cast<double>(usable);
        s.mc_se = std::sqrt(s.rejection_rate * (1.0 - s.rejection_rate) / static_cast<double>(usable));
    }
    return s;
}

}  // namespace

std::vector<McSummary> mc_rejection_rate(const ExperimentPlan& plan) {
    plan.validate();
    std::vector<McSummary> out;
    out.reserve(plan.models.size() * plan.ns.size());
    std::size_t cell_index = 0;
    for (const auto& model : plan.models)
        for (auto n : plan.ns) out.push_back(run_cell(plan, model, n, cell_index++));
    return out;
}

namespace {

void apply_parameter(ModelSpec& m, ThresholdSpec& t, const std::string& parameter, double value) {
    if (parameter == "theta_prime")
        m.theta_prime = value;
    else if (parameter == "beta")
        m.beta = value;
    else if (parameter == "gamma_d")
        m.gamma_d = value;
    else if (parameter == "noise_sd")
        m.noise_sd = value;
    else if (parameter == "sigma")
        m.sigma = value;
    else if (parameter == "delta")
        t.delta = value;
    else if (parameter == "alpha")
        t.alpha = value;
    else
        throw std::invalid_argument("sweep: unknown parameter " + parameter);
}

}  // namespace

std::vector<McSummary> sweep(const ExperimentPlan& base, const std::string& parameter,
                             const std::vector<double>& values) {
    if (base.models.size() != 1 || base.ns.size() != 1)
        throw std::invalid_argument("sweep: base plan must have a single model and a single n");
    if (values.empty()) throw std::invalid_argument("sweep: no values");
    std::vector<McSummary> out;
    out.reserve(values.size());
    for (double v : values) {
        ExperimentPlan plan = base;
        apply_parameter(plan.models[0], plan.threshold, parameter, v);
        plan.validate();
        // cell index 0 for every value: common random numbers across the sweep
        McSummary s = run_cell(plan, plan.models[0], plan.ns[0], 0);
        s.cell_key += ";" + parameter + "=" + format_double(v);
        out.push_back(std::move(s));
    }
    return out;
}

Histogram histogram_export(const HistogramRequest& request) {
    if (request.bins < 10) throw std::invalid_argument("histogram_export: bins must be >= 10");
    request.model.validate();
    const std::size_t reps = request.replications;

    // per-replication slots keep assembly order-independent
    std::vector<std::vector<double>> slots(reps);
    std::vector<unsigned char> skipped(reps, 0);

    parallel_reps(reps, request.workers, [&](std::size_t r) {
        const SamplePath path =
            simulate(request.model, request.n, request.T, child_seed(request.master_seed, 0, r));
        switch (request.selector) {
            case StatSelector::increment: {
                std::vector<double> inc(path.n());
                for (std::size_t i = 0; i < path.n(); ++i) inc[i] = path.values[i + 1] - path.values[i];
                slots[r] = std::move(inc);
                break;
            }
            case StatSelector::v_tilde_stat:
            case StatSelector::count_studentized: {
                const TestReport rep = run_test(path, request.threshold, request.theta);
                if (rep.inconclusive)
                    skipped[r] = 1;
                else
                    slots[r] = {request.selector == StatSelector::v_tilde_stat ? rep.v_tilde
                                                                               : rep.studentized};
                break;
            }
            case StatSelector::aj_studentized: {
                const TestReport rep = aj_test(path, request.aj, request.theta);
                if (rep.inconclusive)
                    skipped[r] = 1;
                else
                    slots[r] = {rep.studentized};
                break;
            }
            case StatSelector::v_bar_stat: {
                const VBarResult res = v_bar_test(path, request.preavg);
                if (res.inconclusive)
                    skipped[r] = 1;
                else
                    slots[r] = {res.v_bar};
                break;
            }
        }
    });

    std::vector<double> samples;
    for (auto& s : slots) samples.insert(samples.end(), s.begin(), s.end());

    Histogram h;
    for (auto f : skipped) h.skipped += f;
    h.samples = samples.size();
    if (samples.empty()) throw DegenerateStatistic("histogram_export: no usable samples");

    double lo = samples[0], hi = samples[0], sum = 0.0;
    for (double v : samples) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
    }
    h.mean = sum / static_cast<double>(samples.size());
    if (hi == lo) hi = lo + 1.0;  // constant sample: one occupied bin

    const std::size_t bins = request.bins;
    h.edges.resize(bins + 1);
    h.counts.assign(bins, 0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t b = 0; b <= bins; ++b) h.edges[b] = lo + static_cast<double>(b) * width;
    for (double v : samples) {
        std::size_t b = static_cast<std::size_t>((v - lo) / width);
        if (b >= bins) b = bins - 1;
        ++h.counts[b];
    }
    return h;
}

CountTable table1_demo(std::uint64_t seed) {
    CountTable table;
    const std::size_t n = 23400;
    const std::size_t reps = 500;
    const double dn = 1.0 / static_cast<double>(n);
    const double threshold = 2.0 * dn;  // alpha = 2, varpi = 1

    for (std::size_t row = 0; row < table.betas.size(); ++row) {
        const double beta = table.betas[row];
        const ModelSpec models[3] = {
            brownian_stable_mixture(beta, 0.5, 1.0),
            [] {
                ModelSpec m;
                m.diffusion = DiffusionKind::brownian;
                m.sigma = 0.5;
                return m;
            }(),
            [beta] {
                ModelSpec m;
                m.jump = JumpKind::stable;
                m.beta = beta;
                m.theta_prime = 1.0;
                return m;
            }(),
        };
        for (std::size_t col = 0; col < 3; ++col) {
            double total = 0.0;
            for (std::size_t r = 0; r < reps; ++r) {
                const SamplePath path =
                    simulate(models[col], n, 1.0, child_seed(seed, row * 3 + col, r));
                total += static_cast<double>(count_small(path, 1, 0, threshold));
            }
            table.mean_counts[row][col] = total / static_cast<double>(reps);
        }
    }
    return table;
}

std::string to_csv(const std::vector<McSummary>& rows) {
    std::ostringstream os;
    os << "cell_key,rejection_rate,R,mc_se,inconclusive\n";
    for (const auto& r : rows)
        os << r.cell_key << ',' << format_double(r.rejection_rate) << ',' << r.replications << ','
           << format_double(r.mc_se) << ',' << r.inconclusive << '\n';
    return os.str();
}

std::string to_csv(const Histogram& h) {
    std::ostringstream os;
    os << "bin_left,bin_right,count\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b)
        os << format_double(h.edges[b]) << ',' << format_double(h.edges[b + 1]) << ',' << h.counts[b]
           << '\n';
    return os.str();
}

std::string to_csv(const CountTable& t) {
    std::ostringstream os;
    os << "beta,mixture,brownian,stable\n";
    for (std::size_t row = 0; row < t.betas.size(); ++row)
        os << format_double(t.betas[row]) << ',' << format_double(t.mean_counts[row][0]) << ','
           << format_double(t.mean_counts[row][1]) << ',' << format_double(t.mean_counts[row][2])
           << '\n';
    return os.str();
}

}  // namespace purejump
