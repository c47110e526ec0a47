#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "purejump/purejump.hpp"

namespace purejump::cli {

namespace {

double parse_clock(const std::string& text) {
    // "HH:MM" or plain seconds-from-midnight
    const auto colon = text.find(':');
    if (colon == std::string::npos) return std::stod(text);
    const int h = std::stoi(text.substr(0, colon));
    const int m = std::stoi(text.substr(colon + 1));
    return 3600.0 * h + 60.0 * m;
}

void write_text(const std::string& filename, const std::string& content) {
    std::ofstream out(filename);
    if (!out) throw std::runtime_error("cannot open " + filename);
    out << content;
}

struct SimulateArgs {
    std::string model = "h0";
    std::string config;
    double beta = 1.0;
    double theta_prime = 0.5;
    double sigma = 0.5;
    double gamma_d = 0.0;
    double noise_sd = 0.0;
    std::size_t n = 23400;
    double T = 1.0;
    std::uint64_t seed = 1;
    std::string out;
};

ModelSpec build_model(const SimulateArgs& a) {
    if (!a.config.empty()) {
        std::ifstream in(a.config);
        if (!in) throw std::runtime_error("cannot open " + a.config);
        std::ostringstream buf;
        buf << in.rdbuf();
        return model_from_json(buf.str());
    }
    ModelSpec m;
    if (a.model == "h0") {
        m = h0_mixture(a.beta, a.theta_prime);
    } else if (a.model == "h1") {
        m = h1_pure_jump(a.beta, a.gamma_d, a.theta_prime);
    } else if (a.model == "mixture") {
        m = brownian_stable_mixture(a.beta, a.sigma, a.theta_prime);
    } else if (a.model == "heston") {
        m = heston_mixture(a.beta, a.theta_prime);
    } else if (a.model == "brownian") {
        m.diffusion = DiffusionKind::brownian;
        m.sigma = a.sigma;
    } else if (a.model == "stable") {
        m.jump = JumpKind::stable;
        m.beta = a.beta;
        m.theta_prime = a.theta_prime;
    } else {
        throw std::runtime_error("unknown model preset: " + a.model);
    }
    m.noise_sd = a.noise_sd;
    return m;
}

struct ThresholdArgs {
    std::optional<double> alpha;
    double delta = 2.0;
    double kappa = 2.0;
    double varpi = 1.5;
    int k = 2;

    ThresholdSpec build() const {
        return alpha ? ThresholdSpec::direct(*alpha, varpi, k)
                     : ThresholdSpec::scaled(delta, kappa, varpi, k);
    }
};

void add_threshold_flags(CLI::App* cmd, ThresholdArgs& t) {
    cmd->add_option("--alpha", t.alpha, "direct threshold multiplier (overrides --delta/--kappa)");
    cmd->add_option("--delta", t.delta, "scaled-mode delta");
    cmd->add_option("--kappa", t.kappa, "scaled-mode kappa");
    cmd->add_option("--varpi", t.varpi, "threshold exponent");
    cmd->add_option("--k", t.k, "coarse scale multiple");
}

struct AjArgs {
    double p = AjSpec{}.p;
    double alpha_u = AjSpec{}.alpha_u;
    double rho = AjSpec{}.rho;
    int k = 2;
    std::string calibration_c = "default";

    AjSpec build() const {
        AjSpec a;
        a.p = p;
        a.alpha_u = alpha_u;
        a.rho = rho;
        a.k = k;
        if (calibration_c == "monte-carlo")
            a.calibration_c.reset();
        else if (calibration_c != "default")
            a.calibration_c = std::stod(calibration_c);
        return a;
    }
};

void add_aj_flags(CLI::App* cmd, AjArgs& a) {
    cmd->add_option("--p", a.p, "power for the truncated-variation baseline");
    cmd->add_option("--alpha-u", a.alpha_u, "truncation coefficient");
    cmd->add_option("--rho", a.rho, "truncation exponent");
    cmd->add_option("--aj-k", a.k, "baseline coarse scale multiple");
    cmd->add_option("--calibration-c", a.calibration_c,
                    "studentizer constant: a number, \"monte-carlo\", or \"default\"");
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"two-scale small-increment-count test for a Brownian component, with simulators and baselines"};
    app.require_subcommand(1);

    SimulateArgs sim_args;
    auto* sim = app.add_subcommand("simulate", "simulate a model path and write it as CSV");
    sim->add_option("--model", sim_args.model, "preset: h0, h1, mixture, heston, brownian, stable");
    sim->add_option("--config", sim_args.config, "model JSON file (overrides --model)");
    sim->add_option("--beta", sim_args.beta, "stability index");
    sim->add_option("--theta-prime", sim_args.theta_prime, "jump scale");
    sim->add_option("--sigma", sim_args.sigma, "Brownian volatility");
    sim->add_option("--gamma-d", sim_args.gamma_d, "drift decay rate");
    sim->add_option("--noise-sd", sim_args.noise_sd, "observation noise sd");
    sim->add_option("--n", sim_args.n, "number of increments");
    sim->add_option("--T", sim_args.T, "horizon");
    sim->add_option("--seed", sim_args.seed, "seed");
    sim->add_option("--out", sim_args.out, "output CSV")->required();

    struct TestArgs {
        std::string in;
        double theta = 0.05;
        std::string family = "count";
        std::string out;
    } test_args;
    ThresholdArgs test_threshold;
    AjArgs test_aj;
    auto* test = app.add_subcommand("test", "run the decision rule on a path CSV");
    test->add_option("--in", test_args.in, "input path CSV")->required();
    test->add_option("--theta", test_args.theta, "test level");
    test->add_option("--family", test_args.family, "count or aj");
    test->add_option("--out", test_args.out, "also write the report JSON here");
    add_threshold_flags(test, test_threshold);
    add_aj_flags(test, test_aj);

    struct McArgs {
        std::string plan;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> reps;
        unsigned workers = 0;
        std::string out;
    } mc_args;
    auto* mc = app.add_subcommand("mc", "run a Monte Carlo plan file");
    mc->add_option("--plan", mc_args.plan, "plan JSON file")->required();
    mc->add_option("--seed", mc_args.seed, "master seed override");
    mc->add_option("--reps", mc_args.reps, "replication count override");
    mc->add_option("--workers", mc_args.workers, "worker threads (0 = hardware)");
    mc->add_option("--out", mc_args.out, "output CSV (stdout when omitted)");

    struct PreavgArgs {
        std::string in;
        std::size_t block_size = 100;
        std::size_t gap = 50;
        std::string export_blocks;
    } pre_args;
    ThresholdArgs pre_threshold;
    pre_threshold.alpha = 9.0;
    auto* pre = app.add_subcommand("preavg", "pre-averaged two-scale ratio on a noisy path CSV");
    pre->add_option("--in", pre_args.in, "input path CSV")->required();
    pre->add_option("--block-size", pre_args.block_size, "observations per block");
    pre->add_option("--gap", pre_args.gap, "increment step inside a block");
    pre->add_option("--export-blocks", pre_args.export_blocks, "write the block averages as CSV");
    add_threshold_flags(pre, pre_threshold);

    struct AnalyzeArgs {
        std::string in;
        double interval = 10.0;
        std::string open = "09:30";
        std::string close = "16:00";
        double kappa = 2.0;
        double varpi = 1.5;
        double step = 0.1;
        double theta = 0.05;
        std::string out;
    } an_args;
    auto* an = app.add_subcommand("analyze", "tick CSV in, per-delta test statistics out");
    an->add_option("--in", an_args.in, "tick CSV (timestamp,price)")->required();
    an->add_option("--interval", an_args.interval, "sampling interval in seconds");
    an->add_option("--open", an_args.open, "session open (HH:MM or seconds)");
    an->add_option("--close", an_args.close, "session close (HH:MM or seconds)");
    an->add_option("--kappa", an_args.kappa, "threshold kappa");
    an->add_option("--varpi", an_args.varpi, "threshold exponent");
    an->add_option("--step", an_args.step, "delta grid step");
    an->add_option("--theta", an_args.theta, "test level");
    an->add_option("--out", an_args.out, "per-delta CSV output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (sim->parsed()) {
            const ModelSpec model = build_model(sim_args);
            const SamplePath path = simulate(model, sim_args.n, sim_args.T, sim_args.seed);
            write_path_csv_file(sim_args.out, path);
            return 0;
        }

        if (test->parsed()) {
            const SamplePath path = read_path_csv_file(test_args.in);
            TestReport report;
            if (test_args.family == "count") {
                report = run_test(path, test_threshold.build(), test_args.theta);
            } else if (test_args.family == "aj") {
                const AjSpec spec = test_aj.build();
                if (spec.consistency_warning())
                    std::cerr << "note: rho > (p-1)/p; the pure-jump limit of S_n is not guaranteed\n";
                report = aj_test(path, spec, test_args.theta);
            } else {
                throw std::runtime_error("unknown family: " + test_args.family);
            }
            const std::string json = report_to_json(report);
            std::cout << json << '\n';
            if (!test_args.out.empty()) write_text(test_args.out, json + "\n");
            return 0;
        }

        if (mc->parsed()) {
            PlanConfig cfg = plan_from_json_file(mc_args.plan);
            if (mc_args.seed) cfg.plan.master_seed = *mc_args.seed;
            if (mc_args.reps) cfg.plan.replications = *mc_args.reps;
            cfg.plan.workers = mc_args.workers;
            cfg.histogram.master_seed = cfg.plan.master_seed;
            cfg.histogram.replications = cfg.plan.replications;
            cfg.histogram.workers = mc_args.workers;

            std::string csv;
            switch (cfg.kind) {
                case PlanConfig::Kind::grid:
                    csv = to_csv(mc_rejection_rate(cfg.plan));
                    break;
                case PlanConfig::Kind::sweep:
                    csv = to_csv(sweep(cfg.plan, cfg.sweep_parameter, cfg.sweep_values));
                    break;
                case PlanConfig::Kind::histogram:
                    csv = to_csv(histogram_export(cfg.histogram));
                    break;
                case PlanConfig::Kind::table1:
                    csv = to_csv(table1_demo(cfg.plan.master_seed));
                    break;
            }
            if (mc_args.out.empty())
                std::cout << csv;
            else
                write_text(mc_args.out, csv);
            return 0;
        }

        if (pre->parsed()) {
            const SamplePath path = read_path_csv_file(pre_args.in);
            PreAvgSpec spec;
            spec.block_size = pre_args.block_size;
            spec.gap = pre_args.gap;
            spec.threshold = pre_threshold.build();
            const VBarResult res = v_bar_test(path, spec);
            std::cout << "{\"v_bar\":" << format_double(res.v_bar) << ",\"u_fine\":" << res.u_fine
                      << ",\"u_coarse\":" << res.u_coarse << ",\"blocks\":" << res.blocks
                      << ",\"delta_eff\":" << format_double(res.delta_eff)
                      << ",\"inconclusive\":" << (res.inconclusive ? "true" : "false") << "}\n";
            if (!pre_args.export_blocks.empty()) {
                const PreAveraged blocks = preaverage_blocks(path, spec);
                std::ostringstream os;
                os << "block,zbar\n";
                for (std::size_t j = 0; j < blocks.zbar.size(); ++j)
                    os << j + 1 << ',' << format_double(blocks.zbar[j]) << '\n';
                write_text(pre_args.export_blocks, os.str());
            }
            return 0;
        }

        if (an->parsed()) {
            const TickSeries ticks = load_ticks_file(an_args.in);
            Session session{parse_clock(an_args.open), parse_clock(an_args.close)};
            const SamplePath path = regularize(ticks, an_args.interval, session);
            const DeltaGrid grid = delta_grid(path, an_args.kappa, an_args.varpi, an_args.step);
            if (grid.empty()) throw std::runtime_error("empty delta grid (sigma_star is zero or step too large)");
            const auto results = analyze_day(path, grid, an_args.theta);

            std::ostringstream os;
            os << "delta,statistic,critical,reject\n";
            std::size_t rejects = 0;
            for (const auto& r : results) {
                os << format_double(r.delta) << ',' << format_double(r.report.studentized) << ','
                   << format_double(r.report.critical_z) << ',' << (r.report.reject_h0 ? 1 : 0) << '\n';
                rejects += r.report.reject_h0 ? 1 : 0;
            }
            write_text(an_args.out, os.str());
            std::cout << "{\"n\":" << path.n() << ",\"sigma_star_sq\":" << format_double(grid.sigma_star_sq)
                      << ",\"grid_size\":" << grid.deltas.size() << ",\"rejections\":" << rejects
                      << ",\"studentization\":\"offset-symmetrized\"}\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace purejump::cli
