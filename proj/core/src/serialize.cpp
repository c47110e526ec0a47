#include "purejump/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace purejump {

using nlohmann::json;

std::string report_to_json(const TestReport& r) {
    json j;
    j["family"] = r.family;
    j["inconclusive"] = r.inconclusive;
    if (!r.note.empty()) j["note"] = r.note;
    j["n"] = r.n;
    j["T"] = r.T;
    j["theta"] = r.theta;
    j["critical_z"] = r.critical_z;
    j["studentized"] = r.studentized;
    j["reject_h0"] = r.reject_h0;
    if (r.family == "count") {
        j["alpha"] = r.alpha;
        j["varpi"] = r.varpi;
        j["k"] = r.k;
        j["u_fine"] = r.u_fine;
        j["u_coarse"] = r.u_coarse;
        j["u_offset"] = r.u_offset;
        j["u_l"] = r.u_l;
        j["v_tilde"] = r.v_tilde;
        j["sigma_tilde_sq"] = r.sigma_tilde_sq;
    } else {
        j["p"] = r.p;
        j["k"] = r.k;
        j["u_n"] = r.u_n;
        j["b_fine"] = r.b_fine;
        j["b_coarse"] = r.b_coarse;
        j["b_2p"] = r.b_2p;
        j["s_n"] = r.s_n;
        j["v_n_sq"] = r.v_n_sq;
        j["calibration_c"] = r.calibration_c;
    }
    return j.dump();
}

namespace {

ModelSpec model_from_node(const json& j) {
    if (j.contains("preset")) {
        const std::string preset = j.at("preset").get<std::string>();
        const double beta = j.value("beta", 1.0);
        if (preset == "h0") return h0_mixture(beta, j.value("theta_prime", 0.5));
        if (preset == "h1")
            return h1_pure_jump(beta, j.value("gamma_d", 0.0), j.value("theta_prime", 0.5));
        if (preset == "mixture")
            return brownian_stable_mixture(beta, j.value("sigma", 0.5), j.value("theta_prime", 1.0));
        if (preset == "heston") {
            ModelSpec m = heston_mixture(beta, j.value("theta_prime", 0.25));
            if (j.contains("eta")) m.heston.eta = j.at("eta").get<double>();
            if (j.contains("gamma")) m.heston.gamma = j.at("gamma").get<double>();
            if (j.contains("kappa_v")) m.heston.kappa_v = j.at("kappa_v").get<double>();
            if (j.contains("rho")) m.heston.rho = j.at("rho").get<double>();
            if (j.contains("v0")) m.heston.v0 = j.at("v0").get<double>();
            return m;
        }
        throw std::invalid_argument("model: unknown preset " + preset);
    }

    ModelSpec m;
    if (j.contains("diffusion")) {
        const auto& d = j.at("diffusion");
        const std::string type = d.at("type").get<std::string>();
        if (type == "brownian") {
            m.diffusion = DiffusionKind::brownian;
            m.sigma = d.value("sigma", 1.0);
        } else if (type == "ou") {
            m.diffusion = DiffusionKind::ou;
        } else if (type == "heston") {
            m.diffusion = DiffusionKind::heston;
            m.heston.eta = d.value("eta", 1.0 / 16.0);
            m.heston.gamma = d.value("gamma", 0.5);
            m.heston.kappa_v = d.value("kappa_v", 5.0);
            m.heston.rho = d.value("rho", -0.5);
            m.heston.v0 = d.value("v0", m.heston.eta);
        } else if (type != "none") {
            throw std::invalid_argument("model: unknown diffusion type " + type);
        }
    }
    if (j.contains("drift")) {
        const auto& d = j.at("drift");
        const std::string type = d.at("type").get<std::string>();
        if (type == "exp_decay") {
            m.drift = DriftKind::exp_decay;
            m.gamma_d = d.value("gamma", 0.0);
        } else if (type != "none") {
            throw std::invalid_argument("model: unknown drift type " + type);
        }
    }
    if (j.contains("jump")) {
        const auto& d = j.at("jump");
        const std::string type = d.at("type").get<std::string>();
        if (type == "stable") {
            m.jump = JumpKind::stable;
            m.beta = d.at("beta").get<double>();
            m.theta_prime = d.value("scale", 0.5);
        } else if (type != "none") {
            throw std::invalid_argument("model: unknown jump type " + type);
        }
    }
    m.noise_sd = j.value("noise_sd", 0.0);
    return m;
}

json model_to_node(const ModelSpec& m) {
    json j;
    switch (m.diffusion) {
        case DiffusionKind::none: break;
        case DiffusionKind::brownian:
            j["diffusion"] = {{"type", "brownian"}, {"sigma", m.sigma}};
            break;
        case DiffusionKind::ou:
            j["diffusion"] = {{"type", "ou"}};
            break;
        case DiffusionKind::heston:
            j["diffusion"] = {{"type", "heston"}, {"eta", m.heston.eta},     {"gamma", m.heston.gamma},
                              {"kappa_v", m.heston.kappa_v}, {"rho", m.heston.rho}, {"v0", m.heston.v0}};
            break;
    }
    if (m.drift == DriftKind::exp_decay) j["drift"] = {{"type", "exp_decay"}, {"gamma", m.gamma_d}};
    if (m.jump == JumpKind::stable)
        j["jump"] = {{"type", "stable"}, {"beta", m.beta}, {"scale", m.theta_prime}};
    if (m.noise_sd > 0.0) j["noise_sd"] = m.noise_sd;
    return j;
}

ThresholdSpec threshold_from_node(const json& j) {
    ThresholdSpec t;
    const std::string mode = j.value("mode", "scaled");
    if (mode == "direct") {
        t = ThresholdSpec::direct(j.at("alpha").get<double>(), j.value("varpi", 1.5), j.value("k", 2));
    } else if (mode == "scaled") {
        t = ThresholdSpec::scaled(j.value("delta", 2.0), j.value("kappa", 2.0), j.value("varpi", 1.5),
                                  j.value("k", 2));
    } else {
        throw std::invalid_argument("threshold: unknown mode " + mode);
    }
    return t;
}

AjSpec aj_from_node(const json& j) {
    AjSpec a;
    a.p = j.value("p", a.p);
    a.alpha_u = j.value("alpha_u", a.alpha_u);
    a.rho = j.value("rho", a.rho);
    a.k = j.value("k", a.k);
    if (j.contains("calibration_c")) {
        const auto& c = j.at("calibration_c");
        if (c.is_string()) {
            if (c.get<std::string>() != "monte-carlo")
                throw std::invalid_argument("aj: calibration_c must be a number or \"monte-carlo\"");
            a.calibration_c.reset();
        } else {
            a.calibration_c = c.get<double>();
        }
    }
    return a;
}

StatSelector selector_from_name(const std::string& name) {
    if (name == "increment") return StatSelector::increment;
    if (name == "v_tilde") return StatSelector::v_tilde_stat;
    if (name == "studentized") return StatSelector::count_studentized;
    if (name == "aj_studentized") return StatSelector::aj_studentized;
    if (name == "v_bar") return StatSelector::v_bar_stat;
    throw std::invalid_argument("histogram: unknown selector " + name);
}

}  // namespace

std::string model_to_json(const ModelSpec& model) { return model_to_node(model).dump(); }

ModelSpec model_from_json(const std::string& text) {
    ModelSpec m = model_from_node(json::parse(text));
    m.validate();
    return m;
}

PlanConfig plan_from_json(const std::string& text) {
    const json j = json::parse(text);
    PlanConfig cfg;

    const std::string kind = j.value("kind", "grid");
    if (kind == "grid")
        cfg.kind = PlanConfig::Kind::grid;
    else if (kind == "sweep")
        cfg.kind = PlanConfig::Kind::sweep;
    else if (kind == "histogram")
        cfg.kind = PlanConfig::Kind::histogram;
    else if (kind == "table1")
        cfg.kind = PlanConfig::Kind::table1;
    else
        throw std::invalid_argument("plan: unknown kind " + kind);

    ExperimentPlan& plan = cfg.plan;
    if (j.contains("models"))
        for (const auto& node : j.at("models")) plan.models.push_back(model_from_node(node));
    if (j.contains("ns"))
        for (const auto& node : j.at("ns")) plan.ns.push_back(node.get<std::size_t>());
    plan.T = j.value("T", 1.0);
    plan.theta = j.value("theta", 0.05);
    plan.replications = j.value("replications", std::size_t{2000});
    plan.master_seed = j.value("master_seed", std::uint64_t{1});
    const std::string family = j.value("family", "count");
    if (family == "count")
        plan.family = StatFamily::count;
    else if (family == "aj")
        plan.family = StatFamily::aj;
    else
        throw std::invalid_argument("plan: unknown family " + family);
    if (j.contains("threshold")) plan.threshold = threshold_from_node(j.at("threshold"));
    if (j.contains("aj")) plan.aj = aj_from_node(j.at("aj"));

    if (cfg.kind == PlanConfig::Kind::sweep) {
        const auto& s = j.at("sweep");
        cfg.sweep_parameter = s.at("parameter").get<std::string>();
        for (const auto& v : s.at("values")) cfg.sweep_values.push_back(v.get<double>());
    }
    if (cfg.kind == PlanConfig::Kind::histogram) {
        const auto& h = j.at("histogram");
        HistogramRequest& req = cfg.histogram;
        if (plan.models.size() != 1 || plan.ns.size() != 1)
            throw std::invalid_argument("plan: histogram needs exactly one model and one n");
        req.model = plan.models[0];
        req.n = plan.ns[0];
        req.T = plan.T;
        req.selector = selector_from_name(h.value("selector", "v_tilde"));
        req.bins = h.value("bins", std::size_t{50});
        req.replications = plan.replications;
        req.master_seed = plan.master_seed;
        req.threshold = plan.threshold;
        req.aj = plan.aj;
        req.theta = plan.theta;
        if (h.contains("preavg")) {
            const auto& p = h.at("preavg");
            req.preavg.block_size = p.value("block_size", req.preavg.block_size);
            req.preavg.gap = p.value("gap", req.preavg.gap);
            if (p.contains("threshold")) req.preavg.threshold = threshold_from_node(p.at("threshold"));
        }
    }
    return cfg;
}

PlanConfig plan_from_json_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw std::runtime_error("plan: cannot open " + filename);
    std::ostringstream buf;
    buf << in.rdbuf();
    return plan_from_json(buf.str());
}

}  // namespace purejump
