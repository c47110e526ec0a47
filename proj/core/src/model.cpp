#include "purejump/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "purejump/rng.hpp"
#include "purejump/stable.hpp"

namespace purejump {

void ModelSpec::validate() const {
    if (diffusion == DiffusionKind::none && drift == DriftKind::none && jump == JumpKind::none)
        throw std::invalid_argument("ModelSpec: at least one of diffusion/drift/jump must be set");
    if (jump == JumpKind::stable) {
        if (!(beta > 0.0 && beta <= 2.0)) throw std::invalid_argument("ModelSpec: beta must be in (0, 2]");
        if (!(theta_prime >= 0.0)) throw std::invalid_argument("ModelSpec: theta_prime must be >= 0");
    }
    if (diffusion == DiffusionKind::brownian && !(sigma > 0.0))
        throw std::invalid_argument("ModelSpec: sigma must be positive");
    if (diffusion == DiffusionKind::heston) {
        const auto& h = heston;
        if (!(h.eta > 0.0 && h.kappa_v > 0.0 && h.gamma >= 0.0 && h.v0 >= 0.0 && h.rho >= -1.0 && h.rho <= 1.0))
            throw std::invalid_argument("ModelSpec: bad Heston parameters");
    }
    if (!(noise_sd >= 0.0)) throw std::invalid_argument("ModelSpec: noise_sd must be >= 0");
}

std::string ModelSpec::label() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << '+';
        first = false;
    };
    switch (diffusion) {
        case DiffusionKind::none: break;
        case DiffusionKind::brownian:
            sep();
            os << "bm(sigma=" << sigma << ")";
            break;
        case DiffusionKind::ou:
            sep();
            os << "ou";
            break;
        case DiffusionKind::heston:
            sep();
            os << "heston(eta=" << heston.eta << " gamma=" << heston.gamma << " kappa=" << heston.kappa_v
               << " rho=" << heston.rho << ")";
            break;
    }
    if (drift == DriftKind::exp_decay) {
        sep();
        os << "drift(gamma=" << gamma_d << ")";
    }
    if (jump == JumpKind::stable) {
        sep();
        os << "stable(beta=" << beta << " scale=" << theta_prime << ")";
    }
    if (noise_sd > 0.0) os << "+noise(sd=" << noise_sd << ")";
    return os.str();
}

ModelSpec h0_mixture(double beta, double theta_prime) {
    ModelSpec m;
    m.diffusion = DiffusionKind::ou;
    m.jump = JumpKind::stable;
    m.beta = beta;
    m.theta_prime = theta_prime;
    return m;
}

ModelSpec h1_pure_jump(double beta, double gamma_d, double theta_prime) {
    ModelSpec m;
    m.drift = DriftKind::exp_decay;
    m.gamma_d = gamma_d;
    m.jump = JumpKind::stable;
    m.beta = beta;
    m.theta_prime = theta_prime;
    return m;
}

ModelSpec brownian_stable_mixture(double beta, double sigma, double theta_prime) {
    ModelSpec m;
    m.diffusion = DiffusionKind::brownian;
    m.sigma = sigma;
    m.jump = JumpKind::stable;
    m.beta = beta;
    m.theta_prime = theta_prime;
    return m;
}

ModelSpec heston_mixture(double beta, double theta_prime) {
    ModelSpec m;
    m.diffusion = DiffusionKind::heston;
    m.jump = JumpKind::stable;
    m.beta = beta;
    m.theta_prime = theta_prime;
    return m;
}

namespace {

// Fills `x` (levels, x[0] = 0) and optionally the truncated variance path.
void simulate_diffusion(const ModelSpec& model, std::size_t n, double T, Rng& rng,
                        std::vector<double>& x, std::vector<double>* vplus_out) {
    const double dn = T / static_cast<double>(n);
    x.assign(n + 1, 0.0);
    switch (model.diffusion) {
        case DiffusionKind::none:
            break;
        case DiffusionKind::brownian: {
            const double s = model.sigma * std::sqrt(dn);
            for (std::size_t i = 1; i <= n; ++i) x[i] = x[i - 1] + s * rng.normal();
            break;
        }
        case DiffusionKind::ou: {
            // dX = -X dt + dW, exact Gaussian transition from X_0 = 0
            const double e = std::exp(-dn);
            const double s = std::sqrt((1.0 - e * e) / 2.0);
            for (std::size_t i = 1; i <= n; ++i) x[i] = x[i - 1] * e + s * rng.normal();
            break;
        }
        case DiffusionKind::heston: {
            const auto& h = model.heston;
            const double sq = std::sqrt(dn);
            const double rc = std::sqrt(1.0 - h.rho * h.rho);
            double v = h.v0;
            if (vplus_out) vplus_out->assign(n + 1, 0.0);
            if (vplus_out) (*vplus_out)[0] = std::max(v, 0.0);
            for (std::size_t i = 1; i <= n; ++i) {
                const double vp = std::max(v, 0.0);
                const double sv = std::sqrt(vp);
                const double z1 = rng.normal();
                const double z2 = rng.normal();
                x[i] = x[i - 1] + sv * sq * z1;
                v += h.kappa_v * (h.eta - vp) * dn + h.gamma * sv * sq * (h.rho * z1 + rc * z2);
                if (vplus_out) (*vplus_out)[i] = std::max(v, 0.0);
            }
            break;
        }
    }
}

}  // namespace

SamplePath simulate(const ModelSpec& model, std::size_t n, double T, std::uint64_t seed) {
    model.validate();
    if (n < 2) throw std::invalid_argument("simulate: n must be >= 2");
    if (!(T > 0.0)) throw std::invalid_argument("simulate: T must be positive");

    Rng rng(seed);
    const double dn = T / static_cast<double>(n);

    std::vector<double> y;
    simulate_diffusion(model, n, T, rng, y, nullptr);

    if (model.drift == DriftKind::exp_decay) {
        for (std::size_t i = 0; i <= n; ++i)
            y[i] += std::exp(-model.gamma_d * (static_cast<double>(i) * dn));
    }

    if (model.jump == JumpKind::stable) {
        const double scale = model.theta_prime * std::pow(dn, 1.0 / model.beta);
        double level = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            level += stable_draw(rng, model.beta, scale);
            y[i] += level;
        }
    }

    if (model.noise_sd > 0.0)
        for (auto& v : y) v += model.noise_sd * rng.normal();

    return SamplePath(T, std::move(y));
}

SamplePath heston_variance_path(const ModelSpec& model, std::size_t n, double T, std::uint64_t seed) {
    if (model.diffusion != DiffusionKind::heston)
        throw std::invalid_argument("heston_variance_path: model has no Heston component");
    model.validate();
    Rng rng(seed);
    std::vector<double> x, vplus;
    simulate_diffusion(model, n, T, rng, x, &vplus);
    return SamplePath(T, std::move(vplus));
}

SamplePath add_noise(const SamplePath& path, double noise_sd, std::uint64_t seed) {
    if (!(noise_sd >= 0.0)) throw std::invalid_argument("add_noise: noise_sd must be >= 0");
    SamplePath out = path;
    if (noise_sd == 0.0) return out;
    Rng rng(seed);
    for (auto& v : out.values) v += noise_sd * rng.normal();
    return out;
}

}  // namespace purejump
