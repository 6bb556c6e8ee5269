#include "guposc/oscillator.hpp"
#include "guposc/specfun.hpp"

#include <cmath>

namespace guposc {

namespace {

// ln cos(xi), stable for lambda * ln cos with lambda up to ~1e8:
// cos(xi) = 1 - 2 sin^2(xi/2) exactly.
double ln_cos(double xi) {
    const double s = std::sin(0.5 * xi);
    return std::log1p(-2.0 * s * s);
}

// ln Gamma(x+1/2) - ln Gamma(x); asymptotic branch keeps full precision when
// the two lgamma values are large enough to lose bits in the subtraction.
double ln_gamma_half_step(double x) {
    if (x < 1e4)
        return specfun::ln_gamma(x + 0.5) - specfun::ln_gamma(x);
    const double inv = 1.0 / x;
    return 0.5 * std::log(x) - 0.125 * inv + inv * inv * inv / 192.0;
}

constexpr double kLnUnderflow = -760.0;   // exp() underflows well below this

} // namespace

void GupParams::validate() const {
    const bool ok = std::isfinite(m) && m > 0.0 && std::isfinite(omega) && omega > 0.0 &&
                    std::isfinite(hbar) && hbar > 0.0 && std::isfinite(beta) && beta > 0.0;
    if (!ok) throw std::invalid_argument("GupParams: m, omega, hbar, beta must be finite and > 0");
}

double GupParams::band_halfwidth() const {
    return M_PI / (2.0 * std::sqrt(beta));
}

double lambda_param(const GupParams& params) {
    params.validate();
    const double eta = params.eta();
    return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 / (eta * eta)));
}

double energy(const GupParams& params, int n) {
    params.validate();
    if (n < 0) throw std::domain_error("energy: n must be >= 0");
    const double eta = params.eta();
    const double hw = params.hbar * params.omega;
    return hw * (n + 0.5) * (std::sqrt(1.0 + 0.25 * eta * eta) + 0.5 * eta) +
           0.5 * hw * eta * static_cast<double>(n) * n;
}

double norm_const(const GupParams& params, int n) {
    params.validate();
    if (n < 0) throw std::domain_error("norm_const: n must be >= 0");
    const double L = lambda_param(params);
    // N_n^2 = sqrt(beta) n! (n+L) Gamma(L)^2 / (pi 2^{1-2L} Gamma(n+2L));
    // the Legendre duplication formula turns Gamma(2L)/Gamma(L)^2 into a
    // half-step ratio, which stays accurate for L up to ~1e8.
    double shift = 0.0;
    for (int j = 0; j < n; ++j) shift += std::log(2.0 * L + j);
    const double ln_n2 = 0.5 * std::log(params.beta) + specfun::ln_gamma(n + 1.0) +
                         std::log(n + L) - 0.5 * std::log(M_PI) - shift -
                         ln_gamma_half_step(L);
    return std::exp(0.5 * ln_n2);
}

EigenState::EigenState(const GupParams& params, int n) : params_(params), n_(n) {
    params.validate();
    if (n < 0) throw std::domain_error("EigenState: n must be >= 0");
    lambda_ = lambda_param(params);
    energy_ = guposc::energy(params, n);
    norm_ = guposc::norm_const(params, n);
    ln_norm_ = std::log(norm_);
    p_max_ = params.band_halfwidth();

    // smallest xi with lambda ln cos(xi) < underflow threshold
    double lo = 0.0, hi = M_PI / 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        (lambda_ * ln_cos(mid) < kLnUnderflow ? hi : lo) = mid;
    }
    p_support_ = std::min(p_max_, hi / std::sqrt(params.beta));
}

double EigenState::phi(double p) const { return phi_eval(*this, p); }

double phi_eval(const EigenState& state, double p) {
    const double xi = std::sqrt(state.params_.beta) * p;
    if (std::abs(xi) >= M_PI / 2.0 * (1.0 - 1e-15)) return 0.0;
    const double c = specfun::gegenbauer(specfun::PolyOrder(state.n_),
                                         specfun::GegenbauerIndex(state.lambda_), std::sin(xi));
    if (c == 0.0) return 0.0;
    const double ln_mag = state.ln_norm_ + state.lambda_ * ln_cos(xi) + std::log(std::abs(c));
    return std::copysign(std::exp(ln_mag), c);
}

double phi_eval_relhermite(const EigenState& state, double p) {
    const double xi = std::sqrt(state.params_.beta) * p;
    if (std::abs(xi) >= M_PI / 2.0 * (1.0 - 1e-15)) return 0.0;
    const int n = state.n_;
    const double L = state.lambda_;
    const double h = specfun::rel_hermite(specfun::PolyOrder(n), specfun::GegenbauerIndex(L),
                                          std::sqrt(L) * std::tan(xi));
    if (h == 0.0) return 0.0;
    const double ln_mag = state.ln_norm_ + 0.5 * n * std::log(L) - specfun::ln_gamma(n + 1.0) +
                          (L + n) * ln_cos(xi) + std::log(std::abs(h));
    return std::copysign(std::exp(ln_mag), h);
}

double ordinary_energy(const GupParams& params, int n) {
    if (n < 0) throw std::domain_error("ordinary_energy: n must be >= 0");
    return params.hbar * params.omega * (n + 0.5);
}

namespace {

double gauss_hermite_mode(double scale, int n, double coord) {
    const double t = coord / scale;
    const double ln_norm = -0.25 * std::log(M_PI * scale * scale) -
                           0.5 * (n * std::log(2.0) + specfun::ln_gamma(n + 1.0));
    return std::exp(ln_norm - 0.5 * t * t) * specfun::hermite(specfun::PolyOrder(n), t);
}

} // namespace

double ordinary_phi(const GupParams& params, int n, double p) {
    if (n < 0) throw std::domain_error("ordinary_phi: n must be >= 0");
    return gauss_hermite_mode(std::sqrt(params.m * params.omega * params.hbar), n, p);
}

double ordinary_psi(const GupParams& params, int n, double x) {
    if (n < 0) throw std::domain_error("ordinary_psi: n must be >= 0");
    return gauss_hermite_mode(std::sqrt(params.hbar / (params.m * params.omega)), n, x);
}

} // namespace guposc
