#include "guposc/transform.hpp"
#include "guposc/quadrature.hpp"
#include "guposc/specfun.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace guposc {

namespace {

const std::vector<double>* g_gl16_x = nullptr;
const std::vector<double>* g_gl16_w = nullptr;

void init_gl16() {
    static std::once_flag once;
    std::call_once(once, [] {
        auto* x = new std::vector<double>;
        auto* w = new std::vector<double>;
        quadrature::gauss_legendre(16, *x, *w);
        g_gl16_x = x;
        g_gl16_w = w;
    });
}

// sin(pi t / 2) / t with its limit pi/2 at t = 0
double half_sinc(double t) {
    const double z = M_PI * t / 2.0;
    if (std::abs(z) < 1e-8) return (M_PI / 2.0) * (1.0 - z * z / 6.0);
    return std::sin(z) / t;
}

void require_unit_hbar(const GupParams& params, const char* who) {
    if (params.hbar != 1.0)
        throw std::invalid_argument(std::string(who) + ": closed form is stated for hbar = 1");
}

// ln of the shared prefactor piece Gamma(lambda)^2 / Gamma(2 lambda), via the
// duplication formula so it stays finite-precision at large lambda.
double ln_gamma_sq_over_gamma2(double L) {
    double half_step;   // ln Gamma(L+1/2) - ln Gamma(L)
    if (L < 1e4) {
        half_step = specfun::ln_gamma(L + 0.5) - specfun::ln_gamma(L);
    } else {
        const double inv = 1.0 / L;
        half_step = 0.5 * std::log(L) - 0.125 * inv + inv * inv * inv / 192.0;
    }
    return 0.5 * std::log(M_PI) - (2.0 * L - 1.0) * std::log(2.0) - half_step;
}

// one sinc x 2F1 block of the closed forms: sin[pi/2 t]/t * 2F1(t/2, -L, t/2+1, 1)
double closed_form_block(double t, double L) {
    return half_sinc(t) * specfun::hyp2f1_unit(0.5 * t, -L, 0.5 * t + 1.0);
}

// the series in closed_form_block has a pole when t/2 is a negative integer
bool near_series_pole(double t) {
    const double k = std::round(0.5 * t);
    return k <= -1.0 && std::abs(t - 2.0 * k) < 1e-6;
}

double psi0_closed_direct(const GupParams& params, double x) {
    const double L = lambda_param(params);
    const double sb = std::sqrt(params.beta);
    const double pref = std::exp(0.5 * (std::log(L) - 2.0 * std::log(M_PI) -
                                        0.5 * std::log(params.beta) + ln_gamma_sq_over_gamma2(L)));
    return pref * closed_form_block(x / sb - L, L);
}

double psi1_closed_direct(const GupParams& params, double x) {
    const double L = lambda_param(params);
    const double sb = std::sqrt(params.beta);
    // Gamma(2L+1) = 2L Gamma(2L)
    const double pref = L * std::exp(0.5 * (std::log(L + 1.0) - 2.0 * std::log(M_PI) -
                                            0.5 * std::log(params.beta) - std::log(2.0 * L) +
                                            ln_gamma_sq_over_gamma2(L)));
    const double u = x / sb;
    return pref * (closed_form_block(u - (L + 1.0), L) - closed_form_block(u - (L - 1.0), L));
}

} // namespace

GridSpec::GridSpec(double x_min_, double x_max_, int count_)
    : x_min(x_min_), x_max(x_max_), count(count_) {
    if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max))
        throw std::invalid_argument("GridSpec: requires finite x_min < x_max");
    if (count < 2) throw std::invalid_argument("GridSpec: requires count >= 2");
}

std::complex<double> psi_numeric(const EigenState& state, double x) {
    init_gl16();
    const double hbar = state.params().hbar;
    const double p_sup = state.support_radius();
    // panel phase change bounded by pi: panels >= 2 p_sup |x| / (pi hbar)
    const int panels = static_cast<int>(std::ceil((2.0 * p_sup * std::abs(x)) / (M_PI * hbar))) + 16;
    const double h = p_sup / panels;
    const bool even = state.n() % 2 == 0;
    double acc = 0.0;
    for (int j = 0; j < panels; ++j) {
        const double mid = (j + 0.5) * h;
        double s = 0.0;
        for (int i = 0; i < 16; ++i) {
            const double p = mid + 0.5 * h * (*g_gl16_x)[i];
            const double w = even ? std::cos(p * x / hbar) : std::sin(p * x / hbar);
            s += (*g_gl16_w)[i] * w * state.phi(p);
        }
        acc += 0.5 * h * s;
    }
    // phi has the parity of n, so the full-band integral folds onto [0, p_sup]
    const double val = 2.0 * acc / std::sqrt(2.0 * M_PI * hbar);
    return even ? std::complex<double>(val, 0.0) : std::complex<double>(0.0, val);
}

double psi0_closed(const GupParams& params, double x) {
    require_unit_hbar(params, "psi0_closed");
    const double L = lambda_param(params);
    const double sb = std::sqrt(params.beta);
    if (near_series_pole(x / sb - L)) {
        const double h = 2e-4 * sb;   // removable point: symmetric two-point limit
        return 0.5 * (psi0_closed_direct(params, x - h) + psi0_closed_direct(params, x + h));
    }
    return psi0_closed_direct(params, x);
}

std::complex<double> psi1_closed(const GupParams& params, double x) {
    require_unit_hbar(params, "psi1_closed");
    const double L = lambda_param(params);
    const double sb = std::sqrt(params.beta);
    const double u = x / sb;
    double imag;
    if (near_series_pole(u - (L + 1.0)) || near_series_pole(u - (L - 1.0))) {
        const double h = 2e-4 * sb;
        imag = 0.5 * (psi1_closed_direct(params, x - h) + psi1_closed_direct(params, x + h));
    } else {
        imag = psi1_closed_direct(params, x);
    }
    return std::complex<double>(0.0, imag);
}

PositionWave::PositionWave(const EigenState& state, WaveMethod method)
    : state_(state), method_(method) {
    if (method == WaveMethod::closed_form) {
        if (state.n() > 1)
            throw std::invalid_argument("PositionWave: closed form exists for n in {0,1} only");
        require_unit_hbar(state.params(), "PositionWave");
    }
}

std::complex<double> PositionWave::operator()(double x) const {
    if (method_ == WaveMethod::numeric_synthesis) return psi_numeric(state_, x);
    if (state_.n() == 0) return {psi0_closed(state_.params(), x), 0.0};
    return psi1_closed(state_.params(), x);
}

double PositionWave::density(double x) const {
    return std::norm((*this)(x));
}

std::vector<WaveSample> sample_wave(const PositionWave& wave, const GridSpec& grid) {
    std::vector<WaveSample> out;
    out.reserve(grid.count);
    const double step = (grid.x_max - grid.x_min) / (grid.count - 1);
    for (int i = 0; i < grid.count; ++i) {
        const double x = (i + 1 == grid.count) ? grid.x_max : grid.x_min + i * step;
        const auto a = wave(x);
        out.push_back(WaveSample{x, a, std::norm(a)});
    }
    return out;
}

std::vector<WaveSample> sample_wave(const EigenState& state, const GridSpec& grid) {
    return sample_wave(PositionWave(state, WaveMethod::numeric_synthesis), grid);
}

} // namespace guposc
