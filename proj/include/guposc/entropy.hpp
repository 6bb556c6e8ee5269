#ifndef GUPOSC_ENTROPY_HPP
#define GUPOSC_ENTROPY_HPP

#include <vector>

#include "guposc/oscillator.hpp"
#include "guposc/quadrature.hpp"
#include "guposc/transform.hpp"

namespace guposc {

/// Shannon entropies, dispersions, and uncertainty verdicts for one state.
/// Entropies are in nats. bbm_bound is 1 + ln(pi hbar), which is 1 + ln pi
/// in the paper's hbar = 1 units. Verdicts are error-aware: a bound is
/// "held" when the computed value clears it minus the accumulated error.
struct EntropyReport {
    GupParams params;
    int n = 0;
    double S_x = 0.0;
    double S_p = 0.0;
    double sum = 0.0;
    double bbm_bound = 0.0;
    bool bbm_holds = false;
    double delta_X = 0.0;
    double delta_P = 0.0;
    double gup_lhs = 0.0;   // dX dP
    double gup_rhs = 0.0;   // hbar/2 (1 + beta dP^2)
    bool gup_holds = false;
    double err_Sx = 0.0;
    double err_Sp = 0.0;
    bool sp_numeric_only = false;   // n >= 2: no closed-form S_p cross-check
};

/// S_p = -int_band |phi|^2 ln |phi|^2 dp.
quadrature::QuadResult sp_numeric(const EigenState& state, double tol);

/// Closed-form S_p for n in {0,1} via harmonic numbers at real index.
double sp_analytic(const GupParams& params, int n);

/// S_x = -int |psi|^2 ln |psi|^2 dx, tail-truncated.
quadrature::QuadResult sx_numeric(const PositionWave& wave, double tol);

struct DensitySample {
    double coord;
    double density;           // rho
    double entropy_density;   // rho ln rho
};

struct DensityProfiles {
    std::vector<DensitySample> position;   // on the given x grid
    std::vector<DensitySample> momentum;   // same count, spanning the band
};

DensityProfiles density_profiles(const EigenState& state, const PositionWave& wave,
                                 const GridSpec& grid);

struct Dispersions {
    quadrature::QuadResult delta_X;   // value = dX, err_estimate propagated
    quadrature::QuadResult delta_P;
};

/// dX from int x^2 |psi|^2 dx, dP from int [tan(sqrt(b) p)/sqrt(b)]^2 |phi|^2 dp;
/// first moments vanish by parity.
Dispersions dispersions(const EigenState& state, const PositionWave& wave, double tol);

/// Full report for one (params, n); n in {0,1} is cross-checked against the
/// analytic S_p, n >= 2 is numeric-only.
EntropyReport bbm_report(const GupParams& params, int n, double tol);

/// Ordinary-oscillator (beta -> 0 limit) report; params.beta is not used.
EntropyReport ordinary_report(const GupParams& params, int n, double tol);

} // namespace guposc

#endif
