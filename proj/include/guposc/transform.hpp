#ifndef GUPOSC_TRANSFORM_HPP
#define GUPOSC_TRANSFORM_HPP

#include <complex>
#include <vector>

#include "guposc/oscillator.hpp"

namespace guposc {

struct GridSpec {
    double x_min;
    double x_max;
    int count;   // >= 2
    GridSpec(double x_min_, double x_max_, int count_);
};

/// Position-space amplitude by band-limited Fourier synthesis,
///   psi(x) = 1/sqrt(2 pi hbar) \int_band e^{i p x/hbar} phi(p) dp,
/// composite Gauss-Legendre with the panel count tied to the phase sweep.
std::complex<double> psi_numeric(const EigenState& state, double x);

/// Closed-form ground state (hbar = 1), sinc x 2F1 form.
double psi0_closed(const GupParams& params, double x);

/// Closed-form first excited state (hbar = 1); purely imaginary.
std::complex<double> psi1_closed(const GupParams& params, double x);

enum class WaveMethod { numeric_synthesis, closed_form };

/// Evaluable position-space wave function of one eigenstate.
/// closed_form is available for n in {0,1} at hbar = 1 only.
class PositionWave {
public:
    PositionWave(const EigenState& state, WaveMethod method);

    std::complex<double> operator()(double x) const;
    double density(double x) const;

    const EigenState& state() const { return state_; }
    WaveMethod method() const { return method_; }

private:
    EigenState state_;
    WaveMethod method_;
};

struct WaveSample {
    double x;
    std::complex<double> psi;
    double density;   // |psi|^2
};

/// Deterministic samples on a uniform grid, strictly ascending in x.
std::vector<WaveSample> sample_wave(const PositionWave& wave, const GridSpec& grid);
std::vector<WaveSample> sample_wave(const EigenState& state, const GridSpec& grid);

} // namespace guposc

#endif
