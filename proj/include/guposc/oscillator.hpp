#ifndef GUPOSC_OSCILLATOR_HPP
#define GUPOSC_OSCILLATOR_HPP

#include <stdexcept>

namespace guposc {

/// Physical and deformation parameters of the minimal-length oscillator,
/// [X,P] = i hbar (1 + beta P^2). Momentum wave functions live on the band
/// |p| < p_max = pi/(2 sqrt(beta)).
struct GupParams {
    double m = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    double beta = 1.0;

    GupParams() = default;
    GupParams(double m_, double omega_, double hbar_, double beta_)
        : m(m_), omega(omega_), hbar(hbar_), beta(beta_) {
        validate();
    }

    void validate() const;

    double eta() const { return m * beta * hbar * omega; }
    double band_halfwidth() const;   // p_max
};

/// Larger root of lambda(lambda-1) = 1/(m beta hbar omega)^2; always > 1.
double lambda_param(const GupParams& params);

/// Exact spectrum: E_n = hbar omega (n+1/2)(sqrt(1+eta^2/4)+eta/2) + hbar omega eta n^2 / 2.
double energy(const GupParams& params, int n);

/// Normalization coefficient N_n of phi_n, computed in log space.
double norm_const(const GupParams& params, int n);

/// One normalized eigenstate of the deformed oscillator. Immutable.
class EigenState {
public:
    EigenState(const GupParams& params, int n);

    const GupParams& params() const { return params_; }
    int n() const { return n_; }
    double lambda() const { return lambda_; }
    double energy() const { return energy_; }
    double norm_const() const { return norm_; }
    double band_halfwidth() const { return p_max_; }

    /// Radius beyond which |phi| underflows to zero; <= band_halfwidth().
    double support_radius() const { return p_support_; }

    double phi(double p) const;

private:
    GupParams params_;
    int n_;
    double lambda_;
    double energy_;
    double norm_;      // N_n
    double ln_norm_;   // ln N_n
    double p_max_;
    double p_support_;

    friend double phi_eval(const EigenState&, double);
    friend double phi_eval_relhermite(const EigenState&, double);
};

/// phi_n(p) = N_n C_n^lambda(sin(sqrt(beta) p)) cos^lambda(sqrt(beta) p),
/// zero for |p| >= p_max.
double phi_eval(const EigenState& state, double p);

/// Same state through the relativistic-Hermite form
/// phi_n(p) = N_n lambda^{n/2}/n! cos^{lambda+n}(sqrt(beta) p) H_n^lambda(sqrt(lambda) tan(sqrt(beta) p)).
double phi_eval_relhermite(const EigenState& state, double p);

/// beta -> 0 limits (ordinary oscillator), used by the CLI's beta = 0 path
/// and by the limit checks.
double ordinary_energy(const GupParams& params, int n);
double ordinary_phi(const GupParams& params, int n, double p);
double ordinary_psi(const GupParams& params, int n, double x);

} // namespace guposc

#endif
