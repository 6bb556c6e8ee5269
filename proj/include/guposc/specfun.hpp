#ifndef GUPOSC_SPECFUN_HPP
#define GUPOSC_SPECFUN_HPP

#include <stdexcept>

namespace guposc::specfun {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/// Polynomial degree / quantum number, n >= 0.
struct PolyOrder {
    int value;
    explicit PolyOrder(int n) : value(n) {
        if (n < 0) throw std::domain_error("PolyOrder: n must be >= 0");
    }
};

/// Gegenbauer superscript index, lambda > 1/2.
struct GegenbauerIndex {
    double value;
    explicit GegenbauerIndex(double lambda) : value(lambda) {
        if (!(lambda > 0.5)) throw std::domain_error("GegenbauerIndex: lambda must be > 1/2");
    }
};

/// Raised when a hypergeometric parameter sits on a pole of the series.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// psi(x) = d/dx ln Gamma(x) for x > 0.
double digamma(double x);

/// Harmonic number extended to real index: H_x = psi(x+1) + gamma, x >= 0.
double harmonic(double x);

/// Gegenbauer polynomial C_n^lambda(s), |s| <= 1, by three-term recurrence.
double gegenbauer(PolyOrder n, GegenbauerIndex lambda, double s);

/// Weighted norm integral of C_n^nu over [-1,1]:
///   pi 2^{1-2nu} Gamma(n+2nu) / (n! (n+nu) Gamma(nu)^2),  nu > -1/2.
double gegenbauer_norm(PolyOrder n, double nu);

/// Relativistic Hermite polynomial H_n^lambda(z) via the Gegenbauer relation
///   H_n^lambda(sqrt(lambda) u) = n!/lambda^{n/2} (1+u^2)^{n/2} C_n^lambda(u/sqrt(1+u^2)).
double rel_hermite(PolyOrder n, GegenbauerIndex lambda, double z);

/// Physicists' Hermite polynomial H_n(z).
double hermite(PolyOrder n, double z);

/// Gauss hypergeometric series 2F1(a,b;c;1).
/// Requires c-a-b > 0, or a terminating series (a or b a non-positive integer);
/// c at a non-positive integer raises PoleError.
double hyp2f1_unit(double a, double b, double c);

} // namespace guposc::specfun

#endif
