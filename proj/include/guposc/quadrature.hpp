#ifndef GUPOSC_QUADRATURE_HPP
#define GUPOSC_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace guposc::quadrature {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;   // >= 0
    long evaluations = 0;        // > 0 after any run
};

/// Carries the best estimate reached when an integration cannot finish.
struct QuadratureError : std::runtime_error {
    QuadResult best;
    QuadratureError(const std::string& what, QuadResult best_so_far)
        : std::runtime_error(what), best(best_so_far) {}
};

using Integrand = std::function<double(double)>;

/// Adaptive integration of f over [a,b]: embedded 7/15-node Gauss-Legendre
/// pair per panel, worst-panel-first bisection. Deterministic.
/// Throws QuadratureError (carrying the best estimate) if the panel budget
/// is exhausted before the tolerance is met, or if f evaluates non-finite.
QuadResult integrate(const Integrand& f, double a, double b, double tol);

/// rho * ln(rho) with the limit convention 0*ln(0) = 0 (exact 0 below 1e-300).
double entropy_integrand(double rho);

struct TailOptions {
    double initial_radius = 10.0;
    double max_radius = 1e308;   // radius cap; reaching it widens err_estimate, no throw
    double* final_radius = nullptr;
};

/// Integral of an even integrand over the whole real line, computed as
/// 2 * [0,X] with X doubling until the last annulus contributes < tol/10 and
/// a power-law tail bound with exponent decay_hint certifies the remainder
/// < tol/10. Throws QuadratureError if the annulus contributions stop decaying.
QuadResult integrate_tail_truncated(const Integrand& f, double tol, double decay_hint,
                                    const TailOptions& opts = {});

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1],
/// generated by Newton iteration on P_n (no stored tables).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace guposc::quadrature

#endif
