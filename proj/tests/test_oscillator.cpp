#include <doctest.h>

#include <cmath>
#include <vector>

#include "guposc/oscillator.hpp"
#include "guposc/quadrature.hpp"
#include "guposc/specfun.hpp"
#include "oracles.hpp"

using namespace guposc;

namespace {
GupParams unit_params(double beta) { return GupParams(1.0, 1.0, 1.0, beta); }
double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }
} // namespace

TEST_CASE("GupParams validation") {
    CHECK_THROWS_AS(GupParams(0.0, 1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GupParams(1.0, -1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GupParams(1.0, 1.0, 1.0, 0.0), std::invalid_argument);
    CHECK(unit_params(0.5).band_halfwidth() ==
          doctest::Approx(M_PI / (2.0 * std::sqrt(0.5))).epsilon(1e-15));
}

TEST_CASE("lambda_param closed values") {
    CHECK(rel_err(lambda_param(unit_params(1.0)), 0.5 * (1.0 + std::sqrt(5.0))) < 1e-14);
    CHECK(rel_err(lambda_param(unit_params(0.1)), 0.5 * (1.0 + std::sqrt(401.0))) < 1e-14);
    // beta -> 0: lambda * (omega beta) -> 1
    const double L = lambda_param(unit_params(1e-6));
    CHECK(std::abs(L * 1e-6 - 1.0) < 1e-5);
}

TEST_CASE("lambda solves lambda(lambda-1) = 1/eta^2") {
    for (double beta : {1e-6, 0.1, 0.5, 1.0, 2.0}) {
        const GupParams params(1.7, 0.9, 1.3, beta);
        const double L = lambda_param(params);
        const double v = 1.0 / (params.eta() * params.eta());
        CHECK(rel_err(L * (L - 1.0), v) < 1e-12);
    }
}

TEST_CASE("energy closed form") {
    // eta -> 0 limit
    for (int n = 0; n <= 4; ++n)
        CHECK(rel_err(energy(unit_params(1e-12), n), n + 0.5) < 1e-9);
    CHECK(rel_err(energy(unit_params(1.0), 0), 0.5 * (std::sqrt(1.25) + 0.5)) < 1e-14);
    CHECK(rel_err(energy(unit_params(1.0), 1), 1.5 * (std::sqrt(1.25) + 0.5) + 0.5) < 1e-14);
    CHECK_THROWS_AS(energy(unit_params(1.0), -1), std::domain_error);
}

TEST_CASE("energy against the finite-difference eigensolver") {
    for (double beta : {0.5, 1.0}) {
        for (int n : {0, 1}) {
            const double fd = oracles::fd_eigenvalue_extrapolated(1.0, 1.0, 1.0, beta, n);
            CHECK(std::abs(energy(unit_params(beta), n) - fd) < 1e-6);
        }
    }
    // non-unit parameters
    const double fd = oracles::fd_eigenvalue_extrapolated(2.0, 0.7, 1.3, 0.3, 0);
    CHECK(std::abs(energy(GupParams(2.0, 0.7, 1.3, 0.3), 0) - fd) < 1e-6);
}

TEST_CASE("eigenvalue relation epsilon = (n+lambda)^2") {
    for (const GupParams& params :
         {unit_params(0.1), unit_params(0.5), unit_params(1.0), GupParams(2.0, 0.7, 1.3, 0.4)}) {
        const double L = lambda_param(params);
        const double v = 1.0 / (params.eta() * params.eta());
        for (int n = 0; n <= 10; ++n) {
            const double eps = v * (1.0 + 2.0 * params.m * params.beta * energy(params, n));
            CHECK(rel_err(eps, (n + L) * (n + L)) < 1e-12);
        }
    }
}

TEST_CASE("norm_const normalizes phi to unit L2 norm") {
    for (auto [beta, n] : std::vector<std::pair<double, int>>{{1.0, 0}, {0.5, 3}, {0.1, 1}}) {
        EigenState state(unit_params(beta), n);
        auto r = quadrature::integrate(
            [&state](double p) { return state.phi(p) * state.phi(p); }, 0.0,
            state.support_radius(), 1e-12);
        CHECK(std::abs(2.0 * r.value - 1.0) < 1e-10);
    }
}

TEST_CASE("norm_const ratio identity") {
    using guposc::specfun::gegenbauer_norm;
    using guposc::specfun::PolyOrder;
    for (double beta : {0.1, 1.0}) {
        const GupParams params = unit_params(beta);
        const double n0 = norm_const(params, 0);
        const double ratio =
            n0 * n0 * gegenbauer_norm(PolyOrder(0), lambda_param(params)) / std::sqrt(beta);
        CHECK(rel_err(ratio, 1.0) < 1e-12);
    }
}

TEST_CASE("phi_eval band edge and parity") {
    EigenState s0(unit_params(0.5), 0);
    EigenState s1(unit_params(0.5), 1);
    const double pmax = s0.band_halfwidth();
    CHECK(phi_eval(s0, pmax) == 0.0);
    CHECK(phi_eval(s0, -pmax) == 0.0);
    CHECK(phi_eval(s0, 2.0 * pmax) == 0.0);
    CHECK(phi_eval(s1, 0.0) == 0.0);
    for (double p : {0.3, 0.9, 0.99 * pmax}) {
        CHECK(std::abs(phi_eval(s0, -p) - phi_eval(s0, p)) < 1e-14);
        CHECK(std::abs(phi_eval(s1, -p) + phi_eval(s1, p)) < 1e-14);
    }
}

TEST_CASE("phi_eval recovers the ordinary oscillator at small beta") {
    const GupParams params = unit_params(1e-8);
    EigenState state(params, 0);
    const double want = std::exp(-0.7 * 0.7 / 2.0) / std::pow(M_PI, 0.25);
    CHECK(std::abs(phi_eval(state, 0.7) - want) < 1e-3);
}

TEST_CASE("relativistic-Hermite path matches the Gegenbauer path") {
    for (double beta : {0.5, 1.0}) {
        for (int n = 0; n <= 5; ++n) {
            EigenState state(unit_params(beta), n);
            const double pmax = state.band_halfwidth();
            double max_phi = 0.0, max_diff = 0.0;
            for (int i = 0; i < 1000; ++i) {
                const double p = -pmax + (2.0 * pmax) * (i + 0.5) / 1000.0;
                const double a = phi_eval(state, p);
                const double b = phi_eval_relhermite(state, p);
                max_phi = std::max(max_phi, std::abs(a));
                max_diff = std::max(max_diff, std::abs(a - b));
            }
            CHECK(max_diff <= 1e-10 * max_phi);
        }
    }
    // n = 0 collapses to the same expression
    EigenState s(unit_params(0.7), 0);
    CHECK(phi_eval(s, 0.4) == doctest::Approx(phi_eval_relhermite(s, 0.4)).epsilon(1e-14));
    // n = 1: sign tracks 2 lambda sin(sqrt(beta) p)
    EigenState s1(unit_params(0.7), 1);
    CHECK(phi_eval_relhermite(s1, 0.6) > 0.0);
    CHECK(phi_eval_relhermite(s1, -0.6) < 0.0);
}

TEST_CASE("orthonormality of the first five states") {
    for (double beta : {0.1, 0.5, 1.0}) {
        std::vector<EigenState> states;
        for (int n = 0; n <= 4; ++n) states.emplace_back(unit_params(beta), n);
        const double sup = states[0].support_radius();
        for (int i = 0; i <= 4; ++i) {
            for (int j = i; j <= 4; ++j) {
                auto r = quadrature::integrate(
                    [&](double p) { return states[i].phi(p) * states[j].phi(p); }, -sup, sup,
                    1e-11);
                const double want = i == j ? 1.0 : 0.0;
                CHECK(std::abs(r.value - want) < 1e-8);
            }
        }
    }
}

TEST_CASE("finite-difference residual of the momentum-space equation") {
    const int npts = 4001;
    for (const GupParams& params :
         {unit_params(0.1), unit_params(0.5), unit_params(1.0), GupParams(2.0, 0.7, 1.3, 0.4)}) {
        const double pmax = params.band_halfwidth();
        const double h = 2.0 * pmax / (npts - 1);
        const double kin = 0.5 * params.m * params.hbar * params.hbar * params.omega * params.omega;
        for (int n = 0; n <= 3; ++n) {
            EigenState state(params, n);
            std::vector<double> f(npts);
            for (int i = 0; i < npts; ++i) f[i] = state.phi(-pmax + i * h);
            double max_res = 0.0, max_ef = 0.0;
            for (int i = 1; i + 1 < npts; ++i) {
                const double p = -pmax + i * h;
                if (std::abs(p) > 0.9 * pmax) continue;
                const double lap = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
                const double t = std::tan(std::sqrt(params.beta) * p);
                const double res =
                    -kin * lap + t * t / (2.0 * params.m * params.beta) * f[i] -
                    state.energy() * f[i];
                max_res = std::max(max_res, std::abs(res));
                max_ef = std::max(max_ef, std::abs(state.energy() * f[i]));
            }
            CHECK(max_res / max_ef <= 1e-4);
        }
    }
}

TEST_CASE("states tend to the ordinary oscillator as beta -> 0") {
    const GupParams params = unit_params(1e-6);
    for (int n = 0; n <= 2; ++n) {
        EigenState state(params, n);
        double max_diff = 0.0;
        for (int i = 0; i <= 400; ++i) {
            const double p = -8.0 + 16.0 * i / 400.0;
            max_diff = std::max(max_diff,
                                std::abs(phi_eval(state, p) - ordinary_phi(params, n, p)));
        }
        CHECK(max_diff <= 1e-3);
    }
}

TEST_CASE("ordinary limit helpers") {
    const GupParams params(2.0, 0.7, 1.3, 1.0);   // beta unused
    CHECK(ordinary_energy(params, 3) == doctest::Approx(3.5 * 0.7 * 1.3).epsilon(1e-15));
    // unit normalization of the limit states
    auto r = quadrature::integrate(
        [&](double p) { return std::pow(ordinary_phi(params, 2, p), 2); }, -30.0, 30.0, 1e-11);
    CHECK(std::abs(r.value - 1.0) < 1e-9);
    auto rx = quadrature::integrate(
        [&](double x) { return std::pow(ordinary_psi(params, 2, x), 2); }, -30.0, 30.0, 1e-11);
    CHECK(std::abs(rx.value - 1.0) < 1e-9);
}

TEST_CASE("support radius bounds the band") {
    for (double beta : {1e-6, 0.5, 1.0}) {
        EigenState state(unit_params(beta), 0);
        CHECK(state.support_radius() <= state.band_halfwidth());
        CHECK(state.support_radius() > 0.0);
        CHECK(phi_eval(state, state.support_radius() * 1.0000001) <= 1e-300);
    }
}
