#include "guposc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <queue>

namespace guposc::quadrature {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // refresh P'_n at the converged root for the weight
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

namespace {

struct Rule {
    std::vector<double> x7, w7, x15, w15;
};

const Rule& rule_7_15() {
    static Rule r;
    static std::once_flag once;
    std::call_once(once, [] {
        gauss_legendre(7, r.x7, r.w7);
        gauss_legendre(15, r.x15, r.w15);
    });
    return r;
}

struct Panel {
    double a, b;
    double i15;
    double err;
    long seq;
};

struct PanelLess {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err) return p.err < q.err;
        return p.seq > q.seq;   // ties: older panel first
    }
};

Panel eval_panel(const Integrand& f, double a, double b, long seq, long& evals) {
    const Rule& r = rule_7_15();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double i7 = 0.0, i15 = 0.0;
    for (int i = 0; i < 7; ++i) i7 += r.w7[i] * f(mid + half * r.x7[i]);
    for (int i = 0; i < 15; ++i) i15 += r.w15[i] * f(mid + half * r.x15[i]);
    evals += 22;
    i7 *= half;
    i15 *= half;
    return Panel{a, b, i15, std::abs(i15 - i7), seq};
}

constexpr int kInitialPanels = 8;
constexpr long kMaxPanels = 20000;

} // namespace

QuadResult integrate(const Integrand& f, double a, double b, double tol) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("integrate: requires finite a < b");
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate: requires tol > 0");

    std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
    long evals = 0;
    long seq = 0;
    double total = 0.0, total_err = 0.0;
    const double h0 = (b - a) / kInitialPanels;
    for (int i = 0; i < kInitialPanels; ++i) {
        Panel p = eval_panel(f, a + i * h0, (i + 1 == kInitialPanels) ? b : a + (i + 1) * h0,
                             seq++, evals);
        total += p.i15;
        total_err += p.err;
        heap.push(p);
    }

    const double min_width = 64.0 * std::numeric_limits<double>::epsilon() *
                             std::max({std::abs(a), std::abs(b), 1.0});
    long panels = kInitialPanels;
    std::vector<Panel> frozen;   // panels too narrow to split further

    while (total_err > tol && !heap.empty()) {
        if (panels >= kMaxPanels)
            throw QuadratureError("integrate: panel budget exhausted",
                                  QuadResult{total, total_err, evals});
        Panel worst = heap.top();
        heap.pop();
        if (worst.b - worst.a < min_width || worst.err == 0.0) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = eval_panel(f, worst.a, mid, seq++, evals);
        Panel right = eval_panel(f, mid, worst.b, seq++, evals);
        total += left.i15 + right.i15 - worst.i15;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++panels;
    }

    // recompute the sums once, in deterministic seq order, to undo drift from
    // the incremental +/- updates
    std::vector<Panel> all(std::move(frozen));
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& p, const Panel& q) { return p.seq < q.seq; });
    total = 0.0;
    total_err = 0.0;
    for (const Panel& p : all) {
        total += p.i15;
        total_err += p.err;
    }
    if (!std::isfinite(total))
        throw QuadratureError("integrate: integrand evaluated non-finite",
                              QuadResult{total, total_err, evals});
    return QuadResult{total, total_err, evals};
}

double entropy_integrand(double rho) {
    if (!(rho >= 0.0))
        throw std::domain_error("entropy_integrand: requires rho >= 0");
    if (rho < 1e-300) return 0.0;
    return rho * std::log(rho);
}

QuadResult integrate_tail_truncated(const Integrand& f, double tol, double decay_hint,
                                    const TailOptions& opts) {
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate_tail_truncated: requires tol > 0");
    if (!(decay_hint > 1.0))
        throw std::invalid_argument("integrate_tail_truncated: requires decay_hint > 1");
    if (!(opts.initial_radius > 0.0))
        throw std::invalid_argument("integrate_tail_truncated: requires initial_radius > 0");

    const double q = decay_hint;
    const double seg_tol = tol / 10.0;
    double radius = opts.initial_radius;

    QuadResult inner = integrate(f, 0.0, radius, seg_tol);
    double half_sum = inner.value;
    double err_sum = inner.err_estimate;
    long evals = inner.evaluations;

    double prev_annulus = std::numeric_limits<double>::infinity();
    int non_decreasing = 0;
    double tail_bound;
    for (;;) {
        const double outer = 2.0 * radius;
        QuadResult annulus = integrate(f, radius, outer, seg_tol);
        half_sum += annulus.value;
        err_sum += annulus.err_estimate;
        evals += annulus.evaluations;

        // power-law remainder bound from probes on the last annulus:
        // |f| <= C x^{-q}  =>  int_outer^inf |f| <= C outer^{1-q}/(q-1),
        // assembled in log space so huge decay exponents cannot overflow
        double ln_bound = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 16; ++i) {
            const double x = radius + (outer - radius) * (i + 0.5) / 16.0;
            const double fx = std::abs(f(x));
            if (fx == 0.0) continue;
            ln_bound = std::max(ln_bound, std::log(fx) + q * std::log(x) +
                                              (1.0 - q) * std::log(outer) - std::log(q - 1.0));
        }
        evals += 16;
        tail_bound = std::exp(ln_bound);   // exp(-inf) = 0 when the annulus is dead

        const double contribution = 2.0 * std::abs(annulus.value);
        if (contribution < seg_tol && 2.0 * tail_bound < seg_tol) {
            radius = outer;
            break;
        }
        if (contribution >= prev_annulus && contribution > tol) {
            if (++non_decreasing >= 3)
                throw QuadratureError(
                    "integrate_tail_truncated: tail contributions are not decaying",
                    QuadResult{2.0 * half_sum, 2.0 * err_sum + 2.0 * tail_bound, evals});
        } else {
            non_decreasing = 0;
        }
        prev_annulus = contribution;
        radius = outer;
        if (radius >= opts.max_radius) break;   // honest err_estimate covers the cut
    }

    if (opts.final_radius) *opts.final_radius = radius;
    return QuadResult{2.0 * half_sum, 2.0 * err_sum + 2.0 * tail_bound, evals};
}

} // namespace guposc::quadrature
