#include "guposc/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "guposc/entropy.hpp"

namespace guposc::cli {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

} // namespace

std::vector<int> parse_int_list(const std::string& text) {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = parse_int(text.substr(0, dots));
        const int hi = parse_int(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range: '" + text + "'");
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::vector<int> out;
    for (const std::string& part : split(text, ',')) out.push_back(parse_int(part));
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    for (const std::string& part : split(text, ',')) {
        size_t pos = 0;
        double v;
        try {
            v = std::stod(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a number: '" + part + "'");
        }
        if (pos != part.size()) throw std::invalid_argument("not a number: '" + part + "'");
        out.push_back(v);
    }
    return out;
}

std::string format_real(double value, int digits) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

namespace {

double rounded(double value, int digits) {
    const std::string text = format_real(value, digits);
    double v = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), v);
    return v;
}

struct Task {
    double beta;
    int n;
};

int thread_budget(size_t tasks) {
    long cap = 0;
    if (const char* env = std::getenv("GUP_ENTROPY_THREADS")) cap = std::atol(env);
    if (cap <= 0) cap = static_cast<long>(std::thread::hardware_concurrency());
    if (cap <= 0) cap = 1;
    return static_cast<int>(std::min<size_t>(cap, tasks));
}

// Runs fn over tasks concurrently; results land at their input index, so the
// emitted order never depends on scheduling.
template <typename Fn>
std::vector<EntropyReport> run_reports(const std::vector<Task>& tasks, Fn&& fn) {
    std::vector<EntropyReport> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    const int workers = thread_budget(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                results[i] = fn(tasks[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

void validate(const RunConfig& config) {
    if (config.betas.empty()) throw std::invalid_argument("no beta values given");
    for (double b : config.betas)
        if (!(b >= 0.0) || !std::isfinite(b))
            throw std::invalid_argument("beta must be finite and >= 0");
    if (config.ns.empty()) throw std::invalid_argument("no n values given");
    for (int n : config.ns)
        if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (!(config.m > 0.0) || !(config.omega > 0.0) || !(config.hbar > 0.0))
        throw std::invalid_argument("m, omega, hbar must be > 0");
    if (!(config.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (config.digits < 3 || config.digits > 15)
        throw std::invalid_argument("digits must lie in [3, 15]");
}

GupParams make_params(const RunConfig& config, double beta) {
    // beta = 0 callers never read the stored beta; keep the struct valid
    return GupParams(config.m, config.omega, config.hbar, beta > 0.0 ? beta : 1.0);
}

std::vector<Task> task_list(const RunConfig& config) {
    std::vector<Task> tasks;
    for (int n : config.ns)
        for (double beta : config.betas) tasks.push_back(Task{beta, n});
    return tasks;
}

GridSpec grid_or_default(const RunConfig& config) {
    return config.grid ? *config.grid : GridSpec(-8.0, 8.0, 257);
}

// ---- energies ----

int run_energies(const RunConfig& config, std::ostream& out) {
    struct Row {
        int n;
        double beta, energy;
    };
    std::vector<Row> rows;
    for (const Task& t : task_list(config)) {
        const GupParams params = make_params(config, t.beta);
        const double e = t.beta == 0.0 ? ordinary_energy(params, t.n) : energy(params, t.n);
        rows.push_back(Row{t.n, t.beta, e});
    }
    if (config.format == Format::csv) {
        out << "n,beta,energy\n";
        for (const Row& r : rows)
            out << r.n << ',' << format_real(r.beta, config.digits) << ','
                << format_real(r.energy, config.digits) << '\n';
    } else {
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows)
            arr.push_back({{"n", r.n},
                           {"beta", rounded(r.beta, config.digits)},
                           {"energy", rounded(r.energy, config.digits)}});
        out << arr.dump(2) << '\n';
    }
    return 0;
}

// ---- wavefunction ----

int run_wavefunction(const RunConfig& config, std::ostream& out) {
    const GridSpec grid = grid_or_default(config);
    struct Block {
        Task t;
        std::vector<WaveSample> samples;
    };
    std::vector<Block> blocks;
    for (const Task& t : task_list(config)) {
        Block b{t, {}};
        if (t.beta == 0.0) {
            const GupParams params = make_params(config, 0.0);
            const double step = (grid.x_max - grid.x_min) / (grid.count - 1);
            for (int i = 0; i < grid.count; ++i) {
                const double x = (i + 1 == grid.count) ? grid.x_max : grid.x_min + i * step;
                const double v = ordinary_psi(params, t.n, x);
                b.samples.push_back(WaveSample{x, {v, 0.0}, v * v});
            }
        } else {
            b.samples = sample_wave(EigenState(make_params(config, t.beta), t.n), grid);
        }
        blocks.push_back(std::move(b));
    }
    if (config.format == Format::csv) {
        out << "n,beta,x,re_psi,im_psi,density\n";
        for (const Block& b : blocks)
            for (const WaveSample& s : b.samples)
                out << b.t.n << ',' << format_real(b.t.beta, config.digits) << ','
                    << format_real(s.x, config.digits) << ','
                    << format_real(s.psi.real(), config.digits) << ','
                    << format_real(s.psi.imag(), config.digits) << ','
                    << format_real(s.density, config.digits) << '\n';
    } else {
        ordered_json arr = ordered_json::array();
        for (const Block& b : blocks) {
            ordered_json samples = ordered_json::array();
            for (const WaveSample& s : b.samples)
                samples.push_back({{"x", rounded(s.x, config.digits)},
                                   {"re_psi", rounded(s.psi.real(), config.digits)},
                                   {"im_psi", rounded(s.psi.imag(), config.digits)},
                                   {"density", rounded(s.density, config.digits)}});
            arr.push_back({{"n", b.t.n},
                           {"beta", rounded(b.t.beta, config.digits)},
                           {"samples", std::move(samples)}});
        }
        out << arr.dump(2) << '\n';
    }
    return 0;
}

// ---- densities ----

int run_densities(const RunConfig& config, std::ostream& out) {
    const GridSpec grid = grid_or_default(config);
    struct Block {
        Task t;
        DensityProfiles profiles;
    };
    std::vector<Block> blocks;
    for (const Task& t : task_list(config)) {
        Block b{t, {}};
        const GupParams params = make_params(config, t.beta);
        if (t.beta == 0.0) {
            const double step = (grid.x_max - grid.x_min) / (grid.count - 1);
            const double p_half = 10.0 * std::sqrt(config.m * config.omega * config.hbar);
            const double pstep = 2.0 * p_half / (grid.count - 1);
            for (int i = 0; i < grid.count; ++i) {
                const double x = (i + 1 == grid.count) ? grid.x_max : grid.x_min + i * step;
                const double rx = std::pow(ordinary_psi(params, t.n, x), 2);
                b.profiles.position.push_back(
                    DensitySample{x, rx, quadrature::entropy_integrand(rx)});
                const double p = (i + 1 == grid.count) ? p_half : -p_half + i * pstep;
                const double rp = std::pow(ordinary_phi(params, t.n, p), 2);
                b.profiles.momentum.push_back(
                    DensitySample{p, rp, quadrature::entropy_integrand(rp)});
            }
        } else {
            EigenState state(params, t.n);
            PositionWave wave(state, WaveMethod::numeric_synthesis);
            b.profiles = density_profiles(state, wave, grid);
        }
        blocks.push_back(std::move(b));
    }
    if (config.format == Format::csv) {
        out << "n,beta,space,coord,density,entropy_density\n";
        for (const Block& b : blocks) {
            for (const DensitySample& s : b.profiles.position)
                out << b.t.n << ',' << format_real(b.t.beta, config.digits) << ",x,"
                    << format_real(s.coord, config.digits) << ','
                    << format_real(s.density, config.digits) << ','
                    << format_real(s.entropy_density, config.digits) << '\n';
            for (const DensitySample& s : b.profiles.momentum)
                out << b.t.n << ',' << format_real(b.t.beta, config.digits) << ",p,"
                    << format_real(s.coord, config.digits) << ','
                    << format_real(s.density, config.digits) << ','
                    << format_real(s.entropy_density, config.digits) << '\n';
        }
    } else {
        auto dump_profile = [&](const std::vector<DensitySample>& profile) {
            ordered_json arr = ordered_json::array();
            for (const DensitySample& s : profile)
                arr.push_back({{"coord", rounded(s.coord, config.digits)},
                               {"density", rounded(s.density, config.digits)},
                               {"entropy_density", rounded(s.entropy_density, config.digits)}});
            return arr;
        };
        ordered_json arr = ordered_json::array();
        for (const Block& b : blocks)
            arr.push_back({{"n", b.t.n},
                           {"beta", rounded(b.t.beta, config.digits)},
                           {"position", dump_profile(b.profiles.position)},
                           {"momentum", dump_profile(b.profiles.momentum)}});
        out << arr.dump(2) << '\n';
    }
    return 0;
}

// ---- entropy / table1 ----

ordered_json report_json(const EntropyReport& r, int digits) {
    return {{"n", r.n},
            {"beta", rounded(r.params.beta, digits)},
            {"m", rounded(r.params.m, digits)},
            {"omega", rounded(r.params.omega, digits)},
            {"hbar", rounded(r.params.hbar, digits)},
            {"S_x", rounded(r.S_x, digits)},
            {"S_p", rounded(r.S_p, digits)},
            {"sum", rounded(r.sum, digits)},
            {"bbm_bound", rounded(r.bbm_bound, digits)},
            {"bbm_holds", r.bbm_holds},
            {"delta_X", rounded(r.delta_X, digits)},
            {"delta_P", rounded(r.delta_P, digits)},
            {"gup_lhs", rounded(r.gup_lhs, digits)},
            {"gup_rhs", rounded(r.gup_rhs, digits)},
            {"gup_holds", r.gup_holds},
            {"err_Sx", rounded(r.err_Sx, digits)},
            {"err_Sp", rounded(r.err_Sp, digits)},
            {"sp_numeric_only", r.sp_numeric_only}};
}

int run_entropy(const RunConfig& config, std::ostream& out) {
    const std::vector<Task> tasks = task_list(config);
    const std::vector<EntropyReport> reports = run_reports(tasks, [&](const Task& t) {
        const GupParams params = make_params(config, t.beta);
        return t.beta == 0.0 ? ordinary_report(params, t.n, config.tol)
                             : bbm_report(params, t.n, config.tol);
    });
    if (config.format == Format::csv) {
        out << "n,beta,S_x,S_p,sum,bound,bbm_holds\n";
        for (size_t i = 0; i < reports.size(); ++i) {
            const EntropyReport& r = reports[i];
            out << r.n << ',' << format_real(tasks[i].beta, config.digits) << ','
                << format_real(r.S_x, config.digits) << ',' << format_real(r.S_p, config.digits)
                << ',' << format_real(r.sum, config.digits) << ','
                << format_real(r.bbm_bound, config.digits) << ','
                << (r.bbm_holds ? "true" : "false") << '\n';
        }
    } else {
        if (reports.size() == 1) {
            out << report_json(reports[0], config.digits).dump(2) << '\n';
        } else {
            ordered_json arr = ordered_json::array();
            for (const EntropyReport& r : reports) arr.push_back(report_json(r, config.digits));
            out << arr.dump(2) << '\n';
        }
    }
    const bool all_hold = std::all_of(reports.begin(), reports.end(),
                                      [](const EntropyReport& r) { return r.bbm_holds; });
    return all_hold ? 0 : 4;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    try {
        RunConfig cfg = config;
        if (cfg.command == Command::table1) {
            if (cfg.betas.empty()) cfg.betas = {0.1, 0.5, 1.0};
            if (cfg.ns.empty()) cfg.ns = {0, 1};
        }
        validate(cfg);
        switch (cfg.command) {
            case Command::energies:
                return run_energies(cfg, out);
            case Command::wavefunction:
                return run_wavefunction(cfg, out);
            case Command::densities:
                return run_densities(cfg, out);
            case Command::entropy:
            case Command::table1:
                return run_entropy(cfg, out);
        }
        return 2;
    } catch (const std::invalid_argument& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    } catch (const quadrature::QuadratureError& e) {
        diag << "numerical failure: " << e.what() << " (best estimate "
             << format_real(e.best.value, 15) << " +/- " << format_real(e.best.err_estimate, 6)
             << " after " << e.best.evaluations << " evaluations)\n";
        return 3;
    } catch (const std::exception& e) {
        diag << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}

int run(const RunConfig& config, std::ostream& diag) {
    if (config.output.empty()) return run(config, std::cout, diag);
    std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
    if (!file) {
        diag << "error: cannot open output file '" << config.output << "'\n";
        return 2;
    }
    return run(config, file, diag);
}

} // namespace guposc::cli
