#ifndef GUPOSC_CLI_HPP
#define GUPOSC_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "guposc/transform.hpp"

namespace guposc::cli {

enum class Command { energies, wavefunction, densities, entropy, table1 };
enum class Format { csv, json };

/// Parsed invocation. beta = 0 selects the exact ordinary-QM limit.
struct RunConfig {
    Command command = Command::entropy;
    std::vector<double> betas;
    std::vector<int> ns;
    double m = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    double tol = 1e-8;
    std::optional<GridSpec> grid;
    Format format = Format::csv;
    std::string output;   // empty = stdout
    int digits = 6;
};

/// Executes the command, writing the artifact to `out` and diagnostics to `diag`.
/// Returns 0 on success, 2 on invalid arguments, 3 on numerical failure,
/// 4 when a BBM check fails. Output bytes are deterministic for a fixed config.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// As above, honoring config.output (file or stdout).
int run(const RunConfig& config, std::ostream& diag);

/// "1,2,5" or "0..4" (inclusive range).
std::vector<int> parse_int_list(const std::string& text);
/// "0.1,0.5,1.0".
std::vector<double> parse_real_list(const std::string& text);

/// Locale-independent shortest form at `digits` significant digits.
std::string format_real(double value, int digits);

} // namespace guposc::cli

#endif
