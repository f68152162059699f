#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/horizon.hpp"
#include "ramsey/montecarlo.hpp"
#include "ramsey/shock.hpp"

namespace ramsey {

enum class OutputFormat { Csv, Json };

/// Everything a CLI run needs. Read from a flat key/value file:
///
///     c = 1
///     x = 3.5, 7.5, 9.5
///     horizons = 3, 5, 10, inf
///     truncation = adaptive        # or an integer n
///
///     [spec]
///     family = pareto
///     beta = 3
///     k = 0.9
///
/// Top-level keys must precede the first [spec] section; each [spec]
/// section adds one shock law.
struct ExperimentConfig {
    std::vector<ShockSpec> specs;
    double c = 1.0;
    std::vector<double> x_grid;
    std::vector<Horizon> horizons{Horizon::infinite()};
    std::optional<int> rmax;  // empty: derive from gamma_r < 1
    int rows = 5;
    SimConfig sim;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::string> out;
};

// `source` names the input in diagnostics ("run.cfg:7: ...").
ExperimentConfig parse_config(std::istream& is, const std::string& source);
ExperimentConfig load_config(const std::string& path);

// Checks the cross-field invariants (non-empty specs, c > 0, positive grid).
void validate(const ExperimentConfig& config);

// Shared value parsers, also used for CLI flag overrides.
std::vector<double> parse_number_list(const std::string& text, const std::string& what);
std::vector<Horizon> parse_horizon_list(const std::string& text);
Truncation parse_truncation(const std::string& text);
OutputFormat parse_format(const std::string& text);

}  // namespace ramsey
