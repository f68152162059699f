// ramsey: survival probabilities of a constant consumption target under
// multiplicative i.i.d. returns.
//
//   ramsey classify   --spec 'family=pareto;beta=0.1;k=0.9'
//   ramsey moments    --config run.cfg --rmax 60
//   ramsey bounds     --config run.cfg --x 7.5,9.5 --horizons 10,inf
//   ramsey boundaries --config run.cfg --horizons 3,5,10,20,inf
//   ramsey simulate   --config run.cfg --truncation 10 --out samples.csv
//   ramsey reproduce  4 --out table4.csv
//
// Exit codes: 0 ok, 2 configuration error, 3 domain error, 4 I/O error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/chebyshev.hpp"
#include "ramsey/config.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/format.hpp"
#include "ramsey/io.hpp"
#include "ramsey/moments.hpp"
#include "ramsey/montecarlo.hpp"
#include "ramsey/regimes.hpp"
#include "ramsey/reproduce.hpp"

namespace {

using namespace ramsey;

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct Flags {
    std::string config;
    std::vector<std::string> specs;
    std::optional<std::uint64_t> seed;
    std::string format;
    std::string out;
    std::optional<std::size_t> replicates;
    std::string truncation;
    std::string rmax;
    std::optional<double> c;
    std::string x;
    std::string horizons;
    std::optional<int> rows;
};

ExperimentConfig resolve(const Flags& f, bool specs_required = true) {
    ExperimentConfig cfg = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
    for (const std::string& label : f.specs) {
        try {
            cfg.specs.push_back(parse_spec_label(label));
        } catch (const InvalidSpec& e) {
            throw ConfigError("--spec '" + label + "': " + e.what());
        }
    }
    if (f.seed) cfg.sim.seed = *f.seed;
    if (!f.format.empty()) cfg.format = parse_format(f.format);
    if (!f.out.empty()) cfg.out = f.out;
    if (f.replicates) cfg.sim.replicates = *f.replicates;
    if (!f.truncation.empty()) cfg.sim.truncation = parse_truncation(f.truncation);
    if (!f.rmax.empty()) {
        if (f.rmax == "auto")
            cfg.rmax.reset();
        else
            cfg.rmax = static_cast<int>(parse_number_list(f.rmax, "rmax").front());
    }
    if (f.c) cfg.c = *f.c;
    if (!f.x.empty()) cfg.x_grid = parse_number_list(f.x, "x");
    if (!f.horizons.empty()) cfg.horizons = parse_horizon_list(f.horizons);
    if (f.rows) cfg.rows = *f.rows;
    if (specs_required) validate(cfg);
    return cfg;
}

void emit(const ExperimentConfig& cfg, const std::string& text) {
    if (!cfg.out) {
        std::cout << text;
        return;
    }
    std::ofstream file(*cfg.out);
    if (!file) throw IoError("cannot open output file '" + *cfg.out + "'");
    file << text;
    if (!file) throw IoError("failed writing '" + *cfg.out + "'");
}

Metadata run_metadata(const ExperimentConfig& cfg) {
    Metadata meta = base_metadata();
    meta.emplace_back("c", format_number(cfg.c));
    meta.emplace_back("seed", std::to_string(cfg.sim.seed));
    return meta;
}

int moment_cap(const ExperimentConfig& cfg, const ShockSpec& spec) {
    return cfg.rmax ? *cfg.rmax : std::max(2, finite_moment_count(spec));
}

std::string verdict(const Regime& g, double c) {
    if (g.ruin_certain()) return "ruin certain (E log eps <= 0)";
    if (g.d1 == 0.0 && std::isinf(g.d2)) return "interior for all x>c";
    std::ostringstream os;
    if (g.d1 > 0.0) os << "zero for x<" << format_number(c * g.certain_ruin_multiplier);
    if (g.d1 < g.d2) os << (g.d1 > 0.0 ? "; " : "") << "interior between";
    if (std::isfinite(g.d2))
        os << "; one for x" << (g.m > 1.0 ? ">=" : ">") << format_number(c * g.certain_survival_multiplier);
    return os.str();
}

void cmd_classify(const Flags& f) {
    const ExperimentConfig cfg = resolve(f);
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json) {
        nlohmann::json out = nlohmann::json::array();
        for (const ShockSpec& spec : cfg.specs) {
            const Regime g = classify(spec);
            out.push_back({{"spec", to_json(spec)},
                           {"c", cfg.c},
                           {"regime", to_json(g)},
                           {"ruin_certain_below_x", json_number(cfg.c * g.certain_ruin_multiplier)},
                           {"survival_certain_above_x",
                            json_number(cfg.c * g.certain_survival_multiplier)},
                           {"verdict", verdict(g, cfg.c)}});
        }
        os << out.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const ShockSpec& spec : cfg.specs) {
            const Regime g = classify(spec);
            rows.push_back({spec_label(spec), format_number(g.elog), format_number(g.m),
                            format_number(g.M), format_number(g.d1), format_number(g.d2),
                            format_number(cfg.c * g.certain_ruin_multiplier),
                            format_number(cfg.c * g.certain_survival_multiplier),
                            verdict(g, cfg.c)});
        }
        write_csv(os, run_metadata(cfg),
                  {"spec", "elog", "m", "M", "d1", "d2", "ruin_certain_below_x",
                   "survival_certain_above_x", "verdict"},
                  rows);
    }
    emit(cfg, os.str());
}

std::vector<std::size_t> finite_horizons(const ExperimentConfig& cfg) {
    std::vector<std::size_t> out;
    for (const Horizon& h : cfg.horizons)
        if (!h.is_infinite()) out.push_back(h.periods());
    std::sort(out.begin(), out.end());
    return out;
}

void cmd_moments(const Flags& f) {
    const ExperimentConfig cfg = resolve(f);
    const auto finite = finite_horizons(cfg);
    std::ostringstream os;
    nlohmann::json out = nlohmann::json::array();
    for (const ShockSpec& spec : cfg.specs) {
        const int rmax = cfg.rmax ? *cfg.rmax : finite_moment_count(spec) + 1;
        if (!finite.empty()) {
            const FiniteMomentGrid grid = finite_moments(spec, rmax, static_cast<int>(finite.back()));
            if (cfg.format == OutputFormat::Json) {
                nlohmann::json rows = nlohmann::json::array();
                for (int r = 1; r <= rmax; ++r)
                    for (std::size_t n : finite)
                        rows.push_back({{"r", r}, {"n", n},
                                        {"beta_r_n", json_number(grid.beta(r, static_cast<int>(n)))}});
                out.push_back({{"spec", to_json(spec)}, {"moments", rows}});
            } else {
                std::vector<std::vector<std::string>> rows;
                for (int r = 1; r <= rmax; ++r)
                    for (std::size_t n : finite)
                        rows.push_back({std::to_string(r), std::to_string(n),
                                        format_number(grid.beta(r, static_cast<int>(n)))});
                Metadata meta = base_metadata();
                meta.emplace_back("spec", spec_label(spec));
                write_csv(os, meta, {"r", "n", "beta_r_n"}, rows);
            }
            continue;
        }
        const MomentTable table = infinite_moments(spec, rmax);
        if (cfg.format == OutputFormat::Json)
            out.push_back(to_json(table));
        else
            write_moments_csv(os, table, base_metadata());
    }
    if (cfg.format == OutputFormat::Json) os << out.dump(2) << '\n';
    emit(cfg, os.str());
}

void cmd_bounds(const Flags& f) {
    const ExperimentConfig cfg = resolve(f);
    if (cfg.x_grid.empty()) throw ConfigError("bounds needs an x grid (--x or x = ...)");
    std::vector<Horizon> horizons = cfg.horizons;
    std::sort(horizons.begin(), horizons.end());
    std::vector<double> xs = cfg.x_grid;
    std::sort(xs.begin(), xs.end());

    std::vector<std::vector<std::string>> rows;
    nlohmann::json out = nlohmann::json::array();
    for (const ShockSpec& spec : cfg.specs) {
        const int rmax = moment_cap(cfg, spec);
        std::optional<FiniteMomentGrid> grid;
        const auto finite = finite_horizons(cfg);
        if (!finite.empty()) grid = finite_moments(spec, rmax, static_cast<int>(finite.back()));
        for (const Horizon& h : horizons) {
            const BoundSchedule sched =
                h.is_infinite() ? schedule(infinite_moments(spec, rmax), cfg.c)
                                : schedule(*grid, static_cast<int>(h.periods()), cfg.c);
            for (double x : xs) {
                const BoundResult b = sched.evaluate(x);
                const char* flag = b.flag == BoundFlag::None      ? "none"
                                   : b.flag == BoundFlag::Vacuous ? "vacuous"
                                                                  : "ruin-at-once";
                rows.push_back({spec_label(spec), h.to_string(), format_number(x),
                                std::to_string(b.order), format_number(b.survival),
                                format_number(std::min(1.0, b.ruin)), format_number(b.ruin), flag});
                out.push_back({{"spec", to_json(spec)},
                               {"horizon", h.to_string()},
                               {"x", x},
                               {"order", b.order},
                               {"survival_lower_bound", b.survival},
                               {"ruin_upper_bound", std::min(1.0, b.ruin)},
                               {"ruin_chebyshev", json_number(b.ruin)},
                               {"flag", flag}});
            }
        }
    }
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json)
        os << out.dump(2) << '\n';
    else
        write_csv(os, run_metadata(cfg),
                  {"spec", "horizon", "x", "order", "survival_lower_bound", "ruin_upper_bound",
                   "ruin_chebyshev", "flag"},
                  rows);
    emit(cfg, os.str());
}

void cmd_boundaries(const Flags& f) {
    const ExperimentConfig cfg = resolve(f);
    const int rows_wanted = cfg.rmax ? std::max(1, *cfg.rmax - 1) : cfg.rows;
    std::ostringstream os;
    nlohmann::json out = nlohmann::json::array();
    for (const ShockSpec& spec : cfg.specs) {
        const auto table = boundary_table(spec, cfg.c, cfg.horizons, rows_wanted);
        std::vector<std::string> header{"r"};
        for (const Horizon& h : cfg.horizons)
            header.push_back(h.is_infinite() ? "Z" : "Z_" + h.to_string());
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> c_row{"c"};
        for (std::size_t i = 0; i < cfg.horizons.size(); ++i) c_row.push_back(format_number(cfg.c));
        rows.push_back(c_row);
        nlohmann::json jrows = nlohmann::json::array();
        for (std::size_t r = 0; r < table.size(); ++r) {
            std::vector<std::string> row{std::to_string(r + 1)};
            nlohmann::json jrow = nlohmann::json::array();
            for (double v : table[r]) {
                row.push_back(format_number(v));
                jrow.push_back(json_number(v));
            }
            rows.push_back(row);
            jrows.push_back(jrow);
        }
        if (cfg.format == OutputFormat::Json) {
            out.push_back({{"spec", to_json(spec)}, {"c", cfg.c}, {"columns", header}, {"rows", jrows}});
        } else {
            Metadata meta = run_metadata(cfg);
            meta.emplace_back("spec", spec_label(spec));
            write_csv(os, meta, header, rows);
        }
    }
    if (cfg.format == OutputFormat::Json) os << out.dump(2) << '\n';
    emit(cfg, os.str());
}

void cmd_simulate(const Flags& f) {
    const ExperimentConfig cfg = resolve(f);
    std::ostringstream os;
    if (cfg.format == OutputFormat::Csv) {
        if (cfg.specs.size() != 1)
            throw ConfigError("simulate --format csv writes one sample set; give exactly one spec");
        write_samples_csv(os, sample_z(cfg.specs.front(), cfg.sim), base_metadata());
        emit(cfg, os.str());
        return;
    }
    std::vector<double> xs = cfg.x_grid;
    std::sort(xs.begin(), xs.end());
    nlohmann::json out = nlohmann::json::array();
    for (const ShockSpec& spec : cfg.specs) {
        const EcdfEstimate est = sample_z(spec, cfg.sim);
        nlohmann::json estimates = nlohmann::json::array();
        for (double x : xs)
            estimates.push_back({{"x", x},
                                 {"survival", ecdf_survival(est, x, cfg.c)},
                                 {"standard_error", ecdf_standard_error(est, x, cfg.c)}});
        out.push_back({{"spec", to_json(spec)},
                       {"generator", kGeneratorName},
                       {"seed", cfg.sim.seed},
                       {"N", est.size()},
                       {"n", est.horizon().to_string()},
                       {"c", cfg.c},
                       {"estimates", estimates}});
    }
    os << out.dump(2) << '\n';
    emit(cfg, os.str());
}

void cmd_reproduce(const Flags& f, int table_id, const std::string& lognormal,
                   const std::string& deltas_path) {
    ExperimentConfig cfg = resolve(f, false);
    ReproduceOptions opt;
    opt.seed = cfg.sim.seed;
    opt.replicates = cfg.sim.replicates;
    if (lognormal == "rounded")
        opt.lognormal = LognormalParams::Rounded;
    else if (lognormal != "matched")
        throw ConfigError("--lognormal must be matched or rounded");

    const ReproducedTable table = reproduce_table(table_id, opt);
    std::ostringstream os;
    write_table_csv(os, table);
    emit(cfg, os.str());

    const std::string report = delta_report(table).dump(2) + "\n";
    std::string path = deltas_path;
    if (path.empty() && cfg.out) path = *cfg.out + ".deltas.json";
    if (path.empty()) {
        std::cerr << report;
        return;
    }
    std::ofstream file(path);
    if (!file) throw IoError("cannot open output file '" + path + "'");
    file << report;
    if (!file) throw IoError("failed writing '" + path + "'");
}

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "Key/value experiment file");
    cmd->add_option("--spec", f.specs, "Shock law, e.g. 'family=pareto;beta=0.1;k=0.9' (repeatable)");
    cmd->add_option("--seed", f.seed, "Master seed for Monte Carlo streams");
    cmd->add_option("--format", f.format, "csv or json");
    cmd->add_option("--out", f.out, "Output path (default stdout)");
    cmd->add_option("--replicates", f.replicates, "Monte Carlo replicates N");
    cmd->add_option("--truncation", f.truncation, "Terms per replicate: an integer n or 'adaptive'");
    cmd->add_option("--rmax", f.rmax, "Highest moment order, or 'auto'");
    cmd->add_option("--c", f.c, "Consumption target c");
    cmd->add_option("--x", f.x, "Comma-separated initial stocks");
    cmd->add_option("--horizons", f.horizons, "Comma-separated horizons; 'inf' for infinite");
    cmd->add_option("--rows", f.rows, "Boundary rows to print");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Survival probabilities in the stochastic Ramsey model"};
    app.require_subcommand(1);
    Flags flags;

    auto* classify_cmd = app.add_subcommand("classify", "Regime of each shock law");
    auto* moments_cmd = app.add_subcommand("moments", "Moments of Z or Z_n");
    auto* bounds_cmd = app.add_subcommand("bounds", "Chebyshev lower bounds on survival");
    auto* boundaries_cmd = app.add_subcommand("boundaries", "Order-selection boundaries by horizon");
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo samples of Z or Z_n");
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Rebuild a reference table (1..9)");
    for (auto* cmd : {classify_cmd, moments_cmd, bounds_cmd, boundaries_cmd, simulate_cmd, reproduce_cmd})
        add_common(cmd, flags);

    int table_id = 0;
    std::string lognormal = "matched";
    std::string deltas_path;
    reproduce_cmd->add_option("table", table_id, "Table id")->required()->check(CLI::Range(1, 9));
    reproduce_cmd->add_option("--lognormal", lognormal, "Lognormal parameters for tables 1 and 3: matched or rounded");
    reproduce_cmd->add_option("--deltas", deltas_path, "Path of the JSON delta report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*classify_cmd) cmd_classify(flags);
        else if (*moments_cmd) cmd_moments(flags);
        else if (*bounds_cmd) cmd_bounds(flags);
        else if (*boundaries_cmd) cmd_boundaries(flags);
        else if (*simulate_cmd) cmd_simulate(flags);
        else if (*reproduce_cmd) cmd_reproduce(flags, table_id, lognormal, deltas_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const InvalidSpec& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}
