#include "ramsey/reproduce.hpp"

#include <array>
#include <cmath>
#include <ostream>

#include "ramsey/chebyshev.hpp"
#include "ramsey/format.hpp"
#include "ramsey/montecarlo.hpp"
#include "ramsey/numeric.hpp"

namespace ramsey {

namespace {

constexpr double kMonteCarloTolerance = 0.03;

struct Tolerance {
    double value;
    bool relative;
};

using Matrix = std::vector<std::vector<std::optional<double>>>;
using KindMatrix = std::vector<std::vector<CellKind>>;

double relative_delta(double emitted, double published) {
    if (emitted == published) return 0.0;
    return std::abs(emitted - published) / std::abs(published);
}

void compare(ReproducedTable& out, const KindMatrix& kinds, const std::vector<std::vector<double>>& se,
             Tolerance analytic) {
    const PublishedTable& pub = published_table(out.id);
    for (std::size_t i = 0; i < pub.values.size(); ++i) {
        for (std::size_t j = 0; j < pub.values[i].size(); ++j) {
            const auto& published = pub.values[i][j];
            const auto& emitted = out.values[i][j];
            if (!published || !emitted) continue;
            CellDelta d{};
            d.row = pub.row_labels[i];
            d.column = pub.column_labels[j];
            d.emitted = *emitted;
            d.published = *published;
            d.abs_delta = d.emitted == d.published ? 0.0 : std::abs(d.emitted - d.published);
            d.rel_delta = relative_delta(d.emitted, d.published);
            d.kind = kinds[i][j];
            if (d.kind == CellKind::MonteCarlo) {
                d.tolerance = kMonteCarloTolerance;
                d.relative_tolerance = false;
                d.standard_error = se[i][j];
            } else {
                d.tolerance = analytic.value;
                d.relative_tolerance = analytic.relative;
            }
            const double measured = d.relative_tolerance ? d.rel_delta : d.abs_delta;
            d.within_tolerance = measured <= d.tolerance;
            out.deltas.push_back(d);
        }
    }
}

ReproducedTable skeleton(int id) {
    const PublishedTable& pub = published_table(id);
    ReproducedTable out;
    out.id = id;
    out.caption = pub.caption;
    out.metadata = base_metadata();
    out.metadata.emplace_back("table", std::to_string(id));
    out.row_labels = pub.row_labels;
    out.column_labels = pub.column_labels;
    out.values.assign(pub.row_labels.size(),
                      std::vector<std::optional<double>>(pub.column_labels.size()));
    return out;
}

// Tables 1 and 2: gamma_r, beta_r, c (1 + beta_{r+1}/beta_r) with c = 1.
ReproducedTable moment_table(int id, const ShockSpec& spec, Tolerance tol) {
    ReproducedTable out = skeleton(id);
    out.metadata.emplace_back("spec", spec_label(spec));
    const int rows = static_cast<int>(out.row_labels.size());
    const MomentTable table = infinite_moments(spec, rows + 1);
    for (int r = 1; r <= rows; ++r) {
        const double ratio = table.log_beta(r + 1) - table.log_beta(r);
        out.values[r - 1] = {table.gamma(r), table.beta(r),
                             std::isfinite(ratio) ? 1.0 + std::exp(ratio) : kInf};
    }
    compare(out, KindMatrix(rows, std::vector<CellKind>(3, CellKind::Analytic)), {}, tol);
    return out;
}

ReproducedTable infinite_horizon_table(const ReproduceOptions& opt) {
    ReproducedTable out = skeleton(3);
    const std::array<ShockSpec, 2> specs{reference::lognormal_infinite_horizon(opt.lognormal),
                                         reference::pareto_infinite_horizon()};
    out.metadata.emplace_back("spec_lognormal", spec_label(specs[0]));
    out.metadata.emplace_back("spec_pareto", spec_label(specs[1]));
    out.metadata.emplace_back("generator", std::string(kGeneratorName));
    out.metadata.emplace_back("seed", std::to_string(opt.seed));
    out.metadata.emplace_back("N", std::to_string(opt.replicates));
    out.metadata.emplace_back("truncation", "adaptive");

    const auto& grid = reference::kInfiniteHorizonGrid;
    KindMatrix kinds(4, std::vector<CellKind>(grid.size()));
    std::vector<std::vector<double>> se(4, std::vector<double>(grid.size(), 0.0));
    for (std::size_t s = 0; s < specs.size(); ++s) {
        SimConfig sim;
        sim.replicates = opt.replicates;
        sim.seed = opt.seed;
        sim.truncation = Truncation::adaptive();
        const EcdfEstimate est = sample_z(specs[s], sim);
        const MomentTable table =
            infinite_moments(specs[s], reference_moment_count(specs[s]));
        const BoundSchedule sched = schedule(table, 1.0);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            out.values[2 * s][j] = ecdf_survival(est, grid[j], 1.0);
            se[2 * s][j] = ecdf_standard_error(est, grid[j], 1.0);
            kinds[2 * s][j] = CellKind::MonteCarlo;
            out.values[2 * s + 1][j] = sched.survival_lower_bound(grid[j]);
            kinds[2 * s + 1][j] = CellKind::Analytic;
        }
    }
    compare(out, kinds, se, {1e-3, false});
    return out;
}

ReproducedTable boundary_reproduction(int id, const ShockSpec& spec) {
    ReproducedTable out = skeleton(id);
    out.metadata.emplace_back("spec", spec_label(spec));
    std::vector<Horizon> horizons;
    for (std::size_t n : reference::kFiniteHorizons) horizons.push_back(Horizon::finite(n));
    horizons.push_back(Horizon::infinite());
    const auto table = boundary_table(spec, 1.0, horizons, 5);
    out.values[0].assign(horizons.size(), 1.0);
    for (std::size_t r = 0; r < table.size(); ++r)
        for (std::size_t h = 0; h < horizons.size(); ++h) out.values[r + 1][h] = table[r][h];
    compare(out, KindMatrix(6, std::vector<CellKind>(horizons.size(), CellKind::Analytic)), {},
            {1e-3, true});
    return out;
}

ReproducedTable finite_bound_reproduction(int id, const ShockSpec& spec,
                                          const ReproduceOptions& opt) {
    ReproducedTable out = skeleton(id);
    const int moments = reference_moment_count(spec);
    out.metadata.emplace_back("spec", spec_label(spec));
    out.metadata.emplace_back("rmax", std::to_string(moments));
    out.metadata.emplace_back("generator", std::string(kGeneratorName));
    out.metadata.emplace_back("seed", std::to_string(opt.seed));
    out.metadata.emplace_back("N", std::to_string(opt.replicates));

    const auto& grid = reference::kFiniteHorizonGrid;
    const auto& horizons = reference::kFiniteHorizons;
    const FiniteMomentGrid moments_grid =
        finite_moments(spec, moments, static_cast<int>(horizons.back()));
    KindMatrix kinds(grid.size(), std::vector<CellKind>(2 * horizons.size()));
    std::vector<std::vector<double>> se(grid.size(), std::vector<double>(2 * horizons.size()));
    for (std::size_t h = 0; h < horizons.size(); ++h) {
        const BoundSchedule sched = schedule(moments_grid, static_cast<int>(horizons[h]), 1.0);
        SimConfig sim;
        sim.replicates = opt.replicates;
        sim.seed = opt.seed;
        sim.truncation = Truncation::fixed(horizons[h]);
        const EcdfEstimate est = sample_z(spec, sim);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            out.values[i][2 * h] = sched.survival_lower_bound(grid[i]);
            kinds[i][2 * h] = CellKind::Analytic;
            out.values[i][2 * h + 1] = ecdf_survival(est, grid[i], 1.0);
            se[i][2 * h + 1] = ecdf_standard_error(est, grid[i], 1.0);
            kinds[i][2 * h + 1] = CellKind::MonteCarlo;
        }
    }
    compare(out, kinds, se, {1e-3, false});
    return out;
}

}  // namespace

bool ReproducedTable::all_within_tolerance() const {
    for (const CellDelta& d : deltas)
        if (!d.within_tolerance) return false;
    return true;
}

int reference_moment_count(const ShockSpec& spec) { return finite_moment_count(spec); }

ReproducedTable reproduce_table(int id, const ReproduceOptions& options) {
    switch (id) {
        case 1: {
            const bool rounded = options.lognormal == LognormalParams::Rounded;
            ReproducedTable t =
                moment_table(1, reference::lognormal_infinite_horizon(options.lognormal),
                             {rounded ? 5e-3 : 5e-4, false});
            t.metadata.emplace_back("lognormal_params", rounded ? "rounded" : "matched");
            return t;
        }
        case 2: return moment_table(2, reference::pareto_infinite_horizon(), {5e-4, false});
        case 3: return infinite_horizon_table(options);
        case 4: return boundary_reproduction(4, reference::lognormal_finite_horizon());
        case 5: return boundary_reproduction(5, reference::pareto_finite_horizon());
        case 6: return boundary_reproduction(6, reference::gamma_finite_horizon());
        case 7: return finite_bound_reproduction(7, reference::lognormal_finite_horizon(), options);
        case 8: return finite_bound_reproduction(8, reference::pareto_finite_horizon(), options);
        case 9: return finite_bound_reproduction(9, reference::gamma_finite_horizon(), options);
        default: throw std::out_of_range("table id must be in 1..9");
    }
}

void write_table_csv(std::ostream& os, const ReproducedTable& table) {
    Metadata meta = table.metadata;
    meta.emplace_back("caption", table.caption);
    std::vector<std::string> header{table.id == 3 || table.id >= 7 ? "x" : "r"};
    header.insert(header.end(), table.column_labels.begin(), table.column_labels.end());
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < table.row_labels.size(); ++i) {
        std::vector<std::string> row{table.row_labels[i]};
        for (const auto& v : table.values[i]) row.push_back(v ? format_number(*v) : "");
        rows.push_back(std::move(row));
    }
    write_csv(os, meta, header, rows);
}

nlohmann::json delta_report(const ReproducedTable& table) {
    nlohmann::json cells = nlohmann::json::array();
    double max_abs = 0.0, max_rel = 0.0;
    for (const CellDelta& d : table.deltas) {
        nlohmann::json cell{{"row", d.row},
                            {"column", d.column},
                            {"emitted", json_number(d.emitted)},
                            {"published", json_number(d.published)},
                            {"abs_delta", d.abs_delta},
                            {"rel_delta", d.rel_delta},
                            {"kind", d.kind == CellKind::MonteCarlo ? "monte_carlo" : "analytic"},
                            {"tolerance", d.tolerance},
                            {"tolerance_type", d.relative_tolerance ? "relative" : "absolute"},
                            {"within_tolerance", d.within_tolerance}};
        if (d.kind == CellKind::MonteCarlo) cell["standard_error"] = d.standard_error;
        else {
            max_abs = std::max(max_abs, d.abs_delta);
            max_rel = std::max(max_rel, d.rel_delta);
        }
        cells.push_back(std::move(cell));
    }
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [k, v] : table.metadata) meta[k] = v;
    return {{"table", table.id},
            {"caption", table.caption},
            {"metadata", meta},
            {"analytic_max_abs_delta", max_abs},
            {"analytic_max_rel_delta", max_rel},
            {"all_within_tolerance", table.all_within_tolerance()},
            {"cells", cells}};
}

}  // namespace ramsey
