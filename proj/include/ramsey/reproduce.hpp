#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/io.hpp"
#include "ramsey/reference_tables.hpp"

namespace ramsey {

struct ReproduceOptions {
    std::uint64_t seed = 20240601;
    std::size_t replicates = 3000;
    LognormalParams lognormal = LognormalParams::Matched;
};

enum class CellKind { Analytic, MonteCarlo };

struct CellDelta {
    std::string row;
    std::string column;
    double emitted;
    double published;
    double abs_delta;
    double rel_delta;
    CellKind kind;
    double tolerance;
    bool relative_tolerance;
    double standard_error;  // Monte Carlo cells only
    bool within_tolerance;
};

struct ReproducedTable {
    int id;
    std::string caption;
    Metadata metadata;
    std::vector<std::string> row_labels;
    std::vector<std::string> column_labels;
    std::vector<std::vector<std::optional<double>>> values;
    std::vector<CellDelta> deltas;

    bool all_within_tolerance() const;
};

ReproducedTable reproduce_table(int id, const ReproduceOptions& options);

// Same layout as the published table, first column holding the row label.
void write_table_csv(std::ostream& os, const ReproducedTable& table);
nlohmann::json delta_report(const ReproducedTable& table);

// Bound schedule order cap used for every reproduced table: the infinite
// horizon's count of finite moments.
int reference_moment_count(const ShockSpec& spec);

}  // namespace ramsey
