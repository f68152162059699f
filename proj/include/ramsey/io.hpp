#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ramsey/chebyshev.hpp"
#include "ramsey/montecarlo.hpp"
#include "ramsey/moments.hpp"
#include "ramsey/regimes.hpp"

namespace ramsey {

inline constexpr std::string_view kToolVersion = "ramsey 1.0.0";

// Ordered "# key: value" lines written above every CSV.
using Metadata = std::vector<std::pair<std::string, std::string>>;

Metadata base_metadata();
std::string spec_label(const ShockSpec& spec);  // family=pareto;beta=0.1;k=0.9
ShockSpec parse_spec_label(const std::string& label);

struct CsvDocument {
    std::map<std::string, std::string> metadata;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const Metadata& meta, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
CsvDocument read_csv(std::istream& is);

// (r, gamma_r, beta_r)
void write_moments_csv(std::ostream& os, const MomentTable& table, Metadata meta);
// (r, n, beta_r_n), ordered by r then n.
void write_finite_moments_csv(std::ostream& os, const FiniteMomentGrid& grid, Metadata meta);
// One value per line under a "z" header.
void write_samples_csv(std::ostream& os, const EcdfEstimate& est, Metadata meta);

MomentTable moments_from_csv(const CsvDocument& doc, const ShockSpec& spec);
std::vector<double> samples_from_csv(const CsvDocument& doc);

// Finite values as numbers, infinities as the string "inf".
nlohmann::json json_number(double v);
double number_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ShockSpec& spec);
ShockSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Regime& regime);
Regime regime_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MomentTable& table);
nlohmann::json to_json(const BoundSchedule& schedule);

}  // namespace ramsey
