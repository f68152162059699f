#include "ramsey/io.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "ramsey/errors.hpp"
#include "ramsey/format.hpp"
#include "ramsey/numeric.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

double cell_number(const std::string& text) {
    double v = 0.0;
    if (!parse_number(text, v)) throw IoError("not a number in CSV: '" + text + "'");
    return v;
}

std::size_t column_index(const CsvDocument& doc, const std::string& name) {
    for (std::size_t i = 0; i < doc.header.size(); ++i)
        if (doc.header[i] == name) return i;
    throw IoError("CSV has no column '" + name + "'");
}

}  // namespace

Metadata base_metadata() { return {{"tool", std::string(kToolVersion)}}; }

std::string spec_label(const ShockSpec& spec) {
    const auto record = to_record(spec);
    std::string out = "family=" + record.at("family");
    for (const auto& [k, v] : record)
        if (k != "family") out += ";" + k + "=" + v;
    return out;
}

ShockSpec parse_spec_label(const std::string& label) {
    std::map<std::string, std::string> record;
    for (const std::string& part : split(label, ';')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw InvalidSpec("bad spec field '" + part + "'");
        record[part.substr(0, eq)] = part.substr(eq + 1);
    }
    return from_record(record);
}

void write_csv(std::ostream& os, const Metadata& meta, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    for (const auto& [k, v] : meta) os << "# " << k << ": " << v << '\n';
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
    if (!os) throw IoError("failed writing CSV output");
}

CsvDocument read_csv(std::istream& is) {
    CsvDocument doc;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const auto colon = line.find(": ");
            if (colon != std::string::npos)
                doc.metadata[line.substr(2, colon - 2)] = line.substr(colon + 2);
            continue;
        }
        if (!have_header) {
            doc.header = split(line, ',');
            have_header = true;
        } else {
            doc.rows.push_back(split(line, ','));
        }
    }
    if (!have_header) throw IoError("CSV has no header line");
    return doc;
}

void write_moments_csv(std::ostream& os, const MomentTable& table, Metadata meta) {
    meta.emplace_back("spec", spec_label(table.spec()));
    meta.emplace_back("rmax", std::to_string(table.rmax()));
    meta.emplace_back("first_infinite", table.first_infinite()
                                            ? std::to_string(*table.first_infinite())
                                            : std::string("none"));
    std::vector<std::vector<std::string>> rows;
    for (int r = 1; r <= table.rmax(); ++r)
        rows.push_back({std::to_string(r), format_number(table.gamma(r)),
                        format_number(table.beta(r))});
    write_csv(os, meta, {"r", "gamma_r", "beta_r"}, rows);
}

void write_finite_moments_csv(std::ostream& os, const FiniteMomentGrid& grid, Metadata meta) {
    meta.emplace_back("spec", spec_label(grid.spec()));
    meta.emplace_back("rmax", std::to_string(grid.rmax()));
    meta.emplace_back("nmax", std::to_string(grid.nmax()));
    std::vector<std::vector<std::string>> rows;
    for (int r = 1; r <= grid.rmax(); ++r)
        for (int n = 1; n <= grid.nmax(); ++n)
            rows.push_back({std::to_string(r), std::to_string(n), format_number(grid.beta(r, n))});
    write_csv(os, meta, {"r", "n", "beta_r_n"}, rows);
}

void write_samples_csv(std::ostream& os, const EcdfEstimate& est, Metadata meta) {
    meta.emplace_back("spec", spec_label(est.spec));
    meta.emplace_back("generator", std::string(kGeneratorName));
    meta.emplace_back("seed", std::to_string(est.config.seed));
    meta.emplace_back("n", est.horizon().to_string());
    if (est.config.truncation.is_adaptive) {
        meta.emplace_back("adaptive_tol", format_number(est.config.adaptive_tol));
        meta.emplace_back("adaptive_floor", std::to_string(est.config.adaptive_floor));
        meta.emplace_back("adaptive_max_terms", std::to_string(est.config.adaptive_max_terms));
    }
    meta.emplace_back("N", std::to_string(est.size()));
    std::vector<std::vector<std::string>> rows;
    rows.reserve(est.size());
    for (double z : est.samples) rows.push_back({format_number(z)});
    write_csv(os, meta, {"z"}, rows);
}

MomentTable moments_from_csv(const CsvDocument& doc, const ShockSpec& spec) {
    const auto r_col = column_index(doc, "r");
    const auto g_col = column_index(doc, "gamma_r");
    const auto b_col = column_index(doc, "beta_r");
    std::vector<double> lg, lb;
    std::optional<int> first_infinite;
    for (const auto& row : doc.rows) {
        if (row.size() <= std::max({r_col, g_col, b_col})) throw IoError("short CSV row");
        const int r = static_cast<int>(cell_number(row[r_col]));
        if (r != static_cast<int>(lg.size()) + 1) throw IoError("moment rows out of order");
        lg.push_back(std::log(cell_number(row[g_col])));
        lb.push_back(std::log(cell_number(row[b_col])));
    }
    auto it = doc.metadata.find("first_infinite");
    if (it != doc.metadata.end() && it->second != "none") first_infinite = std::stoi(it->second);
    return MomentTable(spec, std::move(lg), std::move(lb), first_infinite);
}

std::vector<double> samples_from_csv(const CsvDocument& doc) {
    const auto col = column_index(doc, "z");
    std::vector<double> out;
    out.reserve(doc.rows.size());
    for (const auto& row : doc.rows) out.push_back(cell_number(row.at(col)));
    return out;
}

nlohmann::json json_number(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

double number_from_json(const nlohmann::json& j) {
    if (j.is_number()) return j.get<double>();
    double v = 0.0;
    if (j.is_string() && parse_number(j.get<std::string>(), v)) return v;
    throw IoError("expected a number or \"inf\" in JSON, got " + j.dump());
}

nlohmann::json to_json(const ShockSpec& spec) {
    nlohmann::json out;
    for (const auto& [k, v] : to_record(spec)) {
        double num = 0.0;
        if (k != "family" && parse_number(v, num))
            out[k] = num;
        else
            out[k] = v;
    }
    return out;
}

ShockSpec spec_from_json(const nlohmann::json& j) {
    std::map<std::string, std::string> record;
    for (const auto& [k, v] : j.items())
        record[k] = v.is_string() ? v.get<std::string>() : format_number(v.get<double>());
    return from_record(record);
}

nlohmann::json to_json(const Regime& regime) {
    return {
        {"elog", json_number(regime.elog)},
        {"m", json_number(regime.m)},
        {"M", json_number(regime.M)},
        {"d1", json_number(regime.d1)},
        {"d2", json_number(regime.d2)},
        {"certain_ruin_multiplier", json_number(regime.certain_ruin_multiplier)},
        {"certain_survival_multiplier", json_number(regime.certain_survival_multiplier)},
        {"ruin_certain", regime.ruin_certain()},
    };
}

Regime regime_from_json(const nlohmann::json& j) {
    Regime r{};
    r.elog = number_from_json(j.at("elog"));
    r.m = number_from_json(j.at("m"));
    r.M = number_from_json(j.at("M"));
    r.d1 = number_from_json(j.at("d1"));
    r.d2 = number_from_json(j.at("d2"));
    r.certain_ruin_multiplier = number_from_json(j.at("certain_ruin_multiplier"));
    r.certain_survival_multiplier = number_from_json(j.at("certain_survival_multiplier"));
    return r;
}

nlohmann::json to_json(const MomentTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 1; r <= table.rmax(); ++r)
        rows.push_back({{"r", r},
                        {"gamma_r", json_number(table.gamma(r))},
                        {"beta_r", json_number(table.beta(r))}});
    return {{"spec", to_json(table.spec())},
            {"first_infinite", table.first_infinite() ? nlohmann::json(*table.first_infinite())
                                                      : nlohmann::json(nullptr)},
            {"moments", rows}};
}

nlohmann::json to_json(const BoundSchedule& schedule) {
    nlohmann::json b = nlohmann::json::array();
    for (double v : schedule.boundaries()) b.push_back(json_number(v));
    return {{"c", schedule.c()},
            {"max_order", schedule.max_order()},
            {"degenerate", schedule.degenerate()},
            {"boundaries", b}};
}

}  // namespace ramsey
