#include "ramsey/config.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "ramsey/errors.hpp"
#include "ramsey/format.hpp"

namespace ramsey {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_one(const std::string& text, const std::string& what) {
    double v = 0.0;
    if (!parse_number(trim(text), v)) throw ConfigError(what + ": '" + text + "' is not a number");
    return v;
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    std::uint64_t v = 0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw ConfigError(what + ": '" + text + "' is not a non-negative integer");
    return v;
}

void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "c") {
        cfg.c = parse_one(value, "c");
    } else if (key == "x") {
        cfg.x_grid = parse_number_list(value, "x");
    } else if (key == "horizons") {
        cfg.horizons = parse_horizon_list(value);
    } else if (key == "rmax") {
        if (trim(value) == "auto")
            cfg.rmax.reset();
        else
            cfg.rmax = static_cast<int>(parse_count(value, "rmax"));
    } else if (key == "rows") {
        cfg.rows = static_cast<int>(parse_count(value, "rows"));
    } else if (key == "replicates") {
        cfg.sim.replicates = parse_count(value, "replicates");
    } else if (key == "truncation") {
        cfg.sim.truncation = parse_truncation(value);
    } else if (key == "seed") {
        cfg.sim.seed = parse_count(value, "seed");
    } else if (key == "adaptive_tol") {
        cfg.sim.adaptive_tol = parse_one(value, "adaptive_tol");
    } else if (key == "adaptive_floor") {
        cfg.sim.adaptive_floor = parse_count(value, "adaptive_floor");
    } else if (key == "format") {
        cfg.format = parse_format(value);
    } else if (key == "out") {
        cfg.out = trim(value);
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    for (const std::string& item : split_list(text)) out.push_back(parse_one(item, what));
    if (out.empty()) throw ConfigError(what + ": empty list");
    return out;
}

std::vector<Horizon> parse_horizon_list(const std::string& text) {
    std::vector<Horizon> out;
    for (const std::string& item : split_list(text)) {
        if (item == "inf" || item == "Inf")
            out.push_back(Horizon::infinite());
        else {
            const auto n = parse_count(item, "horizons");
            if (n < 1) throw ConfigError("horizons: finite horizons must be >= 1");
            out.push_back(Horizon::finite(n));
        }
    }
    if (out.empty()) throw ConfigError("horizons: empty list");
    return out;
}

Truncation parse_truncation(const std::string& text) {
    const std::string t = trim(text);
    if (t == "adaptive") return Truncation::adaptive();
    const auto n = parse_count(t, "truncation");
    if (n < 1) throw ConfigError("truncation: n must be >= 1 or 'adaptive'");
    return Truncation::fixed(n);
}

OutputFormat parse_format(const std::string& text) {
    const std::string t = trim(text);
    if (t == "csv") return OutputFormat::Csv;
    if (t == "json") return OutputFormat::Json;
    throw ConfigError("format: expected csv or json, got '" + t + "'");
}

ExperimentConfig parse_config(std::istream& is, const std::string& source) {
    ExperimentConfig cfg;
    std::optional<std::map<std::string, std::string>> section;
    int section_line = 0;
    std::string raw;
    int line_no = 0;

    auto close_section = [&]() {
        if (!section) return;
        try {
            cfg.specs.push_back(from_record(*section));
        } catch (const InvalidSpec& e) {
            throw ConfigError(source + ":" + std::to_string(section_line) + ": [spec] " + e.what());
        }
        section.reset();
    };

    while (std::getline(is, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const std::string where = source + ":" + std::to_string(line_no) + ": ";
        if (line.front() == '[') {
            if (line != "[spec]") throw ConfigError(where + "unknown section " + line);
            close_section();
            section.emplace();
            section_line = line_no;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + "empty key");
        if (section) {
            if (section->count(key)) throw ConfigError(where + "duplicate key '" + key + "'");
            (*section)[key] = value;
            continue;
        }
        try {
            apply_key(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(where + e.what());
        }
    }
    close_section();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

void validate(const ExperimentConfig& config) {
    if (config.specs.empty()) throw ConfigError("no [spec] given");
    if (!(config.c > 0.0) || !std::isfinite(config.c)) throw ConfigError("c must be > 0");
    for (double x : config.x_grid)
        if (!(x > 0.0)) throw ConfigError("x values must be > 0");
    if (config.rmax && *config.rmax < 1) throw ConfigError("rmax must be >= 1");
    if (config.rows < 1) throw ConfigError("rows must be >= 1");
    try {
        validate(config.sim);
    } catch (const InvalidSpec& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace ramsey
