#include "ramsey/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

void validate(const SimConfig& config) {
    if (config.replicates < 1) throw InvalidSpec("replicates must be >= 1");
    if (config.truncation.is_adaptive) {
        if (!(config.adaptive_tol > 0.0 && config.adaptive_tol <= 1e-6))
            throw InvalidSpec("adaptive tolerance must lie in (0, 1e-6]");
        if (config.adaptive_floor < 1 || config.adaptive_max_terms < config.adaptive_floor)
            throw InvalidSpec("adaptive floor must be >= 1 and <= the term cap");
    } else if (config.truncation.n < 1) {
        throw InvalidSpec("truncation n must be >= 1");
    }
}

void require_summable(const ShockSpec& spec, const SimConfig& config) {
    if (config.truncation.is_adaptive && !(expected_log(spec) > 0.0))
        throw DomainError("adaptive truncation needs E log eps > 0; the series for Z diverges");
}

double sample_z_once(const ShockSpec& spec, const SimConfig& config, Stream& stream) {
    double sum = 0.0;
    double term = 1.0;
    if (!config.truncation.is_adaptive) {
        for (std::size_t j = 0; j < config.truncation.n; ++j) {
            term *= sample_inverse(spec, stream);
            sum += term;
        }
        return sum;
    }
    for (std::size_t j = 1; j <= config.adaptive_max_terms; ++j) {
        term *= sample_inverse(spec, stream);
        sum += term;
        if (j >= config.adaptive_floor && term < config.adaptive_tol * sum) break;
    }
    return sum;
}

EcdfEstimate sample_z(const ShockSpec& spec, const SimConfig& config) {
    validate(config);
    require_summable(spec, config);
    std::vector<double> samples(config.replicates);
    const auto count = static_cast<std::int64_t>(config.replicates);

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        Stream stream(config.seed, static_cast<std::uint64_t>(i));
        samples[i] = sample_z_once(spec, config, stream);
    }

    std::sort(samples.begin(), samples.end());
    return EcdfEstimate{spec, config, std::move(samples)};
}

double ecdf_survival(const EcdfEstimate& est, double x, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("consumption c must be > 0");
    if (est.samples.empty() || x <= c) return 0.0;
    const double threshold = x / c - 1.0;
    // Strict: count Z < x/c - 1.
    const auto below = std::lower_bound(est.samples.begin(), est.samples.end(), threshold);
    return static_cast<double>(below - est.samples.begin()) / static_cast<double>(est.size());
}

double ecdf_standard_error(const EcdfEstimate& est, double x, double c) {
    const double p = ecdf_survival(est, x, c);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(est.size()));
}

PathOutcome simulate_path(const ShockSpec& spec, double x, double c, std::size_t horizon,
                          Stream& stream) {
    if (!(c > 0.0)) throw std::invalid_argument("consumption c must be > 0");
    if (x <= c) return {false, 0};
    double stock = x;
    for (std::size_t j = 1; j <= horizon; ++j) {
        // stock > c here, so the investment is positive.
        stock = (stock - c) / sample_inverse(spec, stream);
        if (stock <= c) return {false, j};
    }
    return {true, 0};
}

CrosscheckReport crosscheck_equivalence(const ShockSpec& spec, double x, double c,
                                        std::size_t horizon, std::size_t paths,
                                        std::uint64_t seed) {
    if (!(c > 0.0) || !(x > c)) throw std::invalid_argument("crosscheck needs x > c > 0");
    CrosscheckReport report;
    report.paths = paths;
    const double threshold = x / c - 1.0;
    const auto count = static_cast<std::int64_t>(paths);
    std::size_t survived = 0;

#pragma omp parallel
    {
        std::vector<Discrepancy> local;
        std::vector<double> draws(horizon);
#pragma omp for schedule(static) reduction(+ : survived)
        for (std::int64_t p = 0; p < count; ++p) {
            Stream stream(seed, static_cast<std::uint64_t>(p));
            for (double& d : draws) d = sample_inverse(spec, stream);

            double partial = 0.0, product = 1.0;
            for (double d : draws) {
                product *= d;
                partial += product;
            }
            const bool by_perpetuity = partial < threshold;

            bool by_process = true;
            double stock = x;
            for (double d : draws) {
                stock = (stock - c) / d;
                if (stock <= c) {
                    by_process = false;
                    break;
                }
            }

            if (by_process) ++survived;
            if (by_process != by_perpetuity)
                local.push_back({static_cast<std::size_t>(p), by_process, by_perpetuity, draws});
        }
#pragma omp critical
        report.discrepancies.insert(report.discrepancies.end(), local.begin(), local.end());
    }
    report.survived = survived;
    std::sort(report.discrepancies.begin(), report.discrepancies.end(),
              [](const Discrepancy& a, const Discrepancy& b) { return a.path < b.path; });
    return report;
}

}  // namespace ramsey
