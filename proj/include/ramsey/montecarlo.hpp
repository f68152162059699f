#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ramsey/horizon.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/shock.hpp"

namespace ramsey {

/// How many terms of Z = sum_j (eps_1...eps_j)^-1 each replicate sums.
/// Adaptive mode is the infinite-horizon proxy: stop once the current term
/// drops below `tol` times the running sum, but never before `floor` terms.
struct Truncation {
    static Truncation fixed(std::size_t n) { return {false, n}; }
    static Truncation adaptive() { return {true, 0}; }

    bool is_adaptive;
    std::size_t n;

    Horizon horizon() const {
        return is_adaptive ? Horizon::infinite() : Horizon::finite(n);
    }
};

struct SimConfig {
    std::size_t replicates = 3000;
    Truncation truncation = Truncation::adaptive();
    std::uint64_t seed = 20240601;
    double adaptive_tol = 1e-12;
    std::size_t adaptive_floor = 100;
    std::size_t adaptive_max_terms = 100000;
};

// Throws InvalidSpec when the config breaks its invariants.
void validate(const SimConfig& config);

// Throws DomainError for adaptive truncation when E log eps <= 0.
void require_summable(const ShockSpec& spec, const SimConfig& config);

/// Sorted realizations of Z_n (or of the truncated Z) with the run's provenance.
struct EcdfEstimate {
    ShockSpec spec;
    SimConfig config;
    std::vector<double> samples;  // ascending

    std::size_t size() const { return samples.size(); }
    Horizon horizon() const { return config.truncation.horizon(); }
};

// OpenMP over replicates; bit-identical to sample_z_serial for any thread count.
EcdfEstimate sample_z(const ShockSpec& spec, const SimConfig& config);
EcdfEstimate sample_z_serial(const ShockSpec& spec, const SimConfig& config);

// One replicate: the partial sum drawn from `stream`.
double sample_z_once(const ShockSpec& spec, const SimConfig& config, Stream& stream);

// Fraction of samples with c (Z + 1) < x.
double ecdf_survival(const EcdfEstimate& est, double x, double c);

// sqrt(p (1 - p) / N) at the estimate's value for x.
double ecdf_standard_error(const EcdfEstimate& est, double x, double c);

struct PathOutcome {
    bool survived;           // X_j > c for every j <= horizon
    std::size_t ruin_time;   // first j with X_j <= c; meaningful when !survived
};

// Iterates X_{j+1} = eps_{j+1} (X_j - c)_+ from X_0 = x.
PathOutcome simulate_path(const ShockSpec& spec, double x, double c,
                          std::size_t horizon, Stream& stream);

struct Discrepancy {
    std::size_t path;
    bool process_survived;
    bool perpetuity_survived;
    std::vector<double> inverse_draws;
};

struct CrosscheckReport {
    std::size_t paths = 0;
    std::size_t survived = 0;
    std::vector<Discrepancy> discrepancies;

    bool passed() const { return discrepancies.empty(); }
};

/// Per path, draws 1/eps_1..1/eps_n once and decides survival twice: by
/// iterating the wealth process and by testing Z_n < x/c - 1.
CrosscheckReport crosscheck_equivalence(const ShockSpec& spec, double x, double c,
                                        std::size_t horizon, std::size_t paths,
                                        std::uint64_t seed);

}  // namespace ramsey
