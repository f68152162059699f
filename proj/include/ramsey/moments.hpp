#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/shock.hpp"

namespace ramsey {

/// Inverse moments gamma_r = E eps^-r and perpetuity moments beta_r = E Z^r
/// for r = 1..rmax, held as logarithms. Index 0 of the log vectors is r = 1.
class MomentTable {
  public:
    MomentTable(ShockSpec spec, std::vector<double> log_gamma,
                std::vector<double> log_beta, std::optional<int> first_infinite);

    const ShockSpec& spec() const { return spec_; }
    int rmax() const { return static_cast<int>(log_beta_.size()); }

    double log_gamma(int r) const { return log_gamma_.at(r - 1); }
    double log_beta(int r) const { return log_beta_.at(r - 1); }
    double gamma(int r) const;
    double beta(int r) const;

    // Smallest r with gamma_r >= 1 (searched past rmax up to 10^6), if any.
    std::optional<int> first_infinite() const { return first_infinite_; }

    std::span<const double> log_betas() const { return log_beta_; }

  private:
    ShockSpec spec_;
    std::vector<double> log_gamma_;
    std::vector<double> log_beta_;
    std::optional<int> first_infinite_;
};

/// beta_r^(n) = E Z_n^r for r = 1..rmax and n = 1..nmax, in the log domain.
class FiniteMomentGrid {
  public:
    FiniteMomentGrid(ShockSpec spec, int rmax, int nmax, std::vector<double> log_values);

    const ShockSpec& spec() const { return spec_; }
    int rmax() const { return rmax_; }
    int nmax() const { return nmax_; }

    // Conventions: beta_0^(n) = 1 and beta_r^(0) = 0.
    double log_beta(int r, int n) const;
    double beta(int r, int n) const;

    // beta_1..beta_rmax at horizon n (n >= 1).
    std::span<const double> log_column(int n) const;

  private:
    ShockSpec spec_;
    int rmax_;
    int nmax_;
    std::vector<double> log_values_;  // column-major: n-1 major, r-1 minor
};

// Requires E log eps > 0; throws DomainError otherwise.
MomentTable infinite_moments(const ShockSpec& spec, int rmax);

FiniteMomentGrid finite_moments(const ShockSpec& spec, int rmax, int nmax);

// Number of leading orders with gamma_r < 1, i.e. of finite beta_r, capped at
// `limit`. Bound schedules built from this many moments use orders up to one
// less; the last moment only places the top boundary.
int finite_moment_count(const ShockSpec& spec, int limit = 200);

}  // namespace ramsey
