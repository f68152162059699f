#include "ramsey/moments.hpp"

#include <stdexcept>
#include <string>

#include "ramsey/errors.hpp"
#include "ramsey/numeric.hpp"

namespace ramsey {

namespace {

// Orders scanned past rmax when locating the first gamma_r >= 1.
constexpr int kFirstInfiniteScan = 1000000;

// rows[r][j] = log C(r, j), 0 <= j <= r <= rmax.
std::vector<std::vector<double>> log_binomial_rows(int rmax) {
    std::vector<std::vector<double>> rows(rmax + 1);
    for (int r = 0; r <= rmax; ++r) {
        rows[r].resize(r + 1);
        for (int j = 0; j <= r; ++j) rows[r][j] = log_binomial(r, j);
    }
    return rows;
}

std::vector<double> log_inverse_moments(const ShockSpec& spec, int rmax) {
    std::vector<double> out(rmax);
    for (int r = 1; r <= rmax; ++r) out[r - 1] = log_inverse_moment(spec, r);
    return out;
}

}  // namespace

MomentTable::MomentTable(ShockSpec spec, std::vector<double> log_gamma,
                         std::vector<double> log_beta, std::optional<int> first_infinite)
    : spec_(std::move(spec)),
      log_gamma_(std::move(log_gamma)),
      log_beta_(std::move(log_beta)),
      first_infinite_(first_infinite) {
    if (log_gamma_.size() != log_beta_.size())
        throw std::invalid_argument("moment table columns differ in length");
}

double MomentTable::gamma(int r) const { return exp_or_inf(log_gamma(r)); }
double MomentTable::beta(int r) const { return exp_or_inf(log_beta(r)); }

FiniteMomentGrid::FiniteMomentGrid(ShockSpec spec, int rmax, int nmax,
                                   std::vector<double> log_values)
    : spec_(std::move(spec)), rmax_(rmax), nmax_(nmax), log_values_(std::move(log_values)) {
    if (log_values_.size() != static_cast<std::size_t>(rmax_) * nmax_)
        throw std::invalid_argument("moment grid has the wrong size");
}

double FiniteMomentGrid::log_beta(int r, int n) const {
    if (r == 0) return 0.0;
    if (n == 0) return kNegInf;
    if (r < 0 || r > rmax_ || n < 0 || n > nmax_)
        throw std::out_of_range("moment grid index out of range");
    return log_values_[static_cast<std::size_t>(n - 1) * rmax_ + (r - 1)];
}

double FiniteMomentGrid::beta(int r, int n) const {
    const double lb = log_beta(r, n);
    return lb == kNegInf ? 0.0 : exp_or_inf(lb);
}

std::span<const double> FiniteMomentGrid::log_column(int n) const {
    if (n < 1 || n > nmax_) throw std::out_of_range("horizon out of range");
    return std::span<const double>(log_values_).subspan(static_cast<std::size_t>(n - 1) * rmax_,
                                                        rmax_);
}

MomentTable infinite_moments(const ShockSpec& spec, int rmax) {
    if (rmax < 1) throw std::invalid_argument("rmax must be >= 1");
    const double elog = expected_log(spec);
    if (!(elog > 0.0))
        throw DomainError("E log eps = " + std::to_string(elog) +
                          " <= 0: Z is a.s. infinite and the moment recursion does not apply");

    const auto binom = log_binomial_rows(rmax);
    std::vector<double> log_gamma = log_inverse_moments(spec, rmax);
    // lb[j] = log beta_j, lb[0] = log 1.
    std::vector<double> lb(rmax + 1, kInf);
    lb[0] = 0.0;
    std::optional<int> first_infinite;
    std::vector<double> terms;
    terms.reserve(rmax);
    for (int r = 1; r <= rmax; ++r) {
        const double lg = log_gamma[r - 1];
        if (first_infinite || lg >= 0.0) {
            if (!first_infinite) first_infinite = r;
            continue;
        }
        // beta_r = gamma_r / (1 - gamma_r) * sum_{j<r} C(r,j) beta_j
        terms.clear();
        for (int j = 0; j < r; ++j) terms.push_back(binom[r][j] + lb[j]);
        lb[r] = lg - log1m_exp(lg) + log_sum_exp(terms);
    }
    for (int r = rmax + 1; !first_infinite && r <= kFirstInfiniteScan; ++r)
        if (log_inverse_moment(spec, r) >= 0.0) first_infinite = r;
    lb.erase(lb.begin());
    return MomentTable(spec, std::move(log_gamma), std::move(lb), first_infinite);
}

FiniteMomentGrid finite_moments(const ShockSpec& spec, int rmax, int nmax) {
    if (rmax < 1 || nmax < 1) throw std::invalid_argument("rmax and nmax must be >= 1");
    const auto binom = log_binomial_rows(rmax);
    const std::vector<double> log_gamma = log_inverse_moments(spec, rmax);

    std::vector<double> values(static_cast<std::size_t>(rmax) * nmax);
    // prev[j] = log beta_j^(n-1); starts at the n = 0 convention.
    std::vector<double> prev(rmax + 1, kNegInf), cur(rmax + 1);
    prev[0] = cur[0] = 0.0;
    std::vector<double> terms;
    terms.reserve(rmax + 1);
    for (int n = 1; n <= nmax; ++n) {
        for (int r = 1; r <= rmax; ++r) {
            // beta_r^(n) = gamma_r * sum_{j<=r} C(r,j) beta_j^(n-1)
            terms.clear();
            for (int j = 0; j <= r; ++j) terms.push_back(binom[r][j] + prev[j]);
            cur[r] = log_gamma[r - 1] + log_sum_exp(terms);
        }
        std::copy(cur.begin() + 1, cur.end(),
                  values.begin() + static_cast<std::ptrdiff_t>(n - 1) * rmax);
        std::swap(prev, cur);
    }
    return FiniteMomentGrid(spec, rmax, nmax, std::move(values));
}

int finite_moment_count(const ShockSpec& spec, int limit) {
    for (int r = 1; r <= limit; ++r)
        if (log_inverse_moment(spec, r) >= 0.0) return r - 1;
    return limit;
}

}  // namespace ramsey
