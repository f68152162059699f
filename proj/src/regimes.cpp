#include "ramsey/regimes.hpp"

#include <cmath>
#include <stdexcept>

#include "ramsey/numeric.hpp"

namespace ramsey {

namespace {

// sum_{n=0}^{N-1} r^-n
double discounted_periods(double r, std::size_t periods) {
    const double n = static_cast<double>(periods);
    if (r == 1.0) return n;
    return (1.0 - std::pow(r, -n)) / (1.0 - 1.0 / r);
}

}  // namespace

std::optional<double> deterministic_min_stock(double r, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("consumption c must be > 0");
    if (!(r > 1.0)) return std::nullopt;
    return c * r / (r - 1.0);
}

Horizon deterministic_horizon(double r, double x, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("consumption c must be > 0");
    if (!(r > 0.0)) throw std::invalid_argument("return r must be > 0");
    if (x <= c) return Horizon::finite(0);
    const double ratio = x / c;
    if (r > 1.0 && ratio >= r / (r - 1.0)) return Horizon::infinite();

    // Real solution of discounted_periods(r, L) = x/c, then settle the
    // integer against the strict inequality directly.
    double level;
    if (r == 1.0) {
        level = ratio;
    } else if (r > 1.0) {
        level = -std::log1p(-ratio * (1.0 - 1.0 / r)) / std::log(r);
    } else {
        const double q = 1.0 / r;
        level = std::log1p(ratio * (q - 1.0)) / std::log(q);
    }
    auto periods = static_cast<std::size_t>(std::max(0.0, std::ceil(level) - 1.0));
    while (discounted_periods(r, periods + 1) < ratio) ++periods;
    while (periods > 0 && !(discounted_periods(r, periods) < ratio)) --periods;
    return Horizon::finite(periods);
}

Regime classify(const ShockSpec& spec) {
    const SupportBounds b = support_bounds(spec);
    Regime out{};
    out.elog = expected_log(spec);
    out.m = b.m;
    out.M = b.M;
    out.d1 = b.M > 1.0 ? (std::isinf(b.M) ? 0.0 : 1.0 / (b.M - 1.0)) : kInf;
    out.d2 = b.m > 1.0 ? 1.0 / (b.m - 1.0) : kInf;
    out.certain_ruin_multiplier = out.d1 + 1.0;
    out.certain_survival_multiplier = out.d2 + 1.0;
    return out;
}

std::string_view to_string(Survival s) {
    switch (s) {
        case Survival::Zero: return "zero";
        case Survival::Interior: return "interior";
        case Survival::One: return "one";
        case Survival::BoundaryUndetermined: return "boundary-undetermined";
    }
    return "?";
}

Survival trichotomy(const Regime& regime, double x, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("consumption c must be > 0");
    if (regime.ruin_certain() || x <= c) return Survival::Zero;
    const double y = x / c - 1.0;
    if (y < regime.d1) return Survival::Zero;
    // Z <= d2 almost surely and every partial sum Z_n stays strictly below d2.
    if (y == regime.d2 && regime.m > 1.0) return Survival::One;
    if (y == regime.d1 || y == regime.d2) return Survival::BoundaryUndetermined;
    if (y > regime.d2) return Survival::One;
    return Survival::Interior;
}

}  // namespace ramsey
