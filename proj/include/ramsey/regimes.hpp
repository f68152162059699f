#pragma once

#include <optional>
#include <string_view>

#include "ramsey/horizon.hpp"
#include "ramsey/shock.hpp"

namespace ramsey {

// Smallest initial stock that sustains c forever when the return is a
// constant r: c r / (r - 1). Empty when r <= 1 (no stock suffices).
std::optional<double> deterministic_min_stock(double r, double c);

// Number of periods N for which c is sustained from stock x under constant
// return r, i.e. the index of the first period with X_N <= c.
Horizon deterministic_horizon(double r, double x, double c);

/// Where the survival probability rho(x) can be pinned down exactly.
/// Thresholds are multipliers of c: ruin is certain for x/c < ruin_multiplier
/// and survival certain for x/c > survival_multiplier.
struct Regime {
    double elog;  // E log eps
    double m;
    double M;
    double d1;  // essential infimum of Z
    double d2;  // essential supremum of Z
    double certain_ruin_multiplier;      // d1 + 1
    double certain_survival_multiplier;  // d2 + 1

    // E log eps <= 0: Z diverges almost surely and rho is identically zero.
    bool ruin_certain() const { return !(elog > 0.0); }
};

Regime classify(const ShockSpec& spec);

enum class Survival { Zero, Interior, One, BoundaryUndetermined };

std::string_view to_string(Survival s);

Survival trichotomy(const Regime& regime, double x, double c);

}  // namespace ramsey
