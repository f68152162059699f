#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/shock.hpp"

namespace ramsey {

enum class LognormalParams {
    Matched,  // exact two-moment match to Pareto(0.1, 0.9)
    Rounded,  // mu = 3.17, sigma2 = 1.75 as printed in the captions
};

/// Published values of the nine reference tables, cell for cell. Empty
/// optionals are cells left blank in print.
struct PublishedTable {
    int id;
    std::string caption;
    std::vector<std::string> row_labels;
    std::vector<std::string> column_labels;
    std::vector<std::vector<std::optional<double>>> values;
};

const PublishedTable& published_table(int id);  // id in 1..9

namespace reference {

// Infinite-horizon comparison (tables 1-3).
ShockSpec pareto_infinite_horizon();  // Pareto(0.1, 0.9)
ShockSpec lognormal_infinite_horizon(LognormalParams params);

// Finite-horizon comparison (tables 4-9): all three share E eps^-1 and
// E eps^-2 with Pareto(3, 0.9).
ShockSpec pareto_finite_horizon();
ShockSpec lognormal_finite_horizon();
ShockSpec gamma_finite_horizon();

inline const std::vector<double> kFiniteHorizonGrid{3.5, 7.5, 9.5, 12.5};
inline const std::vector<std::size_t> kFiniteHorizons{3, 5, 10, 20};
inline const std::vector<double> kInfiniteHorizonGrid{1.1, 1.2, 1.4, 1.6, 1.8, 2.0, 2.2};

}  // namespace reference

}  // namespace ramsey
