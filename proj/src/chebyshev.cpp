#include "ramsey/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ramsey/numeric.hpp"

namespace ramsey {

BoundSchedule::BoundSchedule(std::span<const double> log_betas, double c) : c_(c) {
    if (!(c > 0.0)) throw std::invalid_argument("consumption c must be > 0");
    const auto finite_end =
        std::find_if(log_betas.begin(), log_betas.end(), [](double v) { return !std::isfinite(v); });
    log_betas_.assign(log_betas.begin(), finite_end);
    const int finite_count = static_cast<int>(log_betas_.size());

    boundaries_.push_back(c);
    // Placing the boundary above order r needs beta_{r+1}, so the last finite
    // moment only serves as a boundary.
    degenerate_ = finite_count < 2;
    max_order_ = degenerate_ ? 1 : finite_count - 1;
    if (!degenerate_) {
        for (int r = 1; r <= max_order_; ++r)
            boundaries_.push_back(c * (1.0 + std::exp(log_betas_[r] - log_betas_[r - 1])));
    }
    boundaries_.push_back(kInf);
}

int BoundSchedule::order_for(double x) const {
    if (x <= c_) return 0;
    if (degenerate_) return 1;
    // Ties go to the lower interval: (b_{r-1}, b_r].
    for (int r = 1; r <= max_order_; ++r)
        if (x <= boundaries_[r]) return r;
    return max_order_;
}

BoundResult BoundSchedule::evaluate(double x) const {
    if (x <= c_) return {0.0, 1.0, 0, BoundFlag::RuinAtOnce};
    const int r = order_for(x);
    const double log_y = std::log(x / c_ - 1.0);
    const double log_beta = r <= static_cast<int>(log_betas_.size()) ? log_betas_[r - 1] : kInf;
    const double ruin = exp_or_inf(log_beta - r * log_y);
    const double survival = 1.0 - ruin;
    if (survival < 0.0) return {0.0, ruin, r, BoundFlag::Vacuous};
    return {survival, ruin, r, BoundFlag::None};
}

double BoundSchedule::ruin_upper_bound(double x) const {
    return std::min(1.0, evaluate(x).ruin);
}

BoundSchedule schedule(const MomentTable& moments, double c) {
    return BoundSchedule(moments.log_betas(), c);
}

BoundSchedule schedule(const FiniteMomentGrid& grid, int n, double c) {
    return BoundSchedule(grid.log_column(n), c);
}

std::vector<std::vector<double>> boundary_table(const ShockSpec& spec, double c,
                                                std::span<const Horizon> horizons, int rows) {
    if (!(c > 0.0)) throw std::invalid_argument("consumption c must be > 0");
    if (rows < 1) throw std::invalid_argument("rows must be >= 1");
    const int rmax = rows + 1;

    std::size_t nmax = 0;
    bool need_infinite = false;
    for (const Horizon& h : horizons) {
        if (h.is_infinite())
            need_infinite = true;
        else if (h.periods() < 1)
            throw std::invalid_argument("finite horizons must be >= 1");
        else
            nmax = std::max(nmax, h.periods());
    }
    std::optional<FiniteMomentGrid> grid;
    std::optional<MomentTable> table;
    if (nmax > 0) grid = finite_moments(spec, rmax, static_cast<int>(nmax));
    if (need_infinite) table = infinite_moments(spec, rmax);

    std::vector<std::vector<double>> out(rows, std::vector<double>(horizons.size()));
    for (std::size_t h = 0; h < horizons.size(); ++h) {
        std::span<const double> lb = horizons[h].is_infinite()
                                         ? table->log_betas()
                                         : grid->log_column(static_cast<int>(horizons[h].periods()));
        for (int r = 1; r <= rows; ++r) {
            const double ratio = lb[r] - lb[r - 1];
            out[r - 1][h] = std::isfinite(lb[r]) && std::isfinite(lb[r - 1])
                                ? c * (1.0 + std::exp(ratio))
                                : kInf;
        }
    }
    return out;
}

}  // namespace ramsey
