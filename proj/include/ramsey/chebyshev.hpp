#pragma once

#include <span>
#include <vector>

#include "ramsey/horizon.hpp"
#include "ramsey/moments.hpp"

namespace ramsey {

enum class BoundFlag {
    None,
    Vacuous,     // Chebyshev bound exceeds 1; survival bound clamped to 0
    RuinAtOnce,  // x <= c
};

struct BoundResult {
    double survival;  // max(0, 1 - ruin)
    double ruin;      // beta_r / (x/c - 1)^r, unclamped
    int order;        // r used; 0 when x <= c
    BoundFlag flag;
};

/// Piecewise choice of Chebyshev order. Order r is used on
/// (b_{r-1}, b_r] with b_0 = c and b_r = c (1 + beta_{r+1} / beta_r); the
/// top order also covers everything above its boundary.
class BoundSchedule {
  public:
    // log_betas[i] = log beta_{i+1}; infinite entries end the usable range.
    BoundSchedule(std::span<const double> log_betas, double c);

    double c() const { return c_; }
    int max_order() const { return max_order_; }
    // Fewer than two finite moments: order 1 everywhere.
    bool degenerate() const { return degenerate_; }

    // b_0 = c, b_1..b_max_order, then +inf.
    const std::vector<double>& boundaries() const { return boundaries_; }

    int order_for(double x) const;
    BoundResult evaluate(double x) const;

    double survival_lower_bound(double x) const { return evaluate(x).survival; }
    double ruin_upper_bound(double x) const;

  private:
    double c_;
    int max_order_;
    bool degenerate_;
    std::vector<double> log_betas_;
    std::vector<double> boundaries_;
};

BoundSchedule schedule(const MomentTable& moments, double c);
BoundSchedule schedule(const FiniteMomentGrid& grid, int n, double c);

/// Row r (1..rows), column per horizon: c (1 + beta_{r+1}/beta_r) for that
/// horizon's moments; +inf where the ratio does not exist.
std::vector<std::vector<double>> boundary_table(const ShockSpec& spec, double c,
                                                std::span<const Horizon> horizons,
                                                int rows);

}  // namespace ramsey
