#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace ramsey {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(sum_i exp(v_i)). Empty input or all -inf gives -inf; any +inf gives +inf.
double log_sum_exp(std::span<const double> values);

// log(exp(a) + exp(b)).
double log_add(double a, double b);

// log C(n, k) through log-gamma; exact enough for n in the hundreds.
double log_binomial(int n, int k);

// log(1 - exp(x)) for x < 0, accurate near both ends.
double log1m_exp(double x);

double digamma(double x);

inline double exp_or_inf(double log_value) {
    return log_value == kInf ? kInf : std::exp(log_value);
}

}  // namespace ramsey
