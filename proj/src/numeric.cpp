#include "ramsey/numeric.hpp"

#include <algorithm>

#include <boost/math/special_functions/digamma.hpp>

namespace ramsey {

double log_sum_exp(std::span<const double> values) {
    if (values.empty()) return kNegInf;
    const double top = *std::max_element(values.begin(), values.end());
    if (top == kNegInf || top == kInf) return top;
    double sum = 0.0;
    for (double v : values) sum += std::exp(v - top);
    return top + std::log(sum);
}

double log_add(double a, double b) {
    if (a < b) std::swap(a, b);
    if (b == kNegInf || a == kInf) return a;
    return a + std::log1p(std::exp(b - a));
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log1m_exp(double x) {
    // Maechler's switch at -log 2.
    return x > -0.6931471805599453 ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x));
}

double digamma(double x) { return boost::math::digamma(x); }

}  // namespace ramsey
