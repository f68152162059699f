#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "ramsey/rng.hpp"

namespace ramsey {

// eps = exp(N), N ~ Normal(mu, sigma2).
struct Lognormal {
    double mu;
    double sigma2;
    bool operator==(const Lognormal&) const = default;
};

// Density beta k^beta / x^(beta+1) on x >= k.
struct Pareto {
    double beta;
    double k;
    bool operator==(const Pareto&) const = default;
};

// Density theta^alpha / Gamma(alpha) x^(alpha-1) exp(-theta x); theta is a rate.
struct Gamma {
    double alpha;
    double theta;
    bool operator==(const Gamma&) const = default;
};

// Degenerate shock eps = a. Used as an analytic oracle.
struct Constant {
    double a;
    bool operator==(const Constant&) const = default;
};

enum class Family { Lognormal, Pareto, Gamma, Constant };

/// Law of the i.i.d. output-capital ratio eps. Construction validates the
/// parameters, so every ShockSpec in circulation has support in (0, inf).
class ShockSpec {
  public:
    using Law = std::variant<Lognormal, Pareto, Gamma, Constant>;

    explicit ShockSpec(Law law);
    ShockSpec(Lognormal law) : ShockSpec(Law{law}) {}
    ShockSpec(Pareto law) : ShockSpec(Law{law}) {}
    ShockSpec(Gamma law) : ShockSpec(Law{law}) {}
    ShockSpec(Constant law) : ShockSpec(Law{law}) {}

    const Law& law() const { return law_; }
    Family family() const;

    bool operator==(const ShockSpec&) const = default;

  private:
    Law law_;
};

struct SupportBounds {
    double m;  // essential infimum of eps
    double M;  // essential supremum, possibly +inf
};

std::string_view family_name(Family family);
Family parse_family(std::string_view name);

// gamma_r = E eps^-r, possibly +inf (Gamma with r >= alpha).
double inverse_moment(const ShockSpec& spec, int r);
// log gamma_r, computed directly in the log domain.
double log_inverse_moment(const ShockSpec& spec, int r);

double expected_log(const ShockSpec& spec);

SupportBounds support_bounds(const ShockSpec& spec);

// One draw of 1/eps.
double sample_inverse(const ShockSpec& spec, Stream& stream);

// Parameters of `family` with E eps^-1 = gamma1 and E eps^-2 = gamma2.
ShockSpec match_inverse_moments(Family family, double gamma1, double gamma2);

// Flat key/value form: family=<name> plus the named parameters.
std::map<std::string, std::string> to_record(const ShockSpec& spec);
ShockSpec from_record(const std::map<std::string, std::string>& record);

std::string describe(const ShockSpec& spec);

}  // namespace ramsey
