#include "ramsey/shock.hpp"

#include <cmath>
#include <sstream>

#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

#include "ramsey/errors.hpp"
#include "ramsey/format.hpp"
#include "ramsey/numeric.hpp"

namespace ramsey {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || !(v > 0.0))
        throw InvalidSpec(std::string(what) + " must be finite and > 0");
}

void validate(const ShockSpec::Law& law) {
    std::visit(overloaded{
                   [](const Lognormal& l) {
                       if (!std::isfinite(l.mu)) throw InvalidSpec("lognormal mu must be finite");
                       require_positive(l.sigma2, "lognormal sigma2");
                   },
                   [](const Pareto& p) {
                       require_positive(p.beta, "pareto beta");
                       require_positive(p.k, "pareto k");
                   },
                   [](const Gamma& g) {
                       require_positive(g.alpha, "gamma alpha");
                       require_positive(g.theta, "gamma theta");
                   },
                   [](const Constant& c) { require_positive(c.a, "constant a"); },
               },
               law);
}

}  // namespace

ShockSpec::ShockSpec(Law law) : law_(law) { validate(law_); }

Family ShockSpec::family() const {
    return static_cast<Family>(law_.index());
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::Lognormal: return "lognormal";
        case Family::Pareto: return "pareto";
        case Family::Gamma: return "gamma";
        case Family::Constant: return "constant";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "lognormal") return Family::Lognormal;
    if (name == "pareto") return Family::Pareto;
    if (name == "gamma") return Family::Gamma;
    if (name == "constant") return Family::Constant;
    throw InvalidSpec("unknown shock family '" + std::string(name) + "'");
}

double log_inverse_moment(const ShockSpec& spec, int r) {
    if (r < 1) throw InvalidSpec("moment order must be >= 1");
    const double rr = r;
    return std::visit(
        overloaded{
            [&](const Lognormal& l) { return -rr * l.mu + 0.5 * rr * rr * l.sigma2; },
            [&](const Pareto& p) {
                return std::log(p.beta) - rr * std::log(p.k) - std::log(p.beta + rr);
            },
            [&](const Gamma& g) {
                if (rr >= g.alpha) return kInf;
                return rr * std::log(g.theta) + std::lgamma(g.alpha - rr) - std::lgamma(g.alpha);
            },
            [&](const Constant& c) { return -rr * std::log(c.a); },
        },
        spec.law());
}

double inverse_moment(const ShockSpec& spec, int r) {
    // Pareto and Constant have closed forms that are cheaper and exact in
    // linear arithmetic; the rest go through the log form.
    return std::visit(overloaded{
                          [&](const Pareto& p) {
                              return p.beta / (std::pow(p.k, r) * (p.beta + r));
                          },
                          [&](const Constant& c) { return std::pow(c.a, -r); },
                          [&](const auto&) { return exp_or_inf(log_inverse_moment(spec, r)); },
                      },
                      spec.law());
}

double expected_log(const ShockSpec& spec) {
    return std::visit(overloaded{
                          [](const Lognormal& l) { return l.mu; },
                          [](const Pareto& p) { return std::log(p.k) + 1.0 / p.beta; },
                          [](const Gamma& g) { return digamma(g.alpha) - std::log(g.theta); },
                          [](const Constant& c) { return std::log(c.a); },
                      },
                      spec.law());
}

SupportBounds support_bounds(const ShockSpec& spec) {
    return std::visit(overloaded{
                          [](const Pareto& p) { return SupportBounds{p.k, kInf}; },
                          [](const Constant& c) { return SupportBounds{c.a, c.a}; },
                          [](const auto&) { return SupportBounds{0.0, kInf}; },
                      },
                      spec.law());
}

double sample_inverse(const ShockSpec& spec, Stream& stream) {
    return std::visit(
        overloaded{
            [&](const Lognormal& l) {
                boost::random::normal_distribution<double> normal(l.mu, std::sqrt(l.sigma2));
                return std::exp(-normal(stream));
            },
            [&](const Pareto& p) {
                // 1/eps has density beta k^beta y^(beta-1) on (0, 1/k].
                return std::pow(stream.uniform_open_closed(), 1.0 / p.beta) / p.k;
            },
            [&](const Gamma& g) {
                boost::random::gamma_distribution<double> unit(g.alpha, 1.0);
                double draw = unit(stream);
                while (draw <= 0.0) draw = unit(stream);
                return g.theta / draw;
            },
            [&](const Constant& c) { return 1.0 / c.a; },
        },
        spec.law());
}

ShockSpec match_inverse_moments(Family family, double gamma1, double gamma2) {
    if (!(gamma1 > 0.0) || !(gamma2 > 0.0) || !std::isfinite(gamma1) || !std::isfinite(gamma2))
        throw InvalidSpec("inverse moments must be positive and finite");
    const double t = gamma2 / (gamma1 * gamma1);
    if (!(t > 1.0))
        throw InvalidSpec("infeasible moments: need gamma2 > gamma1^2");
    switch (family) {
        case Family::Lognormal: {
            const double sigma2 = std::log(t);
            return Lognormal{0.5 * sigma2 - std::log(gamma1), sigma2};
        }
        case Family::Pareto: {
            const double beta = std::sqrt(t / (t - 1.0)) - 1.0;
            return Pareto{beta, beta / (gamma1 * (beta + 1.0))};
        }
        case Family::Gamma: {
            if (!(t < 2.0))
                throw InvalidSpec("infeasible moments for gamma: need gamma2 < 2 gamma1^2");
            const double alpha = (2.0 * t - 1.0) / (t - 1.0);
            return Gamma{alpha, gamma1 * (alpha - 1.0)};
        }
        case Family::Constant:
            break;
    }
    throw InvalidSpec("a constant shock cannot match two distinct moments");
}

std::map<std::string, std::string> to_record(const ShockSpec& spec) {
    std::map<std::string, std::string> out{{"family", std::string(family_name(spec.family()))}};
    std::visit(overloaded{
                   [&](const Lognormal& l) {
                       out["mu"] = format_number(l.mu);
                       out["sigma2"] = format_number(l.sigma2);
                   },
                   [&](const Pareto& p) {
                       out["beta"] = format_number(p.beta);
                       out["k"] = format_number(p.k);
                   },
                   [&](const Gamma& g) {
                       out["alpha"] = format_number(g.alpha);
                       out["theta"] = format_number(g.theta);
                   },
                   [&](const Constant& c) { out["a"] = format_number(c.a); },
               },
               spec.law());
    return out;
}

ShockSpec from_record(const std::map<std::string, std::string>& record) {
    auto get = [&](const std::string& key) {
        auto it = record.find(key);
        if (it == record.end()) throw InvalidSpec("missing parameter '" + key + "'");
        double v = 0.0;
        if (!parse_number(it->second, v))
            throw InvalidSpec("parameter '" + key + "' is not a number: '" + it->second + "'");
        return v;
    };
    auto fam = record.find("family");
    if (fam == record.end()) throw InvalidSpec("missing parameter 'family'");
    const Family family = parse_family(fam->second);
    const std::size_t expected = family == Family::Constant ? 2 : 3;
    if (record.size() != expected)
        throw InvalidSpec("unexpected parameters for family '" + fam->second + "'");
    switch (family) {
        case Family::Lognormal: return Lognormal{get("mu"), get("sigma2")};
        case Family::Pareto: return Pareto{get("beta"), get("k")};
        case Family::Gamma: return Gamma{get("alpha"), get("theta")};
        case Family::Constant: return Constant{get("a")};
    }
    throw InvalidSpec("unreachable family");
}

std::string describe(const ShockSpec& spec) {
    std::ostringstream os;
    os.precision(6);
    std::visit(overloaded{
                   [&](const Lognormal& l) { os << "Lognormal(mu=" << l.mu << ", sigma2=" << l.sigma2 << ")"; },
                   [&](const Pareto& p) { os << "Pareto(beta=" << p.beta << ", k=" << p.k << ")"; },
                   [&](const Gamma& g) { os << "Gamma(alpha=" << g.alpha << ", theta=" << g.theta << ")"; },
                   [&](const Constant& c) { os << "Constant(a=" << c.a << ")"; },
               },
               spec.law());
    return os.str();
}

}  // namespace ramsey
