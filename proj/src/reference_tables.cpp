#include "ramsey/reference_tables.hpp"

#include <array>
#include <stdexcept>

#include "ramsey/numeric.hpp"

namespace ramsey {

namespace {

using Row = std::vector<std::optional<double>>;
constexpr std::nullopt_t blank = std::nullopt;

const std::vector<std::string> kFiniteBoundaryColumns{"Z_3", "Z_5", "Z_10", "Z_20", "Z"};
const std::vector<std::string> kFiniteBoundaryRows{"c", "1", "2", "3", "4", "5"};
const std::vector<std::string> kFiniteBoundColumns{"rho_l_3",  "rho_3",  "rho_l_5",
                                                   "rho_5",    "rho_l_10", "rho_10",
                                                   "rho_l_20", "rho_20"};
const std::vector<std::string> kFiniteBoundRows{"3.5", "7.5", "9.5", "12.5"};

std::array<PublishedTable, 9> build() {
    std::array<PublishedTable, 9> t;

    // Moments of 1/eps and Z with order boundaries, lognormal shocks.
    t[0] = {1,
            "gamma_r, beta_r and boundaries; ln eps ~ N(3.17, 1.75)",
            {"1", "2", "3"},
            {"gamma_r", "beta_r", "boundary"},
            {Row{0.1010, 0.1124, 1.6808}, Row{0.0588, 0.0765, 6.0288},
             Row{0.1971, 0.3847, kInf}}};

    t[1] = {2,
            "gamma_r, beta_r and boundaries; eps ~ Pareto(0.1, 0.9)",
            {"1", "2", "3", "4"},
            {"gamma_r", "beta_r", "boundary"},
            {Row{0.1010, 0.1124, 1.6808}, Row{0.0588, 0.0765, 1.9481},
             Row{0.0442, 0.0725, 2.1704}, Row{0.0372, 0.0849, 2.4067}}};

    // Rows: simulated rho, Chebyshev lower bound (parenthesised in print).
    t[2] = {3,
            "survival probability vs Chebyshev lower bound, infinite horizon",
            {"lognormal", "(lognormal)", "Pareto", "(Pareto)"},
            {"1.1", "1.2", "1.4", "1.6", "1.8", "2", "2.2"},
            {Row{0.7193, 0.8633, 0.9513, 0.9777, 0.9863, 0.9897, 0.992},
             Row{0, 0.4382, 0.7191, 0.8127, 0.8805, 0.9235, 0.9469},
             Row{0.7723, 0.8267, 0.8913, 0.9283, 0.9553, 0.9827, 0.9963},
             Row{0, 0.4382, 0.7191, 0.8127, 0.8805, 0.9275, 0.9591}}};

    t[3] = {4,
            "boundaries of x by horizon; ln eps ~ N(0.2146, 0.0645), c = 1",
            kFiniteBoundaryRows,
            kFiniteBoundaryColumns,
            {Row{1, 1, 1, 1, 1}, Row{3.3137, 4.3807, 5.9908, 7.0502, 7.2857},
             Row{3.546, 4.8419, 7.0433, 8.8004, 9.2795},
             Row{3.8072, 5.3915, 8.4725, 11.6162, 12.7826},
             Row{4.1018, 6.0525, 10.4814, 16.7021, 20.5384},
             Row{4.4353, 6.8551, 13.4176, 27.5237, 52.1729}}};

    t[4] = {5,
            "boundaries of x by horizon; eps ~ Pareto(3, 0.9), c = 1",
            kFiniteBoundaryRows,
            kFiniteBoundaryColumns,
            {Row{1, 1, 1, 1, 1}, Row{3.3137, 4.3807, 5.9908, 7.0502, 7.2857},
             Row{3.4698, 4.6962, 6.7183, 8.2603, 8.6618},
             Row{3.5932, 4.9592, 7.3887, 9.5165, 10.1737},
             Row{3.6938, 5.1826, 8.0083, 10.8238, 11.8661},
             Row{3.7777, 5.3752, 8.5816, 12.1805, 13.791}}};

    t[5] = {6,
            "boundaries of x by horizon; eps ~ Gamma(17, 13.3333), c = 1",
            kFiniteBoundaryRows,
            kFiniteBoundaryColumns,
            {Row{1, 1, 1, 1, 1}, Row{3.3137, 4.3807, 5.9908, 7.0502, 7.2857},
             Row{3.5606, 4.87, 7.1073, 8.9091, 9.405},
             Row{3.8589, 5.4978, 8.7526, 12.201, 13.546},
             Row{4.2255, 6.3255, 11.3481, 19.2233, 25.1935},
             Row{4.6846, 7.4534, 15.8266, 39.6022, 256.6073}}};

    t[6] = {7,
            "finite-horizon lower bounds vs simulated rho_n; ln eps ~ N(0.2146, 0.0645)",
            kFiniteBoundRows,
            kFiniteBoundColumns,
            {Row{0.2202, 0.7530, 0.0000, 0.3633, 0.0000, 0.1290, 0.0000, 0.0907},
             Row{0.9907, 0.9997, 0.9257, 0.9927, 0.5396, 0.8890, 0.3027, 0.8193},
             Row{blank, blank, 0.9806, 0.9997, 0.8190, 0.9700, 0.6258, 0.9280},
             Row{blank, blank, 0.9957, 1.0000, 0.9555, 0.9963, 0.8605, 0.9807}}};

    t[7] = {8,
            "finite-horizon lower bounds vs simulated rho_n; eps ~ Pareto(3, 0.9)",
            kFiniteBoundRows,
            kFiniteBoundColumns,
            {Row{0.2296, 0.7070, 0.0000, 0.3557, 0.0000, 0.1713, 0.0000, 0.1393},
             Row{1.0000, 1.0000, 0.9976, 1.0000, 0.5718, 0.8783, 0.3027, 0.7930},
             Row{blank, blank, blank, blank, 0.8972, 0.9770, 0.6517, 0.9323},
             Row{blank, blank, blank, blank, 0.9961, 0.9990, 0.9135, 0.9853}}};

    t[8] = {9,
            "finite-horizon lower bounds vs simulated rho_n; eps ~ Gamma(17, 13.3333)",
            kFiniteBoundRows,
            kFiniteBoundColumns,
            {Row{0.2202, 0.7860, 0.0000, 0.3653, 0.0000, 0.1293, 0.0000, 0.0780},
             Row{0.9901, 0.9997, 0.9192, 0.9887, 0.5347, 0.9133, 0.3027, 0.8267},
             Row{blank, blank, 0.9848, 0.9983, 0.8102, 0.9767, 0.6206, 0.9293},
             Row{blank, blank, 0.9983, 1.0000, 0.9490, 0.9957, 0.8508, 0.9777}}};
    return t;
}

}  // namespace

const PublishedTable& published_table(int id) {
    static const std::array<PublishedTable, 9> tables = build();
    if (id < 1 || id > 9) throw std::out_of_range("table id must be in 1..9");
    return tables[id - 1];
}

namespace reference {

ShockSpec pareto_infinite_horizon() { return Pareto{0.1, 0.9}; }

ShockSpec lognormal_infinite_horizon(LognormalParams params) {
    if (params == LognormalParams::Rounded) return Lognormal{3.17, 1.75};
    const ShockSpec pareto = pareto_infinite_horizon();
    return match_inverse_moments(Family::Lognormal, inverse_moment(pareto, 1),
                                 inverse_moment(pareto, 2));
}

ShockSpec pareto_finite_horizon() { return Pareto{3.0, 0.9}; }

ShockSpec lognormal_finite_horizon() {
    const ShockSpec pareto = pareto_finite_horizon();
    return match_inverse_moments(Family::Lognormal, inverse_moment(pareto, 1),
                                 inverse_moment(pareto, 2));
}

ShockSpec gamma_finite_horizon() {
    const ShockSpec pareto = pareto_finite_horizon();
    return match_inverse_moments(Family::Gamma, inverse_moment(pareto, 1),
                                 inverse_moment(pareto, 2));
}

}  // namespace reference

}  // namespace ramsey
