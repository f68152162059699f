// Single-threaded reference for sample_z, kept for the determinism tests and
// the benchmark.
#include <algorithm>

#include "ramsey/montecarlo.hpp"

namespace ramsey {

EcdfEstimate sample_z_serial(const ShockSpec& spec, const SimConfig& config) {
    validate(config);
    require_summable(spec, config);
    std::vector<double> samples(config.replicates);
    for (std::size_t i = 0; i < config.replicates; ++i) {
        Stream stream(config.seed, i);
        samples[i] = sample_z_once(spec, config, stream);
    }
    std::sort(samples.begin(), samples.end());
    return EcdfEstimate{spec, config, std::move(samples)};
}

}  // namespace ramsey
