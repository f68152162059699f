#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace ramsey {

inline constexpr std::string_view kGeneratorName = "splitmix64-stream-v1";

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64 generator. A stream is identified by (seed, index): its
/// starting state is a pure function of both, so replicate i draws the same
/// numbers no matter which thread runs it or in what order.
class Stream {
  public:
    using result_type = std::uint64_t;

    explicit constexpr Stream(std::uint64_t seed, std::uint64_t index = 0)
        : state_(mix64(seed + 0x9E3779B97F4A7C15ULL) ^
                 mix64((index + 1) * 0xD1B54A32D192ED03ULL)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    constexpr result_type operator()() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform on (0, 1]; never returns 0 so that powers and logs stay finite.
    double uniform_open_closed() {
        return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

}  // namespace ramsey
