#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace ramsey {

// A number of periods that may be unbounded.
class Horizon {
  public:
    static constexpr Horizon finite(std::size_t periods) { return Horizon(periods, false); }
    static constexpr Horizon infinite() { return Horizon(0, true); }

    constexpr bool is_infinite() const { return infinite_; }
    // Only meaningful for finite horizons.
    constexpr std::size_t periods() const { return periods_; }

    constexpr bool operator==(const Horizon&) const = default;
    constexpr std::strong_ordering operator<=>(const Horizon& other) const {
        if (infinite_ || other.infinite_) return infinite_ <=> other.infinite_;
        return periods_ <=> other.periods_;
    }

    std::string to_string() const {
        return infinite_ ? "inf" : std::to_string(periods_);
    }

  private:
    constexpr Horizon(std::size_t periods, bool infinite)
        : periods_(periods), infinite_(infinite) {}

    std::size_t periods_;
    bool infinite_;
};

}  // namespace ramsey
