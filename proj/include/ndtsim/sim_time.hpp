#ifndef NDTSIM_SIM_TIME_HPP
#define NDTSIM_SIM_TIME_HPP

#include <compare>
#include <cstdint>

namespace ndtsim {

using NodeId = std::uint32_t;

// Simulated time in seconds. Continuous rather than ticked: the protocol
// timer constants are fractional seconds (flood interval 0.009 s, per-hop
// delay 0.002 s) and share no useful common tick.
struct SimTime {
    double sec{0.0};

    static constexpr SimTime Zero() { return SimTime{0.0}; }

    constexpr double Seconds() const { return sec; }
    constexpr auto operator<=>(const SimTime&) const = default;

    constexpr SimTime operator+(double dt) const { return SimTime{sec + dt}; }
    constexpr SimTime operator-(double dt) const { return SimTime{sec - dt}; }
    // Difference of two instants is a duration in seconds.
    constexpr double operator-(SimTime other) const { return sec - other.sec; }
};

} // namespace ndtsim

#endif
