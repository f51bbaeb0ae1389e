#ifndef NDTSIM_EVENT_HPP
#define NDTSIM_EVENT_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "ndtsim/packet.hpp"
#include "ndtsim/sim_time.hpp"

namespace ndtsim {

struct TimerId {
    enum class Kind : std::uint8_t {
        Hello,     // periodic beacon tick
        Cache,     // NDT RREQ_count flush
        Flood,     // adversary fake-request tick
        RreqRetry, // discovery retry; arg = destination address value
    };

    Kind kind{Kind::Hello};
    std::uint32_t arg{0};
};

struct PacketDelivery {
    Packet pkt;
    NodeId from{0};
};

struct TimerFire {
    TimerId timer;
};

struct MobilityUpdate {};

struct TrafficTick {
    std::uint32_t flow_id{0};
};

using EventKind = std::variant<PacketDelivery, TimerFire, MobilityUpdate, TrafficTick>;

struct Event {
    SimTime fire_at{};
    NodeId target{0};
    EventKind kind;
};

const char* event_kind_name(const Event& ev);
std::string event_detail(const Event& ev);

} // namespace ndtsim

#endif
