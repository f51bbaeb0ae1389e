#ifndef NDTSIM_PACKET_HPP
#define NDTSIM_PACKET_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ndtsim/sim_time.hpp"

namespace ndtsim {

// Destination address space. Addresses 0..N-1 are the scenario's real nodes;
// anything >= N is a "void" address that exists nowhere, usable only by the
// flooding adversary.
struct Address {
    std::uint32_t value{0};

    constexpr auto operator<=>(const Address&) const = default;
    bool IsVoid(std::uint32_t node_count) const { return value >= node_count; }
};

inline Address NodeAddress(NodeId n) { return Address{n}; }

using SeqNo = std::int64_t;

struct RreqPacket {
    NodeId originator{0};
    SeqNo originator_seq{0};
    std::uint32_t rreq_id{0}; // (originator, rreq_id) names one discovery flood
    Address dest{};
    std::optional<SeqNo> dest_seq_known{}; // empty = unknown destination sequence
    std::uint32_t hop_count{0};
    std::uint32_t ttl{0};
};

struct RrepPacket {
    Address dest{};
    SeqNo dest_seq{0};
    NodeId originator{0}; // discovery originator the reply travels back to
    std::uint32_t hop_count{0};
    double lifetime_s{0.0};
};

struct RerrPacket {
    // (destination, invalidated sequence number) pairs; never empty.
    std::vector<std::pair<Address, SeqNo>> unreachable;
};

struct HelloPacket {
    NodeId originator{0};
    SeqNo originator_seq{0};
    // Broody-list piggyback (hello alarm); always empty under plain AODV.
    std::vector<NodeId> alarm_payload;
};

struct DataPacket {
    std::uint32_t flow_id{0};
    std::uint64_t seq_no{0};
    NodeId src{0};
    NodeId dst{0};
    std::uint32_t size_bytes{0};
    SimTime sent_at{};
};

using Packet = std::variant<RreqPacket, RrepPacket, RerrPacket, HelloPacket, DataPacket>;

// Routing control traffic (everything except payload data); the NRL metric
// counts per-hop transmissions of exactly these.
inline bool is_control(const Packet& pkt) {
    return !std::holds_alternative<DataPacket>(pkt);
}

const char* kind_name(const Packet& pkt);

// Stable one-line field dump used by the event trace.
std::string packet_detail(const Packet& pkt);

} // namespace ndtsim

#endif
