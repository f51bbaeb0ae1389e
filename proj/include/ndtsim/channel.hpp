#ifndef NDTSIM_CHANNEL_HPP
#define NDTSIM_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "ndtsim/config.hpp"
#include "ndtsim/event_queue.hpp"
#include "ndtsim/metrics.hpp"
#include "ndtsim/mobility.hpp"
#include "ndtsim/packet.hpp"
#include "ndtsim/rng.hpp"

namespace ndtsim {

enum class DeliveryOutcome {
    Delivered,  // receiver in range; delivery event scheduled
    LinkBroken, // receiver out of range at send time
};

// Unit-disk radio. Two nodes hear each other exactly when their distance is
// at most range_m; every hop costs per_hop_delay_s. Broadcast copies are
// dropped independently with probability loss_rate; unicast is reliable
// within range, so a failed unicast always means the link is gone.
class Channel {
  public:
    Channel(const ChannelParams& params, Mobility& mobility, EventQueue& queue,
            SeededRng rng, MetricsReport& metrics);

    bool InRange(NodeId a, NodeId b, SimTime t) const;

    // Ids of every node within range of `node` at time t (self excluded),
    // ascending. Deterministic iteration order for everything built on top.
    std::vector<NodeId> Neighbors(NodeId node, SimTime t) const;

    // Schedules one PacketDelivery per in-range neighbor that survives the
    // loss draw. Returns the number of copies scheduled. Counts one routing
    // transmission when pkt is control traffic, even into an empty cell:
    // the radio transmitted whether or not anyone heard.
    std::size_t Broadcast(NodeId sender, const Packet& pkt, SimTime t);

    // Reliable within range; LinkBroken when the receiver has moved out of
    // range (no loss draw). Control unicasts count one routing transmission
    // regardless of outcome.
    DeliveryOutcome Unicast(NodeId sender, NodeId receiver, const Packet& pkt,
                            SimTime t);

  private:
    ChannelParams params_;
    Mobility& mobility_;
    EventQueue& queue_;
    SeededRng rng_;
    MetricsReport& metrics_;
};

} // namespace ndtsim

#endif
