#include "ndtsim/channel.hpp"

#include <utility>

#include "ndtsim/geometry.hpp"

namespace ndtsim {

Channel::Channel(const ChannelParams& params, Mobility& mobility,
                 EventQueue& queue, SeededRng rng, MetricsReport& metrics)
    : params_(params), mobility_(mobility), queue_(queue),
      rng_(std::move(rng)), metrics_(metrics) {}

bool Channel::InRange(NodeId a, NodeId b, SimTime t) const {
    return Distance(mobility_.PositionAt(a, t), mobility_.PositionAt(b, t)) <=
           params_.range_m;
}

std::vector<NodeId> Channel::Neighbors(NodeId node, SimTime t) const {
    std::vector<NodeId> out;
    const Position here = mobility_.PositionAt(node, t);
    for (NodeId other = 0; other < mobility_.NodeCount(); ++other) {
        if (other == node) {
            continue;
        }
        if (Distance(here, mobility_.PositionAt(other, t)) <= params_.range_m) {
            out.push_back(other);
        }
    }
    return out; // ascending by construction
}

std::size_t Channel::Broadcast(NodeId sender, const Packet& pkt, SimTime t) {
    if (is_control(pkt)) {
        ++metrics_.routing_tx;
    }
    std::size_t scheduled = 0;
    for (NodeId neighbor : Neighbors(sender, t)) {
        if (params_.loss_rate > 0.0 && rng_.Bernoulli(params_.loss_rate)) {
            continue;
        }
        queue_.Schedule(Event{t + params_.per_hop_delay_s, neighbor,
                              PacketDelivery{pkt, sender}});
        ++scheduled;
    }
    return scheduled;
}

DeliveryOutcome Channel::Unicast(NodeId sender, NodeId receiver,
                                 const Packet& pkt, SimTime t) {
    if (is_control(pkt)) {
        ++metrics_.routing_tx;
    }
    if (!InRange(sender, receiver, t)) {
        return DeliveryOutcome::LinkBroken;
    }
    queue_.Schedule(Event{t + params_.per_hop_delay_s, receiver,
                          PacketDelivery{pkt, sender}});
    return DeliveryOutcome::Delivered;
}

} // namespace ndtsim
