#include "ndtsim/adversary.hpp"

namespace ndtsim {

Adversary::Adversary(const ScenarioConfig& cfg, Channel& channel,
                     EventQueue& queue, MetricsReport& metrics)
    : cfg_(cfg), channel_(channel), queue_(queue), metrics_(metrics) {}

void Adversary::Init() {
    for (NodeId attacker : cfg_.MaliciousSet()) {
        queue_.Schedule(Event{SimTime{cfg_.attacker.start_at_s}, attacker,
                              TimerFire{TimerId{TimerId::Kind::Flood, 0}}});
    }
}

Address Adversary::NextVoidDest(NodeId attacker) {
    // Void addresses live directly above the real node range; cycling the
    // pool maximizes reverse-route churn without unbounded state.
    std::uint32_t& idx = round_robin_[attacker];
    Address dest{cfg_.nodes + idx};
    idx = (idx + 1) % cfg_.attacker.void_pool_size;
    return dest;
}

void Adversary::FloodTick(AodvNode& node, SimTime now) {
    if (now.sec > cfg_.AttackStop()) {
        return; // attack window over; timer dies out
    }
    RreqPacket fake;
    fake.originator = node.Id();
    fake.originator_seq = node.BumpSeq();
    fake.rreq_id = node.NextRreqId();
    fake.dest = NextVoidDest(node.Id());
    fake.dest_seq_known = std::nullopt; // nobody ever knew a void address
    fake.hop_count = 0;
    fake.ttl = cfg_.ttl_max;
    ++metrics_.fake_rreq_originated;
    channel_.Broadcast(node.Id(), fake, now);
    queue_.Schedule(Event{now + cfg_.attacker.flood_interval_s, node.Id(),
                          TimerFire{TimerId{TimerId::Kind::Flood, 0}}});
}

} // namespace ndtsim
