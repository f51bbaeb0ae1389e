#ifndef NDTSIM_ADVERSARY_HPP
#define NDTSIM_ADVERSARY_HPP

#include <cstdint>
#include <map>

#include "ndtsim/aodv.hpp"
#include "ndtsim/channel.hpp"
#include "ndtsim/config.hpp"
#include "ndtsim/event_queue.hpp"
#include "ndtsim/metrics.hpp"

namespace ndtsim {

// The flooding attacker. On every FloodTimer tick each malicious node
// broadcasts one fake RREQ toward a void destination at maximum TTL — no
// rate limit, no retry discipline, no waiting for replies. Malicious nodes
// otherwise run normal AODV (the attack exhausts resources; it does not
// drop traffic).
class Adversary {
  public:
    Adversary(const ScenarioConfig& cfg, Channel& channel, EventQueue& queue,
              MetricsReport& metrics);

    // Schedules the first FloodTimer for every malicious node.
    void Init();

    // FloodTimer body; `node` is the attacker's protocol instance, used to
    // mint the request so its sequence number stays monotone.
    void FloodTick(AodvNode& node, SimTime now);

  private:
    Address NextVoidDest(NodeId attacker);

    const ScenarioConfig& cfg_;
    Channel& channel_;
    EventQueue& queue_;
    MetricsReport& metrics_;
    std::map<NodeId, std::uint32_t> round_robin_;
};

} // namespace ndtsim

#endif
