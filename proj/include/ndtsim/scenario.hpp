#ifndef NDTSIM_SCENARIO_HPP
#define NDTSIM_SCENARIO_HPP

#include <memory>
#include <set>
#include <vector>

#include "ndtsim/adversary.hpp"
#include "ndtsim/aodv.hpp"
#include "ndtsim/channel.hpp"
#include "ndtsim/config.hpp"
#include "ndtsim/event_queue.hpp"
#include "ndtsim/metrics.hpp"
#include "ndtsim/mobility.hpp"
#include "ndtsim/trace.hpp"
#include "ndtsim/traffic.hpp"

namespace ndtsim {

// One fully wired simulation: event queue, mobility, channel, protocol
// instances, adversary, and traffic, all built from a validated config. A
// scenario is a self-contained value — independent scenarios never share
// state, so a harness may run them concurrently.
class Scenario {
  public:
    // Throws SimError(ConfigInvalid) listing every violated field.
    explicit Scenario(const ScenarioConfig& cfg);

    // Optional event-trace output (one tab-separated line per dispatched
    // event). The dispatch log is always hashed into the report either way.
    void SetTraceSink(TraceSink* sink) { sink_ = sink; }

    // Start + RunUntil(duration) + Finalize: the whole experiment.
    const MetricsReport& Run();

    // Piecewise control for tests.
    void Start();                   // schedules all initial events (call once)
    std::size_t RunUntil(SimTime t) { return queue_.RunUntil(t); }
    void Finalize();                // fills the derived report fields

    // Schedules a crafted delivery, bypassing the channel.
    void InjectPacket(NodeId target, const Packet& pkt, NodeId from,
                      SimTime at);

    const ScenarioConfig& Config() const { return cfg_; }
    MetricsReport& Metrics() { return metrics_; }
    EventQueue& Queue() { return queue_; }
    Channel& Medium() { return channel_; }
    Mobility& Motion() { return mobility_; }
    Traffic& Flows() { return traffic_; }
    AodvNode& Node(NodeId id) { return *nodes_.at(id); }
    const RoutingTable& Routes(NodeId id) const { return nodes_.at(id)->Routes(); }
    // Empty set for plain-AODV nodes.
    std::set<NodeId> Broody(NodeId id) const;

  private:
    void Dispatch(const Event& ev);
    void TraceEvent(const Event& ev);

    ScenarioConfig cfg_;
    MetricsReport metrics_;
    EventQueue queue_;
    SeededRng master_;
    Mobility mobility_;
    Channel channel_;
    std::vector<std::unique_ptr<AodvNode>> nodes_;
    Adversary adversary_;
    Traffic traffic_;

    TraceSink* sink_{nullptr};
    std::uint64_t trace_hash_{kFnvOffsetBasis};
    bool started_{false};
};

} // namespace ndtsim

#endif
