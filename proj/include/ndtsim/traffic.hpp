#ifndef NDTSIM_TRAFFIC_HPP
#define NDTSIM_TRAFFIC_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ndtsim/config.hpp"
#include "ndtsim/event_queue.hpp"
#include "ndtsim/metrics.hpp"
#include "ndtsim/packet.hpp"
#include "ndtsim/rng.hpp"

namespace ndtsim {

// One constant-bit-rate connection between two legitimate nodes.
struct Flow {
    std::uint32_t id{0};
    NodeId src{0};
    NodeId dst{0};
    std::uint32_t packet_size_bytes{512};
    double interval_s{0.25};
    SimTime start_at{};
    SimTime stop_at{};
};

// Draws the configured number of flows with distinct (src, dst) pairs over
// non-malicious endpoints, start times uniform in [1, 5] s, stopping one
// second before the end of the run. Honors cfg.explicit_flows for scripted
// topologies. Throws SimError(InsufficientNodes) when fewer than two
// legitimate nodes exist (or the pair space is too small).
std::vector<Flow> setup_flows(const ScenarioConfig& cfg, SeededRng& rng);

// CBR sources driven by TrafficTick events. Each tick stamps one DataPacket
// and hands it to the source node's forwarding path via `inject`.
class Traffic {
  public:
    using InjectFn =
        std::function<void(NodeId src, const DataPacket& pkt, SimTime now)>;

    Traffic(const ScenarioConfig& cfg, SeededRng rng, EventQueue& queue,
            MetricsReport& metrics);

    void SetInject(InjectFn fn) { inject_ = std::move(fn); }

    // Schedules each flow's first tick (flows whose window is empty never
    // tick) and sizes the per-flow metrics.
    void Init();

    void Tick(std::uint32_t flow_id, SimTime now);

    const std::vector<Flow>& Flows() const { return flows_; }

    // Analytic tick count for one flow: floor((stop-start)/interval) + 1.
    static std::uint64_t ExpectedTicks(const Flow& flow);

  private:
    EventQueue& queue_;
    MetricsReport& metrics_;
    std::vector<Flow> flows_;
    std::vector<std::uint64_t> next_seq_;
    InjectFn inject_;
};

} // namespace ndtsim

#endif
