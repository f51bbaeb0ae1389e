#include "ndtsim/traffic.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "ndtsim/error.hpp"

namespace ndtsim {

std::vector<Flow> setup_flows(const ScenarioConfig& cfg, SeededRng& rng) {
    std::vector<Flow> flows;
    if (cfg.connections == 0) {
        return flows;
    }
    const double stop = cfg.duration_s - 1.0;

    if (!cfg.explicit_flows.empty()) {
        // Scripted endpoints: fixed start so tiny scenarios stay exact.
        std::uint32_t id = 0;
        for (const auto& [src, dst] : cfg.explicit_flows) {
            if (src == dst || src >= cfg.nodes || dst >= cfg.nodes) {
                throw SimError(ErrorCode::ConfigInvalid,
                               "explicit_flows: endpoints must be distinct "
                               "real nodes");
            }
            flows.push_back(Flow{id++, src, dst, cfg.packet_size_bytes,
                                 cfg.cbr_interval_s, SimTime{1.0},
                                 SimTime{stop}});
        }
        return flows;
    }

    std::vector<NodeId> legit;
    for (NodeId n = 0; n < cfg.nodes; ++n) {
        if (!cfg.IsMalicious(n)) {
            legit.push_back(n);
        }
    }
    const std::uint64_t pair_space =
        static_cast<std::uint64_t>(legit.size()) *
        (legit.empty() ? 0 : legit.size() - 1);
    if (legit.size() < 2 || cfg.connections > pair_space) {
        throw SimError(ErrorCode::InsufficientNodes,
                       "traffic needs at least two legitimate nodes and "
                       "enough distinct (src,dst) pairs");
    }

    std::set<std::pair<NodeId, NodeId>> used;
    for (std::uint32_t i = 0; i < cfg.connections; ++i) {
        NodeId src = 0;
        NodeId dst = 0;
        do {
            src = legit[rng.UniformInt(0, legit.size() - 1)];
            dst = legit[rng.UniformInt(0, legit.size() - 1)];
        } while (src == dst || used.count({src, dst}) != 0);
        used.insert({src, dst});
        const double start = rng.UniformDouble(1.0, 5.0);
        flows.push_back(Flow{i, src, dst, cfg.packet_size_bytes,
                             cfg.cbr_interval_s, SimTime{start},
                             SimTime{stop}});
    }
    return flows;
}

Traffic::Traffic(const ScenarioConfig& cfg, SeededRng rng, EventQueue& queue,
                 MetricsReport& metrics)
    : queue_(queue), metrics_(metrics) {
    flows_ = setup_flows(cfg, rng);
    next_seq_.assign(flows_.size(), 0);
}

void Traffic::Init() {
    metrics_.per_flow.assign(flows_.size(), FlowStats{});
    for (const Flow& f : flows_) {
        if (f.start_at.sec <= f.stop_at.sec) {
            queue_.Schedule(Event{f.start_at, f.src, TrafficTick{f.id}});
        }
    }
}

void Traffic::Tick(std::uint32_t flow_id, SimTime now) {
    Flow& f = flows_[flow_id];
    DataPacket pkt{f.id,  next_seq_[flow_id]++,
                   f.src, f.dst,
                   f.packet_size_bytes, now};
    ++metrics_.data_sent;
    if (flow_id < metrics_.per_flow.size()) {
        ++metrics_.per_flow[flow_id].sent;
    }
    if (inject_) {
        inject_(f.src, pkt, now);
    }
    // Tick times are computed from the flow start, not accumulated, so the
    // realized count matches ExpectedTicks exactly.
    const SimTime next =
        f.start_at + static_cast<double>(next_seq_[flow_id]) * f.interval_s;
    if (next.sec <= f.stop_at.sec) {
        queue_.Schedule(Event{next, f.src, TrafficTick{flow_id}});
    }
}

std::uint64_t Traffic::ExpectedTicks(const Flow& flow) {
    if (flow.stop_at.sec < flow.start_at.sec) {
        return 0;
    }
    const double span = flow.stop_at.sec - flow.start_at.sec;
    auto k = static_cast<std::int64_t>(std::floor(span / flow.interval_s));
    // Align the estimate with the exact scheduling comparison.
    while (flow.start_at.sec + static_cast<double>(k + 1) * flow.interval_s <=
           flow.stop_at.sec) {
        ++k;
    }
    while (k > 0 && flow.start_at.sec + static_cast<double>(k) *
                            flow.interval_s > flow.stop_at.sec) {
        --k;
    }
    return static_cast<std::uint64_t>(k) + 1;
}

} // namespace ndtsim
