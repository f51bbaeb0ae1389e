#ifndef NDTSIM_METRICS_HPP
#define NDTSIM_METRICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ndtsim/sim_time.hpp"

namespace ndtsim {

// One node adding another to its broody list, either by local detection or
// by merging a hello alarm.
struct BroodyEvent {
    SimTime time{};
    NodeId detector{0};
    NodeId detected{0};
};

struct FlowStats {
    std::uint64_t sent{0};
    std::uint64_t delivered{0};
    double latency_sum_s{0.0};
};

// Raw counters accumulated during a run plus the derived report fields
// filled in by the scenario when the run ends.
struct MetricsReport {
    // Data-plane counters.
    std::uint64_t data_sent{0};
    std::uint64_t data_delivered{0};
    std::uint64_t delivered_bytes{0};
    std::uint64_t data_dropped_no_route{0};
    std::uint64_t data_dropped_unreachable{0};
    std::uint64_t data_dropped_buffer_full{0};

    // Control-plane counters. routing_tx counts every per-hop transmission of
    // RREQ/RREP/RERR/HELLO, attacker-originated floods and their rebroadcasts
    // included.
    std::uint64_t routing_tx{0};
    std::uint64_t rreq_originated{0};
    std::uint64_t fake_rreq_originated{0};
    std::uint64_t rrep_sent{0};
    std::uint64_t rerr_sent{0};
    std::uint64_t rreq_overload_drops{0};

    // Defense counters.
    std::uint64_t ndt_drops_broody{0};
    std::uint64_t ndt_drops_peak{0};
    std::vector<BroodyEvent> broody_events;

    // Derived at end of run.
    std::optional<double> pdf;
    double avg_throughput_kbps{0.0};
    std::optional<double> nrl;
    std::optional<double> first_detection_time_s;
    std::uint64_t broody_final_size{0}; // distinct blacklisted ids, all nodes
    std::vector<FlowStats> per_flow;
    std::uint64_t trace_hash{0};
};

// delivered / sent; empty when nothing was sent. Throws
// SimError(InvalidCounts) if delivered > sent.
std::optional<double> compute_pdf(std::uint64_t sent, std::uint64_t delivered);

// Delivered payload rate in kilobits/second. Throws SimError(Precondition)
// for a non-positive duration.
double compute_at(std::uint64_t delivered_bytes, double duration_s);

// Routing transmissions per delivered data packet; empty when nothing was
// delivered (serialized as the literal `inf`).
std::optional<double> compute_nrl(std::uint64_t routing_tx, std::uint64_t delivered);

} // namespace ndtsim

#endif
