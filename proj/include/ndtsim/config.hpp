#ifndef NDTSIM_CONFIG_HPP
#define NDTSIM_CONFIG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ndtsim/geometry.hpp"
#include "ndtsim/sim_time.hpp"

namespace ndtsim {

enum class Protocol { Aodv, NdtAodv };

const char* protocol_name(Protocol p);
bool parse_protocol(const std::string& text, Protocol& out);

// Simplified wireless medium: unit-disk connectivity with a fixed per-hop
// latency. 250 m is the usual simulator default for an 802.11/two-ray stack,
// which this model abstracts away.
struct ChannelParams {
    double range_m = 250.0;
    double per_hop_delay_s = 0.002;
    double loss_rate = 0.0; // broadcast-only loss probability in [0,1)
};

struct NdtParams {
    std::uint32_t peak_value = 10;   // strict threshold on per-neighbor counts
    double cache_interval_s = 1.0;   // RREQ_count flush period
    double entry_expiry_s = 1.0;     // count entry lifetime (CURRENT_TIME+1)
};

struct AttackerParams {
    double flood_interval_s = 0.009;
    double start_at_s = 0.0;
    double stop_at_s = -1.0;            // < 0 means "until end of run"
    std::uint32_t void_pool_size = 64;  // void destinations cycled round-robin
};

// Full experiment parameterization. Defaults: 25 nodes on 1000 x 1000 m,
// 100 s, 5 CBR connections of 512-byte packets, flood interval 0.009 s,
// cache interval 1 s, peak value 10.
struct ScenarioConfig {
    Protocol protocol = Protocol::Aodv;
    std::uint32_t nodes = 25;
    double duration_s = 100.0;
    double terrain_width_m = 1000.0;
    double terrain_height_m = 1000.0;
    std::uint32_t connections = 5;
    std::uint32_t packet_size_bytes = 512;
    double pause_time_s = 0.0;
    std::uint32_t malicious = 0;
    std::uint64_t seed = 1;

    ChannelParams channel;
    NdtParams ndt;
    AttackerParams attacker;

    // Random-waypoint speed range; the conventional MANET evaluation range.
    double speed_min_mps = 1.0;
    double speed_max_mps = 20.0;

    double cbr_interval_s = 0.25; // 4 packets/s per connection

    // AODV constants.
    double hello_interval_s = 1.0;
    std::uint32_t allowed_hello_loss = 2;
    double route_lifetime_s = 10.0;
    std::uint32_t rreq_retries = 2;
    double rreq_retry_wait_s = 2.0;
    double rreq_rate_backoff_s = 0.25; // deferral when the rate limiter refuses
    std::uint32_t rreq_rate_limit = 10;
    std::uint32_t ttl_max = 32;
    std::uint32_t data_buffer_capacity = 64;

    // Per-node RREQ admission state: a node can track at most this many live
    // discovery floods at once; entries persist for the cache lifetime. Mass
    // fake requests exhaust these slots, which is what lets a flood suppress
    // legitimate route discovery in this model.
    std::uint32_t rreq_cache_capacity = 64;
    double rreq_cache_lifetime_s = 5.0;

    // Explicit malicious node ids; empty means the highest-numbered
    // `malicious` ids, which keeps the 1- and 3-attacker experiments
    // reproducible.
    std::vector<NodeId> malicious_ids;

    // Test/scripting hooks (not exposed on the CLI): pinned initial node
    // placements and pinned flow endpoints.
    std::vector<Position> initial_positions;
    std::vector<std::pair<NodeId, NodeId>> explicit_flows;

    double AttackStop() const {
        return attacker.stop_at_s < 0.0 ? duration_s : attacker.stop_at_s;
    }

    // The ids that actually act maliciously in this scenario.
    std::vector<NodeId> MaliciousSet() const;
    bool IsMalicious(NodeId n) const;

    // Empty result means the config is valid; otherwise one "field: problem"
    // diagnostic per violation.
    std::vector<std::string> Validate() const;
};

// Flat key=value config file (# comments, blank lines ignored). Unknown keys
// and malformed values are reported, not ignored.
void apply_key_value(ScenarioConfig& cfg, const std::string& key,
                     const std::string& value);
ScenarioConfig load_config_file(const std::string& path);

} // namespace ndtsim

#endif
