#include "ndtsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ndtsim/error.hpp"

namespace ndtsim {

const char* protocol_name(Protocol p) {
    return p == Protocol::Aodv ? "aodv" : "ndtaodv";
}

bool parse_protocol(const std::string& text, Protocol& out) {
    std::string lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "aodv") {
        out = Protocol::Aodv;
        return true;
    }
    if (lower == "ndtaodv") {
        out = Protocol::NdtAodv;
        return true;
    }
    return false;
}

std::vector<NodeId> ScenarioConfig::MaliciousSet() const {
    if (!malicious_ids.empty()) return malicious_ids;
    std::vector<NodeId> out;
    for (std::uint32_t i = 0; i < malicious && i < nodes; ++i) {
        out.push_back(nodes - 1 - i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ScenarioConfig::IsMalicious(NodeId n) const {
    auto set = MaliciousSet();
    return std::find(set.begin(), set.end(), n) != set.end();
}

std::vector<std::string> ScenarioConfig::Validate() const {
    std::vector<std::string> problems;
    auto require = [&](bool ok, const std::string& message) {
        if (!ok) problems.push_back(message);
    };

    require(nodes >= 1, "nodes: must be at least 1");
    require(duration_s > 0.0, "duration: must be positive");
    require(terrain_width_m > 0.0, "terrain_width: must be positive");
    require(terrain_height_m > 0.0, "terrain_height: must be positive");
    require(packet_size_bytes > 0, "packet_size: must be positive");
    require(pause_time_s >= 0.0, "pause_time: must be non-negative");
    require(malicious < nodes, "malicious: must be fewer than nodes");
    require(channel.range_m > 0.0, "range: must be positive");
    require(channel.per_hop_delay_s > 0.0, "per_hop_delay: must be positive");
    require(channel.loss_rate >= 0.0 && channel.loss_rate < 1.0,
            "loss_rate: must lie in [0,1)");
    require(ndt.peak_value > 0, "peak_value: must be positive");
    require(ndt.cache_interval_s > 0.0, "cache_interval: must be positive");
    require(ndt.entry_expiry_s > 0.0, "entry_expiry: must be positive");
    require(attacker.flood_interval_s > 0.0, "flood_interval: must be positive");
    require(attacker.start_at_s >= 0.0, "attack_start: must be non-negative");
    require(attacker.void_pool_size > 0, "void_pool_size: must be positive");
    require(speed_min_mps > 0.0, "speed_min: must be positive");
    require(speed_max_mps >= speed_min_mps, "speed_max: must be >= speed_min");
    require(cbr_interval_s > 0.0, "cbr_interval: must be positive");
    require(hello_interval_s > 0.0, "hello_interval: must be positive");
    require(allowed_hello_loss >= 1, "allowed_hello_loss: must be at least 1");
    require(route_lifetime_s > 0.0, "route_lifetime: must be positive");
    require(rreq_retry_wait_s > 0.0, "rreq_retry_wait: must be positive");
    require(rreq_rate_backoff_s > 0.0, "rreq_rate_backoff: must be positive");
    require(rreq_rate_limit > 0, "rreq_rate_limit: must be positive");
    require(ttl_max >= 1, "ttl_max: must be at least 1");
    require(data_buffer_capacity >= 1, "buffer_capacity: must be at least 1");
    require(rreq_cache_capacity >= 1, "rreq_cache_capacity: must be at least 1");
    require(rreq_cache_lifetime_s > 0.0, "rreq_cache_lifetime: must be positive");

    for (NodeId m : malicious_ids) {
        if (m >= nodes) {
            problems.push_back("malicious_ids: id " + std::to_string(m) +
                               " outside 0.." + std::to_string(nodes - 1));
        }
    }
    if (!malicious_ids.empty() && malicious_ids.size() != malicious) {
        problems.push_back("malicious_ids: list length does not match malicious count");
    }
    if (!initial_positions.empty()) {
        if (initial_positions.size() != nodes) {
            problems.push_back("initial_positions: need one position per node");
        }
        for (const Position& p : initial_positions) {
            if (p.x < 0.0 || p.x > terrain_width_m || p.y < 0.0 ||
                p.y > terrain_height_m) {
                problems.push_back("initial_positions: position outside terrain");
                break;
            }
        }
    }
    for (const auto& [src, dst] : explicit_flows) {
        if (src >= nodes || dst >= nodes || src == dst) {
            problems.push_back("explicit_flows: endpoints must be distinct real nodes");
            break;
        }
    }
    if (!explicit_flows.empty() && explicit_flows.size() != connections) {
        problems.push_back("explicit_flows: list length does not match connections");
    }
    return problems;
}

namespace {

double ParseDouble(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        throw SimError(ErrorCode::ConfigInvalid, key + ": not a number: " + value);
    }
    if (used != value.size()) {
        throw SimError(ErrorCode::ConfigInvalid, key + ": trailing junk in: " + value);
    }
    return out;
}

std::uint64_t ParseUnsigned(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    std::uint64_t out = 0;
    try {
        out = std::stoull(value, &used);
    } catch (const std::exception&) {
        throw SimError(ErrorCode::ConfigInvalid, key + ": not an integer: " + value);
    }
    if (used != value.size()) {
        throw SimError(ErrorCode::ConfigInvalid, key + ": trailing junk in: " + value);
    }
    return out;
}

std::string Trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

void apply_key_value(ScenarioConfig& cfg, const std::string& key,
                     const std::string& value) {
    if (key == "protocol") {
        if (!parse_protocol(value, cfg.protocol)) {
            throw SimError(ErrorCode::ConfigInvalid,
                           "protocol: expected aodv or ndtaodv, got " + value);
        }
    } else if (key == "nodes") {
        cfg.nodes = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "duration") {
        cfg.duration_s = ParseDouble(key, value);
    } else if (key == "terrain_width") {
        cfg.terrain_width_m = ParseDouble(key, value);
    } else if (key == "terrain_height") {
        cfg.terrain_height_m = ParseDouble(key, value);
    } else if (key == "connections") {
        cfg.connections = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "packet_size") {
        cfg.packet_size_bytes = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "pause_time") {
        cfg.pause_time_s = ParseDouble(key, value);
    } else if (key == "malicious") {
        cfg.malicious = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "seed") {
        cfg.seed = ParseUnsigned(key, value);
    } else if (key == "range") {
        cfg.channel.range_m = ParseDouble(key, value);
    } else if (key == "per_hop_delay") {
        cfg.channel.per_hop_delay_s = ParseDouble(key, value);
    } else if (key == "loss_rate") {
        cfg.channel.loss_rate = ParseDouble(key, value);
    } else if (key == "peak_value") {
        cfg.ndt.peak_value = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "cache_interval") {
        cfg.ndt.cache_interval_s = ParseDouble(key, value);
    } else if (key == "entry_expiry") {
        cfg.ndt.entry_expiry_s = ParseDouble(key, value);
    } else if (key == "flood_interval") {
        cfg.attacker.flood_interval_s = ParseDouble(key, value);
    } else if (key == "attack_start") {
        cfg.attacker.start_at_s = ParseDouble(key, value);
    } else if (key == "attack_stop") {
        cfg.attacker.stop_at_s = ParseDouble(key, value);
    } else if (key == "void_pool_size") {
        cfg.attacker.void_pool_size = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "speed_min") {
        cfg.speed_min_mps = ParseDouble(key, value);
    } else if (key == "speed_max") {
        cfg.speed_max_mps = ParseDouble(key, value);
    } else if (key == "cbr_interval") {
        cfg.cbr_interval_s = ParseDouble(key, value);
    } else if (key == "hello_interval") {
        cfg.hello_interval_s = ParseDouble(key, value);
    } else if (key == "allowed_hello_loss") {
        cfg.allowed_hello_loss = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "route_lifetime") {
        cfg.route_lifetime_s = ParseDouble(key, value);
    } else if (key == "rreq_retries") {
        cfg.rreq_retries = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "rreq_retry_wait") {
        cfg.rreq_retry_wait_s = ParseDouble(key, value);
    } else if (key == "rreq_rate_backoff") {
        cfg.rreq_rate_backoff_s = ParseDouble(key, value);
    } else if (key == "rreq_rate_limit") {
        cfg.rreq_rate_limit = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "ttl_max") {
        cfg.ttl_max = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "buffer_capacity") {
        cfg.data_buffer_capacity = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "rreq_cache_capacity") {
        cfg.rreq_cache_capacity = static_cast<std::uint32_t>(ParseUnsigned(key, value));
    } else if (key == "rreq_cache_lifetime") {
        cfg.rreq_cache_lifetime_s = ParseDouble(key, value);
    } else if (key == "malicious_ids") {
        cfg.malicious_ids.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = Trim(item);
            if (item.empty()) continue;
            cfg.malicious_ids.push_back(
                static_cast<NodeId>(ParseUnsigned(key, item)));
        }
    } else {
        throw SimError(ErrorCode::ConfigInvalid, "unknown config key: " + key);
    }
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SimError(ErrorCode::ConfigInvalid, "cannot open config file: " + path);
    }
    ScenarioConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = Trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::size_t eq = trimmed.find('=');
        if (eq == std::string::npos) {
            throw SimError(ErrorCode::ConfigInvalid,
                           path + ":" + std::to_string(line_no) +
                               ": expected key=value, got: " + trimmed);
        }
        std::string key = Trim(trimmed.substr(0, eq));
        std::string value = Trim(trimmed.substr(eq + 1));
        apply_key_value(cfg, key, value);
    }
    return cfg;
}

} // namespace ndtsim
