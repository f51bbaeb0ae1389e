#include "ndtsim/scenario.hpp"

#include <cstdio>
#include <string>

#include "ndtsim/error.hpp"

namespace ndtsim {

namespace {

ScenarioConfig Validated(ScenarioConfig cfg) {
    const auto problems = cfg.Validate();
    if (!problems.empty()) {
        std::string message = "invalid config:";
        for (const auto& p : problems) {
            message += "\n  " + p;
        }
        throw SimError(ErrorCode::ConfigInvalid, message);
    }
    return cfg;
}

} // namespace

Scenario::Scenario(const ScenarioConfig& cfg)
    : cfg_(Validated(cfg)), master_(cfg_.seed), mobility_(cfg_, master_),
      channel_(cfg_.channel, mobility_, queue_,
               master_.Fork(rng_stream::kChannel), metrics_),
      adversary_(cfg_, channel_, queue_, metrics_),
      traffic_(cfg_, master_.Fork(rng_stream::kTraffic), queue_, metrics_) {
    nodes_.reserve(cfg_.nodes);
    for (NodeId n = 0; n < cfg_.nodes; ++n) {
        nodes_.push_back(
            std::make_unique<AodvNode>(n, cfg_, channel_, queue_, metrics_));
    }
    traffic_.SetInject([this](NodeId src, const DataPacket& pkt, SimTime now) {
        nodes_[src]->HandleData(pkt, now);
    });
    queue_.SetDispatcher([this](const Event& ev) {
        TraceEvent(ev);
        Dispatch(ev);
    });
}

void Scenario::Start() {
    if (started_) {
        return;
    }
    started_ = true;
    mobility_.Init(queue_);
    // Stagger beacons across the first interval so 25 nodes never sound off
    // in the same instant.
    const double step = cfg_.hello_interval_s / cfg_.nodes;
    for (NodeId n = 0; n < cfg_.nodes; ++n) {
        queue_.Schedule(Event{SimTime{n * step}, n,
                              TimerFire{TimerId{TimerId::Kind::Hello, 0}}});
    }
    if (cfg_.protocol == Protocol::NdtAodv) {
        for (NodeId n = 0; n < cfg_.nodes; ++n) {
            queue_.Schedule(
                Event{SimTime{cfg_.ndt.cache_interval_s}, n,
                      TimerFire{TimerId{TimerId::Kind::Cache, 0}}});
        }
    }
    traffic_.Init();
    adversary_.Init();
}

const MetricsReport& Scenario::Run() {
    Start();
    queue_.RunUntil(SimTime{cfg_.duration_s});
    Finalize();
    return metrics_;
}

void Scenario::Finalize() {
    metrics_.pdf = compute_pdf(metrics_.data_sent, metrics_.data_delivered);
    metrics_.avg_throughput_kbps =
        compute_at(metrics_.delivered_bytes, cfg_.duration_s);
    metrics_.nrl = compute_nrl(metrics_.routing_tx, metrics_.data_delivered);
    if (!metrics_.broody_events.empty()) {
        // Events are appended in dispatch order, so the first is earliest.
        metrics_.first_detection_time_s =
            metrics_.broody_events.front().time.sec;
    }
    std::set<NodeId> blacklisted;
    for (const auto& node : nodes_) {
        if (const NdtState* ndt = node->Ndt()) {
            blacklisted.insert(ndt->Broody().begin(), ndt->Broody().end());
        }
    }
    metrics_.broody_final_size = blacklisted.size();
    metrics_.trace_hash = trace_hash_;
}

void Scenario::InjectPacket(NodeId target, const Packet& pkt, NodeId from,
                            SimTime at) {
    queue_.Schedule(Event{at, target, PacketDelivery{pkt, from}});
}

std::set<NodeId> Scenario::Broody(NodeId id) const {
    const NdtState* ndt = nodes_.at(id)->Ndt();
    return ndt != nullptr ? ndt->Broody() : std::set<NodeId>{};
}

void Scenario::TraceEvent(const Event& ev) {
    char head[64];
    std::snprintf(head, sizeof(head), "%.6f\t%u\t", ev.fire_at.sec,
                  ev.target);
    std::string line = head;
    line += event_kind_name(ev);
    line += '\t';
    line += event_detail(ev);
    trace_hash_ = fnv1a_update(trace_hash_, line);
    trace_hash_ = fnv1a_update(trace_hash_, "\n");
    if (sink_ != nullptr) {
        sink_->Line(line);
    }
}

void Scenario::Dispatch(const Event& ev) {
    const SimTime now = ev.fire_at;
    AodvNode& node = *nodes_.at(ev.target);
    if (const auto* delivery = std::get_if<PacketDelivery>(&ev.kind)) {
        const NodeId from = delivery->from;
        if (const auto* rreq = std::get_if<RreqPacket>(&delivery->pkt)) {
            node.HandleRreq(*rreq, from, now);
        } else if (const auto* rrep =
                       std::get_if<RrepPacket>(&delivery->pkt)) {
            node.HandleRrep(*rrep, from, now);
        } else if (const auto* rerr =
                       std::get_if<RerrPacket>(&delivery->pkt)) {
            node.HandleRerr(*rerr, from, now);
        } else if (const auto* hello =
                       std::get_if<HelloPacket>(&delivery->pkt)) {
            node.HandleHello(*hello, now);
        } else if (const auto* data =
                       std::get_if<DataPacket>(&delivery->pkt)) {
            node.HandleData(*data, now);
        }
        return;
    }
    if (const auto* timer = std::get_if<TimerFire>(&ev.kind)) {
        switch (timer->timer.kind) {
        case TimerId::Kind::Hello:
            node.HelloTick(now);
            break;
        case TimerId::Kind::Cache:
            node.CacheTick(now);
            break;
        case TimerId::Kind::Flood:
            adversary_.FloodTick(node, now);
            break;
        case TimerId::Kind::RreqRetry:
            node.RreqRetryTick(Address{timer->timer.arg}, now);
            break;
        }
        return;
    }
    if (std::get_if<MobilityUpdate>(&ev.kind) != nullptr) {
        mobility_.OnWaypointReached(ev.target, queue_);
        return;
    }
    if (const auto* tick = std::get_if<TrafficTick>(&ev.kind)) {
        traffic_.Tick(tick->flow_id, now);
    }
}

} // namespace ndtsim
