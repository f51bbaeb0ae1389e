#include "ndtsim/aodv.hpp"

#include <algorithm>
#include <utility>

namespace ndtsim {

AdmitOutcome RreqJournal::SeenAndAdmit(NodeId originator, std::uint32_t rreq_id,
                                       SimTime now) {
    for (Slot& s : slots_) {
        if (s.originator == originator && s.rreq_id == rreq_id) {
            if (now.sec < s.expires_at.sec) {
                return AdmitOutcome::Dup;
            }
            // Stale memory of a long-finished flood; treat the packet as new.
            s.expires_at = now + lifetime_s_;
            return AdmitOutcome::Admitted;
        }
    }
    for (Slot& s : slots_) {
        if (now.sec >= s.expires_at.sec) {
            s = Slot{originator, rreq_id, now + lifetime_s_};
            return AdmitOutcome::Admitted;
        }
    }
    if (slots_.size() < capacity_) {
        slots_.push_back(Slot{originator, rreq_id, now + lifetime_s_});
        return AdmitOutcome::Admitted;
    }
    return AdmitOutcome::Overloaded;
}

std::size_t RreqJournal::LiveCount(SimTime now) const {
    return static_cast<std::size_t>(
        std::count_if(slots_.begin(), slots_.end(), [&](const Slot& s) {
            return now.sec < s.expires_at.sec;
        }));
}

AodvNode::AodvNode(NodeId self, const ScenarioConfig& cfg, Channel& channel,
                   EventQueue& queue, MetricsReport& metrics)
    : self_(self), addr_(NodeAddress(self)), cfg_(cfg), channel_(channel),
      queue_(queue), metrics_(metrics),
      journal_(cfg.rreq_cache_capacity, cfg.rreq_cache_lifetime_s) {
    if (cfg.protocol == Protocol::NdtAodv) {
        ndt_.emplace(self, cfg.ndt);
    }
}

std::size_t AodvNode::BufferedCount(Address dest) const {
    auto it = buffer_.find(dest);
    return it == buffer_.end() ? 0 : it->second.size();
}

void AodvNode::RecordBroody(NodeId detected, SimTime now) {
    metrics_.broody_events.push_back(BroodyEvent{now, self_, detected});
}

RreqPacket AodvNode::MintRreq(Address dest, SimTime /*now*/) {
    const RouteEntry* known = table_.Peek(dest);
    std::optional<SeqNo> dest_seq;
    if (known != nullptr) {
        dest_seq = known->dest_seq; // last known freshness, bumped or not
    }
    return RreqPacket{self_, ++own_seq_, ++next_rreq_id_,
                      dest,  dest_seq,   0,
                      cfg_.ttl_max};
}

bool AodvNode::RateWindowFull(SimTime now) {
    while (!rate_window_.empty() && rate_window_.front() <= now.sec - 1.0) {
        rate_window_.pop_front();
    }
    return rate_window_.size() >= cfg_.rreq_rate_limit;
}

DiscoveryOutcome AodvNode::OriginateDiscovery(Address dest, SimTime now) {
    if (pending_.count(dest) != 0) {
        return DiscoveryOutcome::AlreadyPending;
    }
    PendingDiscovery p;
    p.sends_left = cfg_.rreq_retries + 1;
    if (RateWindowFull(now)) {
        // Defer the first flood until the limiter opens up; no send consumed.
        p.retry_timer = queue_.Schedule(
            Event{now + cfg_.rreq_rate_backoff_s, self_,
                  TimerFire{TimerId{TimerId::Kind::RreqRetry, dest.value}}});
        pending_.emplace(dest, p);
        return DiscoveryOutcome::RateLimited;
    }
    rate_window_.push_back(now.sec);
    --p.sends_left;
    ++metrics_.rreq_originated;
    channel_.Broadcast(self_, MintRreq(dest, now), now);
    p.retry_timer = queue_.Schedule(
        Event{now + cfg_.rreq_retry_wait_s, self_,
              TimerFire{TimerId{TimerId::Kind::RreqRetry, dest.value}}});
    pending_.emplace(dest, p);
    return DiscoveryOutcome::Sent;
}

void AodvNode::RreqRetryTick(Address dest, SimTime now) {
    auto it = pending_.find(dest);
    if (it == pending_.end()) {
        return; // answered discovery whose timer outlived it
    }
    if (table_.Lookup(dest, now) != nullptr) {
        // A usable route appeared some other way; ship what we were holding.
        pending_.erase(it);
        DrainBuffer(dest, now);
        return;
    }
    if (it->second.sends_left == 0) {
        // Retries exhausted: destination unreachable, drop what waited on it.
        auto bit = buffer_.find(dest);
        if (bit != buffer_.end()) {
            metrics_.data_dropped_unreachable += bit->second.size();
            buffer_.erase(bit);
        }
        pending_.erase(it);
        return;
    }
    if (RateWindowFull(now)) {
        it->second.retry_timer = queue_.Schedule(
            Event{now + cfg_.rreq_rate_backoff_s, self_,
                  TimerFire{TimerId{TimerId::Kind::RreqRetry, dest.value}}});
        return;
    }
    rate_window_.push_back(now.sec);
    --it->second.sends_left;
    ++metrics_.rreq_originated;
    channel_.Broadcast(self_, MintRreq(dest, now), now);
    it->second.retry_timer = queue_.Schedule(
        Event{now + cfg_.rreq_retry_wait_s, self_,
              TimerFire{TimerId{TimerId::Kind::RreqRetry, dest.value}}});
}

void AodvNode::ClearPending(Address dest) {
    auto it = pending_.find(dest);
    if (it == pending_.end()) {
        return;
    }
    queue_.Cancel(it->second.retry_timer);
    pending_.erase(it);
}

RreqAction AodvNode::HandleRreq(const RreqPacket& rreq, NodeId prev_hop,
                                SimTime now) {
    if (rreq.originator == self_) {
        return RreqAction::Drop; // our own flood echoed back
    }
    if (ndt_.has_value()) {
        switch (ndt_->GateRreq(rreq.originator, prev_hop == rreq.originator,
                               now)) {
        case NdtVerdict::DropBroody:
            ++metrics_.ndt_drops_broody;
            return RreqAction::Drop;
        case NdtVerdict::DropPeakExceeded:
            ++metrics_.ndt_drops_peak;
            RecordBroody(rreq.originator, now);
            return RreqAction::Drop;
        case NdtVerdict::PassToAodv:
            break;
        }
    }
    switch (journal_.SeenAndAdmit(rreq.originator, rreq.rreq_id, now)) {
    case AdmitOutcome::Dup:
        return RreqAction::Drop; // duplicate flood copy, silently dropped
    case AdmitOutcome::Overloaded:
        // Every discovery slot is pinned by a live flood; the node cannot
        // take on this request at all.
        ++metrics_.rreq_overload_drops;
        return RreqAction::Drop;
    case AdmitOutcome::Admitted:
        break;
    }
    RouteEntry reverse;
    reverse.dest = NodeAddress(rreq.originator);
    reverse.next_hop = prev_hop;
    reverse.hop_count = rreq.hop_count + 1;
    reverse.dest_seq = rreq.originator_seq;
    reverse.expires_at = now + cfg_.route_lifetime_s;
    reverse.valid = true;
    table_.InstallIfBetter(reverse, now);

    if (rreq.dest == addr_) {
        // We are the destination: answer with fresh own freshness.
        if (rreq.dest_seq_known.has_value() &&
            *rreq.dest_seq_known > own_seq_) {
            own_seq_ = *rreq.dest_seq_known;
        }
        ++own_seq_;
        SendRrepBack(
            RrepPacket{addr_, own_seq_, rreq.originator, 0,
                       cfg_.route_lifetime_s},
            now);
        return RreqAction::Reply;
    }
    const RouteEntry* fwd = table_.Lookup(rreq.dest, now);
    if (fwd != nullptr && fwd->dest_seq.has_value() &&
        (!rreq.dest_seq_known.has_value() ||
         *fwd->dest_seq >= *rreq.dest_seq_known)) {
        // Intermediate with a route at least as fresh as requested.
        SendRrepBack(RrepPacket{rreq.dest, *fwd->dest_seq, rreq.originator,
                                fwd->hop_count, fwd->expires_at - now},
                     now);
        return RreqAction::Reply;
    }
    if (rreq.ttl <= 1) {
        return RreqAction::Drop; // ttl exhausted after decrement
    }
    RreqPacket copy = rreq;
    --copy.ttl;
    ++copy.hop_count;
    channel_.Broadcast(self_, copy, now);
    return RreqAction::Rebroadcast;
}

void AodvNode::SendRrepBack(const RrepPacket& rrep, SimTime now) {
    const RouteEntry* rev = table_.Lookup(NodeAddress(rrep.originator), now);
    if (rev == nullptr) {
        return; // no reverse path; the reply dies here
    }
    const NodeId hop = rev->next_hop;
    ++metrics_.rrep_sent;
    if (channel_.Unicast(self_, hop, rrep, now) ==
        DeliveryOutcome::LinkBroken) {
        HandleLinkBreak(hop, now);
    }
}

RrepAction AodvNode::HandleRrep(const RrepPacket& rrep, NodeId prev_hop,
                                SimTime now) {
    const RouteEntry* existing = table_.Peek(rrep.dest);
    if (existing != nullptr && existing->dest_seq.has_value() &&
        *existing->dest_seq > rrep.dest_seq) {
        return RrepAction::Drop; // strictly staler than what we already hold
    }
    RouteEntry forward;
    forward.dest = rrep.dest;
    forward.next_hop = prev_hop;
    forward.hop_count = rrep.hop_count + 1;
    forward.dest_seq = rrep.dest_seq;
    forward.expires_at = now + rrep.lifetime_s;
    forward.valid = true;
    table_.InstallIfBetter(forward, now);

    if (rrep.originator == self_) {
        if (table_.Lookup(rrep.dest, now) == nullptr) {
            return RrepAction::Drop; // reply did not leave a usable route
        }
        ClearPending(rrep.dest);
        DrainBuffer(rrep.dest, now);
        return RrepAction::Consume;
    }
    const RouteEntry* rev = table_.Lookup(NodeAddress(rrep.originator), now);
    if (rev == nullptr) {
        return RrepAction::Drop; // reverse path gone
    }
    RrepPacket copy = rrep;
    ++copy.hop_count;
    const NodeId hop = rev->next_hop;
    ++metrics_.rrep_sent;
    if (channel_.Unicast(self_, hop, copy, now) ==
        DeliveryOutcome::LinkBroken) {
        HandleLinkBreak(hop, now);
        return RrepAction::Drop;
    }
    return RrepAction::Forward;
}

void AodvNode::HandleRerr(const RerrPacket& rerr, NodeId prev_hop,
                          SimTime now) {
    std::vector<std::pair<Address, SeqNo>> propagate;
    for (const auto& [dest, seq] : rerr.unreachable) {
        const RouteEntry* entry = table_.Peek(dest);
        if (entry == nullptr || !entry->valid || entry->next_hop != prev_hop) {
            continue; // we don't route there through the reporting node
        }
        if (table_.InvalidateWithSeq(dest, seq, now)) {
            propagate.emplace_back(dest, seq);
        }
    }
    if (!propagate.empty()) {
        SendRerr(std::move(propagate), now);
    }
}

void AodvNode::SendRerr(std::vector<std::pair<Address, SeqNo>> unreachable,
                        SimTime now) {
    ++metrics_.rerr_sent;
    channel_.Broadcast(self_, RerrPacket{std::move(unreachable)}, now);
}

void AodvNode::HandleLinkBreak(NodeId next_hop, SimTime now) {
    neighbor_expiry_.erase(next_hop);
    auto affected = table_.InvalidateVia(next_hop, now);
    if (!affected.empty()) {
        SendRerr(std::move(affected), now);
    }
}

void AodvNode::HandleHello(const HelloPacket& hello, SimTime now) {
    const SimTime liveness =
        now + cfg_.allowed_hello_loss * cfg_.hello_interval_s;
    neighbor_expiry_[hello.originator] = liveness;
    RouteEntry neighbor;
    neighbor.dest = NodeAddress(hello.originator);
    neighbor.next_hop = hello.originator;
    neighbor.hop_count = 1;
    neighbor.dest_seq = hello.originator_seq;
    neighbor.expires_at = liveness;
    neighbor.valid = true;
    table_.InstallIfBetter(neighbor, now);
    if (ndt_.has_value()) {
        for (NodeId id : ndt_->HatIncoming(hello.alarm_payload,
                                           hello.originator)) {
            RecordBroody(id, now);
        }
    }
}

void AodvNode::BufferPacket(const DataPacket& pkt) {
    auto& q = buffer_[NodeAddress(pkt.dst)];
    if (q.size() >= cfg_.data_buffer_capacity) {
        q.pop_front(); // oldest packet gives way
        ++metrics_.data_dropped_buffer_full;
    }
    q.push_back(pkt);
}

void AodvNode::DrainBuffer(Address dest, SimTime now) {
    auto it = buffer_.find(dest);
    if (it == buffer_.end()) {
        return;
    }
    std::deque<DataPacket> waiting = std::move(it->second);
    buffer_.erase(it);
    for (const DataPacket& pkt : waiting) {
        // Re-buffers into a fresh queue if the route dies mid-drain.
        HandleData(pkt, now);
    }
}

DataAction AodvNode::HandleData(const DataPacket& pkt, SimTime now) {
    if (pkt.dst == self_) {
        ++metrics_.data_delivered;
        metrics_.delivered_bytes += pkt.size_bytes;
        if (pkt.flow_id < metrics_.per_flow.size()) {
            FlowStats& fs = metrics_.per_flow[pkt.flow_id];
            ++fs.delivered;
            fs.latency_sum_s += now - pkt.sent_at;
        }
        return DataAction::Deliver;
    }
    const Address dest = NodeAddress(pkt.dst);
    if (const RouteEntry* route = table_.Lookup(dest, now)) {
        const NodeId hop = route->next_hop;
        table_.Extend(dest, now + cfg_.route_lifetime_s);
        if (channel_.Unicast(self_, hop, pkt, now) ==
            DeliveryOutcome::Delivered) {
            return DataAction::Forward;
        }
        HandleLinkBreak(hop, now); // invalidates + reports the broken routes
        if (pkt.src == self_) {
            BufferPacket(pkt);
            OriginateDiscovery(dest, now);
            return DataAction::Buffer;
        }
        ++metrics_.data_dropped_no_route;
        return DataAction::DropNoRoute;
    }
    if (pkt.src == self_) {
        BufferPacket(pkt);
        OriginateDiscovery(dest, now);
        return DataAction::Buffer;
    }
    // Intermediate hop without a route: the upstream path is wrong.
    ++metrics_.data_dropped_no_route;
    const RouteEntry* stale = table_.Peek(dest);
    const SeqNo seq =
        (stale != nullptr && stale->dest_seq.has_value()) ? *stale->dest_seq
                                                          : 0;
    SendRerr({{dest, seq}}, now);
    return DataAction::DropNoRoute;
}

void AodvNode::HelloTick(SimTime now) {
    // Declare neighbors dead only after the allowed number of silent
    // intervals; in-range neighbors beacon every interval, so a live link
    // never trips this.
    std::vector<NodeId> dead;
    for (const auto& [neighbor, expiry] : neighbor_expiry_) {
        if (now.sec > expiry.sec) {
            dead.push_back(neighbor);
        }
    }
    for (NodeId neighbor : dead) {
        HandleLinkBreak(neighbor, now);
    }
    HelloPacket hello{self_, own_seq_,
                      ndt_.has_value() ? ndt_->HatOutgoing()
                                       : std::vector<NodeId>{}};
    channel_.Broadcast(self_, hello, now);
    queue_.Schedule(Event{now + cfg_.hello_interval_s, self_,
                          TimerFire{TimerId{TimerId::Kind::Hello, 0}}});
}

void AodvNode::CacheTick(SimTime now) {
    if (ndt_.has_value()) {
        for (NodeId id : ndt_->CacheFlush(now)) {
            RecordBroody(id, now);
        }
    }
    queue_.Schedule(Event{now + cfg_.ndt.cache_interval_s, self_,
                          TimerFire{TimerId{TimerId::Kind::Cache, 0}}});
}

} // namespace ndtsim
