#include "ndtsim/routing_table.hpp"

namespace ndtsim {

namespace {

bool Alive(const RouteEntry& e, SimTime now) {
    return e.valid && e.expires_at > now;
}

} // namespace

const RouteEntry* RoutingTable::Lookup(Address dest, SimTime now) const {
    auto it = entries_.find(dest);
    if (it == entries_.end() || !Alive(it->second, now)) {
        return nullptr;
    }
    return &it->second;
}

const RouteEntry* RoutingTable::Peek(Address dest) const {
    auto it = entries_.find(dest);
    return it == entries_.end() ? nullptr : &it->second;
}

bool RoutingTable::Fresher(const RouteEntry& candidate,
                           const RouteEntry& current, SimTime now) {
    // std::optional orders nullopt below every engaged value, which is
    // exactly the rank an unknown sequence number should have.
    if (candidate.dest_seq != current.dest_seq) {
        return candidate.dest_seq > current.dest_seq;
    }
    if (!Alive(current, now) && candidate.valid) {
        return true;
    }
    return candidate.hop_count < current.hop_count;
}

bool RoutingTable::InstallIfBetter(const RouteEntry& candidate, SimTime now) {
    auto [it, inserted] = entries_.try_emplace(candidate.dest, candidate);
    if (inserted) {
        return true;
    }
    RouteEntry& current = it->second;
    if (Fresher(candidate, current, now)) {
        current = candidate;
        return true;
    }
    // Same route re-learned: keep it, but let the longer lifetime win.
    if (candidate.valid && current.valid &&
        candidate.dest_seq == current.dest_seq &&
        candidate.next_hop == current.next_hop &&
        candidate.hop_count == current.hop_count &&
        candidate.expires_at > current.expires_at) {
        current.expires_at = candidate.expires_at;
    }
    return false;
}

void RoutingTable::Extend(Address dest, SimTime expires_at) {
    auto it = entries_.find(dest);
    if (it != entries_.end() && it->second.valid &&
        expires_at > it->second.expires_at) {
        it->second.expires_at = expires_at;
    }
}

bool RoutingTable::Invalidate(Address dest, SimTime now) {
    auto it = entries_.find(dest);
    if (it == entries_.end()) {
        return false;
    }
    RouteEntry& e = it->second;
    const bool was_alive = Alive(e, now);
    if (e.valid && e.dest_seq.has_value()) {
        ++*e.dest_seq;
    }
    e.valid = false;
    return was_alive;
}

bool RoutingTable::InvalidateWithSeq(Address dest, SeqNo seq, SimTime now) {
    auto it = entries_.find(dest);
    if (it == entries_.end()) {
        return false;
    }
    RouteEntry& e = it->second;
    const bool was_alive = Alive(e, now);
    if (!e.dest_seq.has_value() || *e.dest_seq < seq) {
        e.dest_seq = seq;
    }
    e.valid = false;
    return was_alive;
}

std::vector<std::pair<Address, SeqNo>> RoutingTable::InvalidateVia(
    NodeId next_hop, SimTime now) {
    std::vector<std::pair<Address, SeqNo>> affected;
    for (auto& [dest, e] : entries_) { // ascending Address order
        if (e.next_hop != next_hop || !e.valid) {
            continue;
        }
        const bool was_alive = Alive(e, now);
        if (e.dest_seq.has_value()) {
            ++*e.dest_seq;
        }
        e.valid = false;
        if (was_alive) {
            affected.emplace_back(dest, e.dest_seq.value_or(0));
        }
    }
    return affected;
}

} // namespace ndtsim
