#include "ndtsim/ndt.hpp"

namespace ndtsim {

NdtState::NdtState(NodeId self, const NdtParams& params)
    : self_(self), params_(params) {}

NdtVerdict NdtState::GateRreq(NodeId originator, bool first_hand,
                              SimTime now) {
    if (IsBroody(originator)) {
        return NdtVerdict::DropBroody;
    }
    if (!first_hand || originator == self_) {
        return NdtVerdict::PassToAodv;
    }
    auto it = counts_.find(originator);
    if (it == counts_.end() || now.sec >= it->second.expires_at.sec) {
        // Absent or lazily expired: start a fresh window for this neighbor.
        counts_[originator] =
            RreqCountEntry{1, now + params_.entry_expiry_s};
        return NdtVerdict::PassToAodv;
    }
    RreqCountEntry& entry = it->second;
    ++entry.count;
    entry.expires_at = now + params_.entry_expiry_s;
    if (entry.count > params_.peak_value) {
        broody_.insert(originator);
        return NdtVerdict::DropPeakExceeded;
    }
    return NdtVerdict::PassToAodv;
}

std::vector<NodeId> NdtState::CacheFlush(SimTime now) {
    std::vector<NodeId> newly;
    for (const auto& [requester, entry] : counts_) {
        if (now.sec < entry.expires_at.sec &&
            entry.count > params_.peak_value && requester != self_ &&
            broody_.insert(requester).second) {
            newly.push_back(requester);
        }
    }
    counts_.clear();
    return newly; // ascending: counts_ iterates in key order
}

std::vector<NodeId> NdtState::HatOutgoing() const {
    return {broody_.begin(), broody_.end()};
}

std::vector<NodeId> NdtState::HatIncoming(const std::vector<NodeId>& payload,
                                          NodeId sender) {
    std::vector<NodeId> added;
    if (IsBroody(sender)) {
        return added; // a blacklisted node cannot poison anyone's list
    }
    for (NodeId id : payload) {
        if (id != self_ && broody_.insert(id).second) {
            added.push_back(id);
        }
    }
    return added;
}

} // namespace ndtsim
