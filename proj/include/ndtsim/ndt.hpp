#ifndef NDTSIM_NDT_HPP
#define NDTSIM_NDT_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ndtsim/config.hpp"
#include "ndtsim/sim_time.hpp"

namespace ndtsim {

// One neighbor's request count within the current cache window.
struct RreqCountEntry {
    std::uint32_t count{0};
    SimTime expires_at{};
};

enum class NdtVerdict {
    PassToAodv,       // not suspicious; normal RREQ handling follows
    DropBroody,       // originator already blacklisted
    DropPeakExceeded, // this packet pushed the originator over the peak
};

// Neighbor Defense Technique state for one node: the per-neighbor request
// counter table, the broody (blacklist) set, and the hello-alarm merge
// rules. Owns no timers; the owning node drives CacheFlush and the hello
// payload hooks.
class NdtState {
  public:
    NdtState(NodeId self, const NdtParams& params);

    // Screens an incoming RREQ before any AODV processing. Only first-hand
    // packets — heard directly from their originator — are counted: that is
    // the only case where the originator is provably a current neighbor,
    // and it keeps rebroadcast fan-in of legitimate floods from inflating
    // anyone's count. Forwarded RREQs from non-broody originators pass
    // through uncounted.
    NdtVerdict GateRreq(NodeId originator, bool first_hand, SimTime now);

    // CacheTimer body: blacklists any counted neighbor still over the peak,
    // then clears the whole count table. Returns newly blacklisted ids,
    // ascending.
    std::vector<NodeId> CacheFlush(SimTime now);

    // Full broody membership, sorted ascending — the hello alarm payload.
    std::vector<NodeId> HatOutgoing() const;

    // Merges a received hello alarm payload. Payloads from blacklisted
    // senders are ignored and the node never blacklists itself. Returns the
    // ids actually added, ascending.
    std::vector<NodeId> HatIncoming(const std::vector<NodeId>& payload,
                                    NodeId sender);

    bool IsBroody(NodeId id) const { return broody_.count(id) != 0; }
    const std::set<NodeId>& Broody() const { return broody_; }
    const std::map<NodeId, RreqCountEntry>& Counts() const { return counts_; }

    // Test hook: place a count-table entry directly, bypassing the gate, so
    // the flush path can be exercised on states the gate would have already
    // acted on.
    void SeedCountForTest(NodeId requester, std::uint32_t count,
                          SimTime expires_at) {
        counts_[requester] = RreqCountEntry{count, expires_at};
    }

  private:
    NodeId self_;
    NdtParams params_;
    std::set<NodeId> broody_;
    std::map<NodeId, RreqCountEntry> counts_;
};

} // namespace ndtsim

#endif
