#ifndef NDTSIM_ROUTING_TABLE_HPP
#define NDTSIM_ROUTING_TABLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ndtsim/packet.hpp"
#include "ndtsim/sim_time.hpp"

namespace ndtsim {

struct RouteEntry {
    Address dest{0};
    NodeId next_hop{0};
    std::uint32_t hop_count{0};
    // Empty when the destination's sequence number was never learned. Ranks
    // below every known value in the freshness comparison.
    std::optional<SeqNo> dest_seq;
    SimTime expires_at{};
    bool valid{false};
};

// Per-node forwarding table. At most one entry per destination. Entries are
// replaced only by fresher ones — lexicographic (dest_seq, -hop_count), with
// a valid entry beating an invalid one at equal freshness — so a stored
// dest_seq never decreases and next_hop chains stay loop-free.
class RoutingTable {
  public:
    // Valid, unexpired entry for dest; nullptr otherwise.
    const RouteEntry* Lookup(Address dest, SimTime now) const;

    // Entry regardless of validity/expiry (for seq bookkeeping); nullptr if
    // the destination was never seen.
    const RouteEntry* Peek(Address dest) const;

    // Installs `candidate` if it improves on the stored entry per the rule
    // above; refreshes the expiry instead when it describes the same route.
    // Returns true when the table changed.
    bool InstallIfBetter(const RouteEntry& candidate, SimTime now);

    // Extends a valid entry's lifetime to at least expires_at (route used).
    void Extend(Address dest, SimTime expires_at);

    // Marks the entry invalid and bumps its dest_seq by one (standard
    // break-notification freshness bump). True if a valid entry existed.
    bool Invalidate(Address dest, SimTime now);

    // Invalidate with an externally supplied freshness (from a received
    // RERR); the stored seq only ever moves up.
    bool InvalidateWithSeq(Address dest, SeqNo seq, SimTime now);

    // Invalidates every valid route using next_hop; returns the affected
    // (dest, bumped seq) pairs in ascending dest order, ready for a RERR.
    std::vector<std::pair<Address, SeqNo>> InvalidateVia(NodeId next_hop,
                                                         SimTime now);

    const std::map<Address, RouteEntry>& Entries() const { return entries_; }

  private:
    static bool Fresher(const RouteEntry& candidate, const RouteEntry& current,
                        SimTime now);

    std::map<Address, RouteEntry> entries_;
};

} // namespace ndtsim

#endif
