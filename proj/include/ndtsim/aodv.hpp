#ifndef NDTSIM_AODV_HPP
#define NDTSIM_AODV_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "ndtsim/channel.hpp"
#include "ndtsim/config.hpp"
#include "ndtsim/event_queue.hpp"
#include "ndtsim/metrics.hpp"
#include "ndtsim/ndt.hpp"
#include "ndtsim/packet.hpp"
#include "ndtsim/routing_table.hpp"
#include "ndtsim/sim_time.hpp"

namespace ndtsim {

enum class DiscoveryOutcome { Sent, RateLimited, AlreadyPending };
enum class RreqAction { Rebroadcast, Reply, Drop };
enum class RrepAction { Forward, Consume, Drop };
enum class DataAction { Deliver, Forward, Buffer, DropNoRoute };
enum class AdmitOutcome { Admitted, Dup, Overloaded };

// Bounded per-node memory of recently seen discovery floods, keyed by
// (originator, rreq_id). It serves double duty: duplicate suppression, and
// the node's finite capacity for tracking concurrent discoveries. When every
// slot is pinned by a live flood, new requests cannot be processed at all --
// the resource a mass-request attacker exhausts.
class RreqJournal {
  public:
    RreqJournal(std::size_t capacity, double lifetime_s)
        : capacity_(capacity), lifetime_s_(lifetime_s) {}

    AdmitOutcome SeenAndAdmit(NodeId originator, std::uint32_t rreq_id,
                              SimTime now);
    std::size_t LiveCount(SimTime now) const;

  private:
    struct Slot {
        NodeId originator;
        std::uint32_t rreq_id;
        SimTime expires_at;
    };

    std::size_t capacity_;
    double lifetime_s_;
    std::vector<Slot> slots_;
};

// One node's AODV instance: routing table, sequence number, discovery state,
// hello-based neighbor liveness, data buffering, and (when the scenario runs
// the defended variant) the NDT screen in front of RREQ processing.
//
// All handlers take `now` from the event loop; the node never reads a clock.
class AodvNode {
  public:
    AodvNode(NodeId self, const ScenarioConfig& cfg, Channel& channel,
             EventQueue& queue, MetricsReport& metrics);

    NodeId Id() const { return self_; }

    // --- packet handlers (called on PacketDelivery events) ---
    RreqAction HandleRreq(const RreqPacket& rreq, NodeId prev_hop, SimTime now);
    RrepAction HandleRrep(const RrepPacket& rrep, NodeId prev_hop, SimTime now);
    void HandleRerr(const RerrPacket& rerr, NodeId prev_hop, SimTime now);
    void HandleHello(const HelloPacket& hello, SimTime now);
    // Handles both delivered packets and packets this node originates (the
    // source path buffers and starts discovery instead of dropping).
    DataAction HandleData(const DataPacket& pkt, SimTime now);

    // --- timer handlers ---
    void HelloTick(SimTime now);
    void CacheTick(SimTime now);
    void RreqRetryTick(Address dest, SimTime now);

    // --- discovery / maintenance ---
    DiscoveryOutcome OriginateDiscovery(Address dest, SimTime now);
    void HandleLinkBreak(NodeId next_hop, SimTime now);

    // Sequence-number and rreq-id minting. The adversary mints its fake
    // requests through these so a node's own sequence stays monotone no
    // matter who drives it.
    SeqNo BumpSeq() { return ++own_seq_; }
    SeqNo OwnSeq() const { return own_seq_; }
    std::uint32_t NextRreqId() { return ++next_rreq_id_; }

    bool NdtEnabled() const { return ndt_.has_value(); }
    const NdtState* Ndt() const { return ndt_ ? &*ndt_ : nullptr; }
    const RoutingTable& Routes() const { return table_; }
    RreqJournal& Journal() { return journal_; }
    std::size_t BufferedCount(Address dest) const;
    bool DiscoveryPending(Address dest) const { return pending_.count(dest) != 0; }

    // Test hook: seed a route as if learned from a fresh reply.
    void InstallRouteForTest(const RouteEntry& entry, SimTime now) {
        table_.InstallIfBetter(entry, now);
    }

  private:
    struct PendingDiscovery {
        std::uint32_t sends_left{0}; // initial flood + retries still allowed
        EventHandle retry_timer{};
    };

    RreqPacket MintRreq(Address dest, SimTime now);
    void SendRrepBack(const RrepPacket& rrep, SimTime now);
    void SendRerr(std::vector<std::pair<Address, SeqNo>> unreachable,
                  SimTime now);
    void BufferPacket(const DataPacket& pkt);
    void DrainBuffer(Address dest, SimTime now);
    void ClearPending(Address dest);
    bool RateWindowFull(SimTime now);
    void RecordBroody(NodeId detected, SimTime now);

    NodeId self_;
    Address addr_;
    const ScenarioConfig& cfg_;
    Channel& channel_;
    EventQueue& queue_;
    MetricsReport& metrics_;

    SeqNo own_seq_{0};
    std::uint32_t next_rreq_id_{0};
    RoutingTable table_;
    RreqJournal journal_;
    std::optional<NdtState> ndt_;
    std::deque<double> rate_window_; // own RREQ origination times, trailing 1 s
    std::map<Address, PendingDiscovery> pending_;
    std::map<Address, std::deque<DataPacket>> buffer_;
    std::map<NodeId, SimTime> neighbor_expiry_;
};

} // namespace ndtsim

#endif
