// Neighbor Defense Technique state: gate verdicts around the peak, cache
// flushes, lazy count expiry, and hello-alarm blacklist merges.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ndtsim/ndt.hpp"

using namespace ndtsim;

namespace {

NdtParams Defaults() {
    return NdtParams{}; // peak 10, 1 s cache interval, 1 s entry expiry
}

} // namespace

TEST_CASE("the gate flips from pass to drop exactly past the peak", "[ndt]") {
    NdtState ndt(0, Defaults());
    const NodeId flooder = 7;

    // Ten first-hand requests inside one window: all tolerated.
    for (int k = 0; k < 10; ++k) {
        const SimTime t{0.009 * k};
        REQUIRE(ndt.GateRreq(flooder, true, t) == NdtVerdict::PassToAodv);
    }
    REQUIRE(ndt.Counts().at(flooder).count == 10);
    REQUIRE_FALSE(ndt.IsBroody(flooder));

    // The eleventh crosses the strict threshold and blacklists on the spot.
    REQUIRE(ndt.GateRreq(flooder, true, SimTime{0.090}) ==
            NdtVerdict::DropPeakExceeded);
    REQUIRE(ndt.IsBroody(flooder));

    // Everything afterwards is silenced, first-hand or relayed.
    REQUIRE(ndt.GateRreq(flooder, true, SimTime{0.099}) ==
            NdtVerdict::DropBroody);
    REQUIRE(ndt.GateRreq(flooder, false, SimTime{0.108}) ==
            NdtVerdict::DropBroody);
}

TEST_CASE("only first-hand requests are counted", "[ndt]") {
    NdtState ndt(0, Defaults());

    // Relayed copies of a distant originator's flood pass uncounted no
    // matter how many arrive.
    for (int k = 0; k < 50; ++k) {
        REQUIRE(ndt.GateRreq(9, false, SimTime{0.001 * k}) ==
                NdtVerdict::PassToAodv);
    }
    REQUIRE(ndt.Counts().count(9) == 0);

    // A node's own flood echoing back is never self-incriminating.
    for (int k = 0; k < 50; ++k) {
        REQUIRE(ndt.GateRreq(0, true, SimTime{0.001 * k}) ==
                NdtVerdict::PassToAodv);
    }
    REQUIRE_FALSE(ndt.IsBroody(0));
    REQUIRE(ndt.Counts().count(0) == 0);
}

TEST_CASE("count windows expire lazily", "[ndt]") {
    NdtState ndt(0, Defaults());
    ndt.GateRreq(3, true, SimTime{0.0}); // count 1, expires at 1.0

    // Before the expiry instant the window keeps accumulating...
    ndt.GateRreq(3, true, SimTime{0.9});
    REQUIRE(ndt.Counts().at(3).count == 2);

    // ...and at/after it the next request starts a fresh window.
    ndt.GateRreq(3, true, SimTime{1.9});
    REQUIRE(ndt.Counts().at(3).count == 1);
}

TEST_CASE("cache flush clears the table and keeps modest requesters clean",
          "[ndt]") {
    NdtState ndt(0, Defaults());
    // {A:3, B:7} - both well under the peak.
    for (int k = 0; k < 3; ++k) {
        ndt.GateRreq(1, true, SimTime{0.1 * k});
    }
    for (int k = 0; k < 7; ++k) {
        ndt.GateRreq(2, true, SimTime{0.1 * k});
    }

    REQUIRE(ndt.CacheFlush(SimTime{0.9}).empty());
    REQUIRE(ndt.Broody().empty());
    REQUIRE(ndt.Counts().empty());

    // After the flush the same requester starts over at one.
    ndt.GateRreq(1, true, SimTime{0.95});
    REQUIRE(ndt.Counts().at(1).count == 1);
}

TEST_CASE("cache flush blacklists an over-peak entry the gate never saw",
          "[ndt]") {
    NdtState ndt(0, Defaults());
    ndt.SeedCountForTest(4, 12, SimTime{1.5}); // {A:12}, unexpired
    REQUIRE(ndt.CacheFlush(SimTime{1.0}) == std::vector<NodeId>{4});
    REQUIRE(ndt.IsBroody(4));
    REQUIRE(ndt.Counts().empty());
}

TEST_CASE("cache flush ignores expired windows and never blames itself",
          "[ndt]") {
    NdtState ndt(0, Defaults());
    ndt.SeedCountForTest(4, 12, SimTime{0.5}); // stale window
    ndt.SeedCountForTest(0, 99, SimTime{5.0}); // "self" over the peak
    REQUIRE(ndt.CacheFlush(SimTime{1.0}).empty());
    REQUIRE(ndt.Broody().empty());
}

TEST_CASE("flush reports an already-broody requester only the first time",
          "[ndt]") {
    NdtState ndt(0, Defaults());
    ndt.SeedCountForTest(4, 12, SimTime{1.5});
    REQUIRE(ndt.CacheFlush(SimTime{1.0}) == std::vector<NodeId>{4});
    ndt.SeedCountForTest(4, 12, SimTime{2.5});
    REQUIRE(ndt.CacheFlush(SimTime{2.0}).empty()); // known flooder, no re-alarm
    REQUIRE(ndt.IsBroody(4));
}

TEST_CASE("outgoing hello alarms list the broody set ascending", "[ndt]") {
    NdtState ndt(0, Defaults());
    REQUIRE(ndt.HatOutgoing().empty());
    // Merge in deliberately unsorted order from a clean peer.
    ndt.HatIncoming({7, 2, 5}, 1);
    REQUIRE(ndt.HatOutgoing() == std::vector<NodeId>{2, 5, 7});
}

TEST_CASE("incoming hello alarms merge idempotently and spare the receiver",
          "[ndt]") {
    NdtState ndt(3, Defaults());
    REQUIRE(ndt.HatIncoming({8, 3, 9}, 1) == std::vector<NodeId>{8, 9});
    REQUIRE_FALSE(ndt.IsBroody(3)); // never blacklists itself
    // Replaying the same payload adds nothing.
    REQUIRE(ndt.HatIncoming({8, 9}, 1).empty());
    REQUIRE(ndt.Broody() == std::set<NodeId>{8, 9});
}

TEST_CASE("alarms from blacklisted senders are ignored", "[ndt]") {
    NdtState ndt(0, Defaults());
    ndt.HatIncoming({9}, 1); // learn that 9 is broody from a clean peer
    REQUIRE(ndt.IsBroody(9));
    // 9 now tries to frame node 4; the payload is discarded wholesale.
    REQUIRE(ndt.HatIncoming({4}, 9).empty());
    REQUIRE_FALSE(ndt.IsBroody(4));
}

TEST_CASE("the blacklist only ever grows", "[ndt][property]") {
    NdtState ndt(0, Defaults());
    std::size_t prev = 0;
    for (int step = 0; step < 400; ++step) {
        const SimTime now{0.05 * step};
        const NodeId who = 1 + static_cast<NodeId>(step % 5);
        ndt.GateRreq(who, true, now);
        if (step % 23 == 0) {
            ndt.CacheFlush(now);
        }
        if (step % 31 == 0) {
            ndt.HatIncoming({static_cast<NodeId>(step % 7)}, 6);
        }
        REQUIRE(ndt.Broody().size() >= prev);
        prev = ndt.Broody().size();
    }
}
