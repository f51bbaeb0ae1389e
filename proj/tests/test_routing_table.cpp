// Routing-table freshness: the lexicographic (dest_seq, -hop_count) install
// rule, the valid-beats-invalid tiebreak that lets rediscovery overwrite
// broken routes, and monotone sequence numbers under invalidation.

#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>

#include "ndtsim/routing_table.hpp"

using namespace ndtsim;

namespace {

RouteEntry Route(std::uint32_t dest, NodeId next_hop, std::uint32_t hops,
                 std::optional<SeqNo> seq, double expires_at,
                 bool valid = true) {
    RouteEntry e;
    e.dest = Address{dest};
    e.next_hop = next_hop;
    e.hop_count = hops;
    e.dest_seq = seq;
    e.expires_at = SimTime{expires_at};
    e.valid = valid;
    return e;
}

} // namespace

TEST_CASE("the first route for a destination installs unconditionally",
          "[routing_table]") {
    RoutingTable table;
    const SimTime now{0.0};
    REQUIRE(table.InstallIfBetter(Route(5, 2, 3, 7, 10.0), now));
    const RouteEntry* e = table.Lookup(Address{5}, now);
    REQUIRE(e != nullptr);
    REQUIRE(e->next_hop == 2);
    REQUIRE(e->hop_count == 3);
    REQUIRE(e->dest_seq == 7);
}

TEST_CASE("a higher destination sequence wins even with a worse hop count",
          "[routing_table]") {
    RoutingTable table;
    const SimTime now{0.0};
    table.InstallIfBetter(Route(5, 2, 1, 7, 10.0), now);
    REQUIRE(table.InstallIfBetter(Route(5, 9, 6, 8, 10.0), now));
    REQUIRE(table.Lookup(Address{5}, now)->next_hop == 9);
    REQUIRE(table.Lookup(Address{5}, now)->hop_count == 6);
}

TEST_CASE("a lower destination sequence never replaces the stored route",
          "[routing_table]") {
    RoutingTable table;
    const SimTime now{0.0};
    table.InstallIfBetter(Route(5, 2, 6, 8, 10.0), now);
    REQUIRE_FALSE(table.InstallIfBetter(Route(5, 9, 1, 7, 10.0), now));
    REQUIRE(table.Lookup(Address{5}, now)->next_hop == 2);
}

TEST_CASE("equal sequence prefers fewer hops in both arrival orders",
          "[routing_table]") {
    const SimTime now{0.0};
    SECTION("shorter arrives second") {
        RoutingTable table;
        table.InstallIfBetter(Route(5, 2, 4, 7, 10.0), now);
        REQUIRE(table.InstallIfBetter(Route(5, 9, 2, 7, 10.0), now));
        REQUIRE(table.Lookup(Address{5}, now)->hop_count == 2);
    }
    SECTION("shorter arrives first") {
        RoutingTable table;
        table.InstallIfBetter(Route(5, 9, 2, 7, 10.0), now);
        REQUIRE_FALSE(table.InstallIfBetter(Route(5, 2, 4, 7, 10.0), now));
        REQUIRE(table.Lookup(Address{5}, now)->hop_count == 2);
    }
}

TEST_CASE("an unknown sequence ranks below every known one", "[routing_table]") {
    RoutingTable table;
    const SimTime now{0.0};
    table.InstallIfBetter(Route(5, 2, 3, std::nullopt, 10.0), now);
    // Any learned sequence beats "never heard".
    REQUIRE(table.InstallIfBetter(Route(5, 9, 8, 0, 10.0), now));
    // ... and "never heard" cannot displace it again.
    REQUIRE_FALSE(table.InstallIfBetter(Route(5, 2, 1, std::nullopt, 10.0), now));
    REQUIRE(table.Lookup(Address{5}, now)->next_hop == 9);
}

TEST_CASE("a valid route replaces a dead one at equal freshness",
          "[routing_table]") {
    RoutingTable table;
    const SimTime now{0.0};
    table.InstallIfBetter(Route(5, 2, 3, 5, 10.0), now);
    REQUIRE(table.Invalidate(Address{5}, now)); // bumps stored seq to 6
    REQUIRE(table.Lookup(Address{5}, now) == nullptr);
    REQUIRE(table.Peek(Address{5})->dest_seq == 6);

    // Rediscovery answering with the bumped sequence revives the entry even
    // with a longer path; the stale pre-bump sequence cannot.
    REQUIRE_FALSE(table.InstallIfBetter(Route(5, 9, 9, 5, 20.0), now));
    REQUIRE(table.Lookup(Address{5}, now) == nullptr);
    REQUIRE(table.InstallIfBetter(Route(5, 9, 9, 6, 20.0), now));
    REQUIRE(table.Lookup(Address{5}, now) != nullptr);
    REQUIRE(table.Lookup(Address{5}, now)->next_hop == 9);
}

TEST_CASE("an expired entry yields to a valid candidate at equal freshness",
          "[routing_table]") {
    RoutingTable table;
    table.InstallIfBetter(Route(5, 2, 2, 7, 1.0), SimTime{0.0});
    const SimTime later{5.0}; // stored entry now expired
    REQUIRE(table.Lookup(Address{5}, later) == nullptr);
    REQUIRE(table.InstallIfBetter(Route(5, 9, 4, 7, 15.0), later));
    REQUIRE(table.Lookup(Address{5}, later)->next_hop == 9);
}

TEST_CASE("lookup treats the expiry instant as already expired",
          "[routing_table]") {
    RoutingTable table;
    table.InstallIfBetter(Route(5, 2, 2, 7, 10.0), SimTime{0.0});
    REQUIRE(table.Lookup(Address{5}, SimTime{9.999}) != nullptr);
    REQUIRE(table.Lookup(Address{5}, SimTime{10.0}) == nullptr);
    REQUIRE(table.Peek(Address{5}) != nullptr); // Peek ignores expiry
}

TEST_CASE("re-learning the same route only lengthens its life",
          "[routing_table]") {
    RoutingTable table;
    const SimTime now{0.0};
    table.InstallIfBetter(Route(5, 2, 3, 7, 10.0), now);
    // Identical route, longer lifetime: no "change", but expiry advances.
    REQUIRE_FALSE(table.InstallIfBetter(Route(5, 2, 3, 7, 25.0), now));
    REQUIRE(table.Peek(Address{5})->expires_at == SimTime{25.0});
    // Identical route, shorter lifetime: expiry never regresses.
    REQUIRE_FALSE(table.InstallIfBetter(Route(5, 2, 3, 7, 12.0), now));
    REQUIRE(table.Peek(Address{5})->expires_at == SimTime{25.0});
}

TEST_CASE("Extend lengthens a valid entry but never shortens it",
          "[routing_table]") {
    RoutingTable table;
    const SimTime now{0.0};
    table.InstallIfBetter(Route(5, 2, 3, 7, 10.0), now);
    table.Extend(Address{5}, SimTime{30.0});
    REQUIRE(table.Peek(Address{5})->expires_at == SimTime{30.0});
    table.Extend(Address{5}, SimTime{20.0});
    REQUIRE(table.Peek(Address{5})->expires_at == SimTime{30.0});

    table.Invalidate(Address{5}, now);
    table.Extend(Address{5}, SimTime{90.0}); // dead routes don't extend
    REQUIRE(table.Peek(Address{5})->expires_at == SimTime{30.0});
}

TEST_CASE("InvalidateWithSeq only ever raises the stored sequence",
          "[routing_table]") {
    RoutingTable table;
    const SimTime now{0.0};
    table.InstallIfBetter(Route(5, 2, 3, 7, 10.0), now);
    REQUIRE(table.InvalidateWithSeq(Address{5}, 12, now));
    REQUIRE(table.Peek(Address{5})->dest_seq == 12);
    REQUIRE_FALSE(table.Peek(Address{5})->valid);
    // A staler report cannot roll the sequence back.
    table.InvalidateWithSeq(Address{5}, 3, now);
    REQUIRE(table.Peek(Address{5})->dest_seq == 12);
    REQUIRE_FALSE(table.InvalidateWithSeq(Address{9}, 1, now)); // unknown dest
}

TEST_CASE("InvalidateVia reports broken destinations ascending with bumped "
          "sequences",
          "[routing_table]") {
    RoutingTable table;
    const SimTime now{0.0};
    table.InstallIfBetter(Route(7, 9, 2, 4, 10.0), now);
    table.InstallIfBetter(Route(1, 9, 3, 6, 10.0), now);
    table.InstallIfBetter(Route(3, 9, 1, 2, 10.0), now);
    table.InstallIfBetter(Route(4, 2, 1, 8, 10.0), now); // different hop

    auto affected = table.InvalidateVia(9, now);
    REQUIRE(affected ==
            std::vector<std::pair<Address, SeqNo>>{
                {Address{1}, 7}, {Address{3}, 3}, {Address{7}, 5}});
    REQUIRE(table.Lookup(Address{1}, now) == nullptr);
    REQUIRE(table.Lookup(Address{4}, now) != nullptr); // untouched

    // Nothing left to invalidate on a second break through the same hop.
    REQUIRE(table.InvalidateVia(9, now).empty());
}

TEST_CASE("stored sequence numbers never decrease under random churn",
          "[routing_table][property]") {
    RoutingTable table;
    std::mt19937 gen(13);
    std::uniform_int_distribution<int> op(0, 3);
    std::uniform_int_distribution<int> seq(0, 40);
    std::uniform_int_distribution<std::uint32_t> hop(1, 8);

    std::optional<SeqNo> watermark; // highest seq ever stored for dest 5
    for (int step = 0; step < 2000; ++step) {
        const SimTime now{static_cast<double>(step) * 0.01};
        switch (op(gen)) {
        case 0:
        case 1:
            table.InstallIfBetter(
                Route(5, hop(gen), hop(gen), seq(gen), now.Seconds() + 10.0),
                now);
            break;
        case 2:
            table.Invalidate(Address{5}, now);
            break;
        default:
            table.InvalidateWithSeq(Address{5}, seq(gen), now);
            break;
        }
        const RouteEntry* e = table.Peek(Address{5});
        if (e != nullptr && e->dest_seq.has_value()) {
            if (watermark.has_value()) {
                REQUIRE(*e->dest_seq >= *watermark);
            }
            watermark = *e->dest_seq;
        }
    }
}
