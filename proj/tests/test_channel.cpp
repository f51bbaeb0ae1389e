// Unit-disk channel: range boundary, neighbor enumeration, delivery
// scheduling, loss thinning, and the routing-transmission accounting that
// feeds NRL.

#include <catch2/catch_amalgamated.hpp>

#include <variant>
#include <vector>

#include "ndtsim/channel.hpp"

using namespace ndtsim;

namespace {

// Four parked nodes on a line. Distances: 0-1 = 200 (linked), 1-2 = 250
// (linked, exactly at the radius), 0-2 = 450 (not linked), 3 isolated.
ScenarioConfig LineConfig() {
    ScenarioConfig cfg;
    cfg.nodes = 4;
    cfg.pause_time_s = 10000.0; // parked for the whole test
    cfg.initial_positions = {
        {0.0, 0.0}, {200.0, 0.0}, {450.0, 0.0}, {450.0, 900.0}};
    return cfg;
}

struct ChannelHarness {
    ScenarioConfig cfg;
    MetricsReport metrics;
    EventQueue queue;
    Mobility mob;
    Channel chan;

    explicit ChannelHarness(ScenarioConfig config)
        : cfg(std::move(config)),
          mob(cfg, SeededRng(3)),
          chan(cfg.channel, mob, queue, SeededRng(4), metrics) {}
};

} // namespace

TEST_CASE("the range boundary is inclusive at exactly the radius",
          "[channel]") {
    ChannelHarness h(LineConfig());
    const SimTime t{0.0};
    REQUIRE(h.chan.InRange(0, 1, t));
    REQUIRE(h.chan.InRange(1, 2, t)); // distance == 250.0 == range
    REQUIRE_FALSE(h.chan.InRange(0, 2, t));
    REQUIRE_FALSE(h.chan.InRange(0, 3, t));
}

TEST_CASE("neighbor listing matches a brute-force scan, ascending",
          "[channel]") {
    ChannelHarness h(LineConfig());
    const SimTime t{0.0};

    for (NodeId n = 0; n < h.cfg.nodes; ++n) {
        std::vector<NodeId> expected;
        for (NodeId other = 0; other < h.cfg.nodes; ++other) {
            if (other != n &&
                Distance(h.mob.PositionAt(n, t), h.mob.PositionAt(other, t)) <=
                    h.cfg.channel.range_m) {
                expected.push_back(other);
            }
        }
        REQUIRE(h.chan.Neighbors(n, t) == expected);
    }
    REQUIRE(h.chan.Neighbors(1, t) == std::vector<NodeId>{0, 2});
    REQUIRE(h.chan.Neighbors(3, t).empty());
}

TEST_CASE("broadcast schedules one delayed delivery per in-range neighbor",
          "[channel]") {
    ChannelHarness h(LineConfig());
    std::vector<std::pair<NodeId, double>> arrivals;
    h.queue.SetDispatcher([&](const Event& ev) {
        arrivals.emplace_back(ev.target, ev.fire_at.Seconds());
    });

    const HelloPacket hello{1, 0, {}};
    REQUIRE(h.chan.Broadcast(1, hello, SimTime{1.0}) == 2);
    REQUIRE(h.chan.Broadcast(3, hello, SimTime{1.0}) == 0); // empty air

    h.queue.RunUntil(SimTime{2.0});
    REQUIRE(arrivals.size() == 2);
    for (const auto& [target, at] : arrivals) {
        REQUIRE((target == 0 || target == 2));
        REQUIRE_THAT(at, Catch::Matchers::WithinAbs(
                             1.0 + h.cfg.channel.per_hop_delay_s, 1e-12));
    }
}

TEST_CASE("routing transmissions count control sends, not data sends",
          "[channel][metrics]") {
    ChannelHarness h(LineConfig());
    const SimTime t{0.0};
    const DataPacket data{0, 0, 1, 0, 512, t};
    const HelloPacket hello{1, 0, {}};
    const RrepPacket rrep{Address{0}, 1, 2, 0, 10.0};

    h.chan.Broadcast(1, hello, t);
    REQUIRE(h.metrics.routing_tx == 1);

    // Control into empty air still transmitted, still counted.
    h.chan.Broadcast(3, hello, t);
    REQUIRE(h.metrics.routing_tx == 2);

    h.chan.Broadcast(1, data, t);
    REQUIRE(h.metrics.routing_tx == 2); // data never counts

    REQUIRE(h.chan.Unicast(1, 0, rrep, t) == DeliveryOutcome::Delivered);
    REQUIRE(h.metrics.routing_tx == 3);

    // A failed control unicast was still a transmission.
    REQUIRE(h.chan.Unicast(0, 2, rrep, t) == DeliveryOutcome::LinkBroken);
    REQUIRE(h.metrics.routing_tx == 4);

    REQUIRE(h.chan.Unicast(1, 0, data, t) == DeliveryOutcome::Delivered);
    REQUIRE(h.chan.Unicast(0, 2, data, t) == DeliveryOutcome::LinkBroken);
    REQUIRE(h.metrics.routing_tx == 4);
}

TEST_CASE("unicast is reliable within range and refuses beyond it",
          "[channel]") {
    ScenarioConfig cfg = LineConfig();
    cfg.channel.loss_rate = 0.9; // loss applies to broadcast only
    ChannelHarness h(cfg);
    const DataPacket data{0, 0, 1, 0, 512, SimTime{0.0}};
    for (int i = 0; i < 100; ++i) {
        REQUIRE(h.chan.Unicast(1, 0, data, SimTime{0.0}) ==
                DeliveryOutcome::Delivered);
    }
    REQUIRE(h.chan.Unicast(0, 2, data, SimTime{0.0}) ==
            DeliveryOutcome::LinkBroken);
}

TEST_CASE("broadcast loss thins deliveries binomially", "[channel][property]") {
    ScenarioConfig cfg = LineConfig();
    cfg.channel.loss_rate = 0.5;
    ChannelHarness h(cfg);

    // Node 1 reaches two neighbors -> 2000 independent Bernoulli(0.5) trials.
    std::size_t scheduled = 0;
    const HelloPacket hello{1, 0, {}};
    for (int i = 0; i < 1000; ++i) {
        scheduled += h.chan.Broadcast(1, hello, SimTime{0.0});
    }
    const double mean = 1000.0;
    const double sigma = std::sqrt(2000.0 * 0.25);
    REQUIRE(std::abs(static_cast<double>(scheduled) - mean) < 3.0 * sigma);
}
