// Flooding adversary behavior: fake-request cadence, void destinations,
// attack windows, and the end-to-end contrast between an undefended and a
// defended network under the same flood.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ndtsim/scenario.hpp"

using namespace ndtsim;

namespace {

// A quiet network with one attacker: no data flows, parked nodes, so the
// only scheduled activity is hellos plus the flood itself.
ScenarioConfig QuietAttackConfig() {
    ScenarioConfig cfg;
    cfg.nodes = 25;
    cfg.duration_s = 10.0;
    cfg.connections = 0;
    cfg.malicious = 1;
    cfg.pause_time_s = 10000.0;
    return cfg;
}

// Five-node line with an attacker parked next to the middle node only:
// 0 - 1 - 2 - 3 - 4 spaced 200 m, attacker 5 within range of node 2 alone.
ScenarioConfig LineAttackConfig(Protocol protocol) {
    ScenarioConfig cfg;
    cfg.protocol = protocol;
    cfg.nodes = 6;
    cfg.duration_s = 20.0;
    cfg.pause_time_s = 10000.0;
    cfg.initial_positions = {{100.0, 500.0}, {300.0, 500.0}, {500.0, 500.0},
                             {700.0, 500.0}, {900.0, 500.0}, {500.0, 700.0}};
    cfg.connections = 1;
    cfg.explicit_flows = {{0, 4}};
    cfg.malicious = 1;
    cfg.malicious_ids = {5};
    return cfg;
}

} // namespace

TEST_CASE("the malicious set defaults to the highest-numbered nodes",
          "[adversary][config]") {
    ScenarioConfig cfg;
    cfg.nodes = 25;

    cfg.malicious = 1;
    REQUIRE(cfg.MaliciousSet() == std::vector<NodeId>{24});

    cfg.malicious = 3;
    REQUIRE(cfg.MaliciousSet() == std::vector<NodeId>{22, 23, 24});
    REQUIRE(cfg.IsMalicious(22));
    REQUIRE_FALSE(cfg.IsMalicious(21));

    // An explicit id list overrides the default.
    cfg.malicious = 1;
    cfg.malicious_ids = {3};
    REQUIRE(cfg.MaliciousSet() == std::vector<NodeId>{3});
    REQUIRE(cfg.IsMalicious(3));
    REQUIRE_FALSE(cfg.IsMalicious(24));
}

TEST_CASE("the flooder mints fake requests at the configured cadence",
          "[adversary]") {
    Scenario scenario(QuietAttackConfig());
    const MetricsReport& report = scenario.Run();

    // Ticks at 0, 0.009, 0.018, ... while t <= 10: floor(10/0.009)+1 floods.
    REQUIRE(report.fake_rreq_originated == 1112);

    // Void destinations exist nowhere, so no reply is ever produced and no
    // legitimate discovery happened to trigger one either.
    REQUIRE(report.rrep_sent == 0);
    REQUIRE(report.rreq_originated == 0);
    REQUIRE(report.data_sent == 0);

    // Every fake request was minted through the attacker's own protocol
    // instance, so its sequence number advanced once per flood.
    REQUIRE(scenario.Node(24).OwnSeq() ==
            static_cast<SeqNo>(report.fake_rreq_originated));
}

TEST_CASE("the attack window honors scripted start and stop times",
          "[adversary]") {
    SECTION("flood stops at the scripted instant") {
        ScenarioConfig cfg = QuietAttackConfig();
        cfg.attacker.stop_at_s = 2.0;
        Scenario scenario(cfg);
        const MetricsReport& report = scenario.Run();
        // floor(2/0.009)+1 ticks land inside [0, 2].
        REQUIRE(report.fake_rreq_originated == 223);
    }

    SECTION("flood begins only at the scripted start") {
        ScenarioConfig cfg = QuietAttackConfig();
        cfg.attacker.start_at_s = 5.0;
        Scenario scenario(cfg);
        const MetricsReport& report = scenario.Run();
        // Ticks at 5 + 0.009k <= 10: floor(5/0.009)+1.
        REQUIRE(report.fake_rreq_originated == 556);
    }
}

TEST_CASE("with no malicious nodes the attacker parameters are inert",
          "[adversary][determinism]") {
    ScenarioConfig base;
    base.nodes = 25;
    base.duration_s = 15.0;
    base.connections = 2;
    base.malicious = 0;
    base.seed = 5;

    ScenarioConfig tweaked = base;
    tweaked.attacker.flood_interval_s = 0.0001; // would be brutal if armed

    Scenario a(base);
    const MetricsReport ra = a.Run();
    Scenario b(tweaked);
    const MetricsReport rb = b.Run();

    REQUIRE(ra.trace_hash == rb.trace_hash);
    REQUIRE(ra.routing_tx == rb.routing_tx);
    REQUIRE(ra.data_sent == rb.data_sent);
    REQUIRE(ra.data_delivered == rb.data_delivered);
    REQUIRE(ra.fake_rreq_originated == 0);
    REQUIRE(rb.fake_rreq_originated == 0);
}

TEST_CASE("a flood chokes undefended discovery but not a defended network",
          "[adversary][ndt][scenario]") {
    Scenario undefended(LineAttackConfig(Protocol::Aodv));
    const MetricsReport plain = undefended.Run();

    Scenario defended(LineAttackConfig(Protocol::NdtAodv));
    const MetricsReport guarded = defended.Run();

    // Same flood on both runs.
    REQUIRE(plain.fake_rreq_originated == guarded.fake_rreq_originated);
    REQUIRE(plain.data_sent == guarded.data_sent);

    // Undefended: fake requests pin every request-tracking slot, so the
    // legitimate discovery can never be processed and the flow starves.
    REQUIRE(plain.rreq_overload_drops > 100);
    REQUIRE(plain.pdf.has_value());
    REQUIRE(plain.pdf.value() <= 0.05);
    REQUIRE(plain.broody_final_size == 0);
    REQUIRE_FALSE(plain.first_detection_time_s.has_value());

    // Defended: the attacker's only neighbor blacklists it at the eleventh
    // first-hand request — one hop delay after the 0.090 s mint.
    REQUIRE(guarded.first_detection_time_s.has_value());
    REQUIRE(guarded.first_detection_time_s.value() <= 0.15);
    REQUIRE(guarded.first_detection_time_s.value() > 0.09);
    REQUIRE(guarded.pdf.value() >= 0.9);
    REQUIRE(guarded.data_delivered > plain.data_delivered);
    REQUIRE(guarded.ndt_drops_broody > 1000); // the flood keeps bouncing off

    // The hello alarm carried the verdict across the whole line...
    REQUIRE(guarded.broody_final_size == 1);
    for (NodeId n = 0; n < 5; ++n) {
        REQUIRE(defended.Broody(n).count(5) == 1);
    }
    // ... while the attacker never blacklists itself.
    REQUIRE(defended.Broody(5).empty());

    // Silencing the flood at its first hop also spares the network the
    // rebroadcast churn the undefended run pays for.
    REQUIRE(guarded.routing_tx < plain.routing_tx);
}
