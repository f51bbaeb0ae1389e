#ifndef NDTSIM_MOBILITY_HPP
#define NDTSIM_MOBILITY_HPP

#include <vector>

#include "ndtsim/config.hpp"
#include "ndtsim/event_queue.hpp"
#include "ndtsim/geometry.hpp"
#include "ndtsim/rng.hpp"
#include "ndtsim/sim_time.hpp"

namespace ndtsim {

// One random-waypoint leg: dwell at `start` until depart_at, move to `dest`
// at `speed`, then dwell there for the configured pause before the next leg.
struct WaypointLeg {
    Position start;
    Position dest;
    double speed_mps{1.0};
    SimTime depart_at{};
    SimTime arrive_at{};
};

// Position along a leg at time t: start before departure, linear interpolation
// while moving, destination afterwards (the post-arrival pause).
Position position_on_leg(const WaypointLeg& leg, SimTime t);

// Random-waypoint mobility over the rectangular terrain. Positions are lazy
// (computed on demand from the node's current leg); leg boundaries are
// realized as MobilityUpdate events so there is no fixed-step drift.
//
// Each node draws waypoints from its own forked stream, so leg sequences do
// not depend on event interleaving and are identical across protocol variants
// under a common seed.
class Mobility {
public:
    Mobility(const ScenarioConfig& cfg, const SeededRng& master);

    // Schedules one MobilityUpdate per node at the end of its first dwell.
    void Init(EventQueue& queue);

    // Throws SimError(UnknownNode) for ids outside the scenario.
    Position PositionAt(NodeId node, SimTime t) const;

    // MobilityUpdate handler: the node finished its post-arrival pause; draw
    // the next leg and schedule the following update.
    void OnWaypointReached(NodeId node, EventQueue& queue);

    const WaypointLeg& CurrentLeg(NodeId node) const;
    std::uint32_t NodeCount() const { return static_cast<std::uint32_t>(legs_.size()); }

private:
    WaypointLeg DrawLeg(NodeId node, Position from, SimTime depart_at);
    void CheckNode(NodeId node) const;

    double width_;
    double height_;
    double speed_min_;
    double speed_max_;
    double pause_s_;
    std::vector<SeededRng> node_rngs_;
    std::vector<WaypointLeg> legs_;
};

} // namespace ndtsim

#endif
