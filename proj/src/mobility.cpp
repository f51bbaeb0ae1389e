#include "ndtsim/mobility.hpp"

#include "ndtsim/error.hpp"

namespace ndtsim {

Position position_on_leg(const WaypointLeg& leg, SimTime t) {
    if (t <= leg.depart_at) return leg.start;
    if (leg.arrive_at <= t) return leg.dest;
    double travel = leg.arrive_at - leg.depart_at;
    double frac = (t - leg.depart_at) / travel;
    return Position{leg.start.x + (leg.dest.x - leg.start.x) * frac,
                    leg.start.y + (leg.dest.y - leg.start.y) * frac};
}

Mobility::Mobility(const ScenarioConfig& cfg, const SeededRng& master)
    : width_(cfg.terrain_width_m),
      height_(cfg.terrain_height_m),
      speed_min_(cfg.speed_min_mps),
      speed_max_(cfg.speed_max_mps),
      pause_s_(cfg.pause_time_s) {
    SeededRng stream = master.Fork(rng_stream::kMobility);
    node_rngs_.reserve(cfg.nodes);
    legs_.reserve(cfg.nodes);
    for (NodeId n = 0; n < cfg.nodes; ++n) {
        node_rngs_.push_back(stream.Fork(n));
    }
    for (NodeId n = 0; n < cfg.nodes; ++n) {
        Position initial;
        if (!cfg.initial_positions.empty()) {
            initial = cfg.initial_positions[n];
        } else {
            initial = Position{node_rngs_[n].UniformDouble(0.0, width_),
                               node_rngs_[n].UniformDouble(0.0, height_)};
        }
        // The node dwells at its initial position for one pause interval,
        // then departs on its first leg.
        legs_.push_back(DrawLeg(n, initial, SimTime{pause_s_}));
    }
}

WaypointLeg Mobility::DrawLeg(NodeId node, Position from, SimTime depart_at) {
    SeededRng& rng = node_rngs_[node];
    WaypointLeg leg;
    leg.start = from;
    leg.dest = Position{rng.UniformDouble(0.0, width_),
                        rng.UniformDouble(0.0, height_)};
    leg.speed_mps = speed_min_ == speed_max_
                        ? speed_min_
                        : rng.UniformDouble(speed_min_, speed_max_);
    leg.depart_at = depart_at;
    leg.arrive_at = depart_at + Distance(leg.start, leg.dest) / leg.speed_mps;
    return leg;
}

void Mobility::Init(EventQueue& queue) {
    for (NodeId n = 0; n < NodeCount(); ++n) {
        queue.Schedule(Event{legs_[n].arrive_at + pause_s_, n, MobilityUpdate{}});
    }
}

Position Mobility::PositionAt(NodeId node, SimTime t) const {
    CheckNode(node);
    return position_on_leg(legs_[node], t);
}

void Mobility::OnWaypointReached(NodeId node, EventQueue& queue) {
    CheckNode(node);
    SimTime depart = queue.Now();
    legs_[node] = DrawLeg(node, legs_[node].dest, depart);
    queue.Schedule(Event{legs_[node].arrive_at + pause_s_, node, MobilityUpdate{}});
}

const WaypointLeg& Mobility::CurrentLeg(NodeId node) const {
    CheckNode(node);
    return legs_[node];
}

void Mobility::CheckNode(NodeId node) const {
    if (node >= legs_.size()) {
        throw SimError(ErrorCode::UnknownNode,
                       "node " + std::to_string(node) + " outside scenario");
    }
}

} // namespace ndtsim
