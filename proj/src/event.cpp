#include "ndtsim/event.hpp"

namespace ndtsim {

namespace {

const char* TimerName(TimerId::Kind kind) {
    switch (kind) {
        case TimerId::Kind::Hello: return "hello";
        case TimerId::Kind::Cache: return "cache";
        case TimerId::Kind::Flood: return "flood";
        case TimerId::Kind::RreqRetry: return "rreq_retry";
    }
    return "?";
}

struct NameVisitor {
    const char* operator()(const PacketDelivery&) const { return "deliver"; }
    const char* operator()(const TimerFire&) const { return "timer"; }
    const char* operator()(const MobilityUpdate&) const { return "mobility"; }
    const char* operator()(const TrafficTick&) const { return "traffic"; }
};

struct DetailVisitor {
    std::string operator()(const PacketDelivery& d) const {
        return std::string(kind_name(d.pkt)) + " " + packet_detail(d.pkt) +
               " from=" + std::to_string(d.from);
    }
    std::string operator()(const TimerFire& t) const {
        std::string out = TimerName(t.timer.kind);
        if (t.timer.kind == TimerId::Kind::RreqRetry) {
            out += " dest=" + std::to_string(t.timer.arg);
        }
        return out;
    }
    std::string operator()(const MobilityUpdate&) const { return "waypoint"; }
    std::string operator()(const TrafficTick& t) const {
        return "flow=" + std::to_string(t.flow_id);
    }
};

} // namespace

const char* event_kind_name(const Event& ev) {
    return std::visit(NameVisitor{}, ev.kind);
}

std::string event_detail(const Event& ev) {
    return std::visit(DetailVisitor{}, ev.kind);
}

} // namespace ndtsim
