#ifndef NDTSIM_EVENT_QUEUE_HPP
#define NDTSIM_EVENT_QUEUE_HPP

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "ndtsim/event.hpp"
#include "ndtsim/sim_time.hpp"

namespace ndtsim {

struct EventHandle {
    std::uint64_t seq{0};
};

// Deterministic discrete-event scheduler. Events fire in (fire_at, insertion
// sequence) order, so simultaneous events always dispatch in the order they
// were scheduled and replays of a scenario are bit-identical.
//
// Single-threaded by design; a whole scenario owns one queue and may be moved
// to another execution context as a unit.
class EventQueue {
public:
    using DispatchFn = std::function<void(const Event&)>;

    void SetDispatcher(DispatchFn fn) { dispatch_ = std::move(fn); }

    SimTime Now() const { return now_; }
    std::size_t PendingCount() const { return live_.size(); }

    // Throws SimError(PastEvent) if ev.fire_at < Now(). Scheduling exactly at
    // Now() is allowed and fires within the current/next run.
    EventHandle Schedule(Event ev);

    // True if the event had not yet fired and is now inert; false after it
    // fired or on a second cancel.
    bool Cancel(EventHandle h);

    // Processes every event with fire_at <= t_end in dispatch order, advances
    // Now() to t_end, and returns the number of events dispatched. Events
    // scheduled during dispatching are processed in the same call when they
    // fall inside the window.
    std::size_t RunUntil(SimTime t_end);

private:
    struct Slot {
        SimTime fire_at;
        std::uint64_t seq;
        Event ev;
    };

    // Min-heap on (fire_at, seq) via std::push_heap/pop_heap with a
    // greater-than comparison.
    static bool Later(const Slot& a, const Slot& b) {
        if (a.fire_at != b.fire_at) return b.fire_at < a.fire_at;
        return a.seq > b.seq;
    }

    SimTime now_{};
    std::uint64_t next_seq_{1};
    DispatchFn dispatch_;
    std::vector<Slot> heap_;
    std::unordered_set<std::uint64_t> live_;
    std::unordered_set<std::uint64_t> cancelled_;
};

} // namespace ndtsim

#endif
