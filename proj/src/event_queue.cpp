#include "ndtsim/event_queue.hpp"

#include <algorithm>

#include "ndtsim/error.hpp"

namespace ndtsim {

EventHandle EventQueue::Schedule(Event ev) {
    if (ev.fire_at < now_) {
        throw SimError(ErrorCode::PastEvent,
                       "schedule at t=" + std::to_string(ev.fire_at.Seconds()) +
                           " before now=" + std::to_string(now_.Seconds()));
    }
    std::uint64_t seq = next_seq_++;
    heap_.push_back(Slot{ev.fire_at, seq, std::move(ev)});
    std::push_heap(heap_.begin(), heap_.end(), Later);
    live_.insert(seq);
    return EventHandle{seq};
}

bool EventQueue::Cancel(EventHandle h) {
    if (live_.erase(h.seq) == 0) return false;
    cancelled_.insert(h.seq);
    return true;
}

std::size_t EventQueue::RunUntil(SimTime t_end) {
    if (t_end < now_) {
        throw SimError(ErrorCode::PastEvent, "run_until into the past");
    }
    std::size_t processed = 0;
    while (!heap_.empty() && !(t_end < heap_.front().fire_at)) {
        std::pop_heap(heap_.begin(), heap_.end(), Later);
        Slot slot = std::move(heap_.back());
        heap_.pop_back();
        if (cancelled_.erase(slot.seq) != 0) continue; // inert
        live_.erase(slot.seq);
        now_ = slot.fire_at;
        if (dispatch_) dispatch_(slot.ev);
        ++processed;
    }
    now_ = t_end;
    return processed;
}

} // namespace ndtsim
