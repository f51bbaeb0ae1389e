#ifndef NDTSIM_ERROR_HPP
#define NDTSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ndtsim {

enum class ErrorCode {
    PastEvent,         // scheduling before the current simulated time
    UnknownNode,       // node id outside the scenario
    ConfigInvalid,     // scenario configuration failed validation
    InsufficientNodes, // not enough legitimate nodes for the workload
    InvalidCounts,     // metric counters violate delivered <= sent
    Precondition,      // other violated call precondition
};

class SimError : public std::runtime_error {
public:
    SimError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace ndtsim

#endif
