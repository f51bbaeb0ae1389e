#include "ndtsim/metrics.hpp"

#include "ndtsim/error.hpp"

namespace ndtsim {

std::optional<double> compute_pdf(std::uint64_t sent, std::uint64_t delivered) {
    if (delivered > sent) {
        throw SimError(ErrorCode::InvalidCounts,
                       "delivered count exceeds sent count");
    }
    if (sent == 0) {
        return std::nullopt;
    }
    return static_cast<double>(delivered) / static_cast<double>(sent);
}

double compute_at(std::uint64_t delivered_bytes, double duration_s) {
    if (!(duration_s > 0.0)) {
        throw SimError(ErrorCode::Precondition,
                       "throughput requires a positive duration");
    }
    return static_cast<double>(delivered_bytes) * 8.0 / duration_s / 1000.0;
}

std::optional<double> compute_nrl(std::uint64_t routing_tx, std::uint64_t delivered) {
    if (delivered == 0) {
        return std::nullopt;
    }
    return static_cast<double>(routing_tx) / static_cast<double>(delivered);
}

} // namespace ndtsim
