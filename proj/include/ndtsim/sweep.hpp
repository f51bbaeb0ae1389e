#ifndef NDTSIM_SWEEP_HPP
#define NDTSIM_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "ndtsim/config.hpp"
#include "ndtsim/report.hpp"

namespace ndtsim {

// A batch experiment: the cross product of the four axes applied to a base
// config. Rows come out in protocol -> pause_time -> malicious -> seed
// order, each seed group followed by its mean row, so the table is a pure
// function of this struct.
struct SweepSpec {
    ScenarioConfig base;
    std::vector<Protocol> protocols;
    std::vector<double> pause_times;
    std::vector<std::uint32_t> malicious_counts;
    std::vector<std::uint64_t> seeds;
};

// Throws SimError(Precondition) on an empty axis; propagates ConfigInvalid
// from cell validation.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

} // namespace ndtsim

#endif
