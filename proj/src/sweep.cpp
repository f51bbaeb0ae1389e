#include "ndtsim/sweep.hpp"

#include "ndtsim/error.hpp"
#include "ndtsim/scenario.hpp"

namespace ndtsim {

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
    if (spec.protocols.empty() || spec.pause_times.empty() ||
        spec.malicious_counts.empty() || spec.seeds.empty()) {
        throw SimError(ErrorCode::Precondition,
                       "sweep: every axis needs at least one value");
    }
    std::vector<ResultRow> rows;
    for (Protocol protocol : spec.protocols) {
        for (double pause : spec.pause_times) {
            for (std::uint32_t malicious : spec.malicious_counts) {
                std::vector<ResultRow> group;
                group.reserve(spec.seeds.size());
                for (std::uint64_t seed : spec.seeds) {
                    ScenarioConfig cfg = spec.base;
                    cfg.protocol = protocol;
                    cfg.pause_time_s = pause;
                    cfg.malicious = malicious;
                    cfg.seed = seed;
                    Scenario scenario(cfg);
                    group.push_back(make_row(cfg, scenario.Run()));
                }
                rows.insert(rows.end(), group.begin(), group.end());
                rows.push_back(mean_row(group));
            }
        }
    }
    return rows;
}

} // namespace ndtsim
