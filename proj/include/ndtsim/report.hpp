#ifndef NDTSIM_REPORT_HPP
#define NDTSIM_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ndtsim/config.hpp"
#include "ndtsim/metrics.hpp"

namespace ndtsim {

// One CSV record: a single run, or the per-cell mean (seed == "mean").
struct ResultRow {
    std::string protocol;
    double pause_time{0.0};
    std::uint32_t malicious{0};
    std::string seed;
    double data_sent{0.0};
    double data_delivered{0.0};
    std::optional<double> pdf;             // empty -> "nan"
    double at_kbps{0.0};
    double routing_tx{0.0};
    std::optional<double> nrl;             // empty -> "inf"
    std::optional<double> first_detection; // empty -> "inf"
    double broody_final_size{0.0};
};

// Pinned column order; consumers may rely on it.
inline constexpr const char* kCsvHeader =
    "protocol,pause_time,malicious,seed,data_sent,data_delivered,pdf,"
    "at_kbps,routing_tx,nrl,first_detection_time,broody_final_size";

ResultRow make_row(const ScenarioConfig& cfg, const MetricsReport& report);

// Arithmetic mean of a non-empty group from one sweep cell; seed becomes
// "mean". An undefined nrl or detection time in any member makes the mean
// undefined (one run that delivered nothing has infinite load per packet).
ResultRow mean_row(const std::vector<ResultRow>& group);

std::string to_csv(const ResultRow& row);

// Parses rows written by to_csv (header required). Throws
// SimError(ConfigInvalid) on malformed input.
std::vector<ResultRow> parse_results_csv(std::istream& in);

// Pivots sweep rows into one per-metric series: pause_time on the x-axis,
// one column per (protocol, malicious) combination holding the across-seed
// mean. metric is "pdf", "at", or "nrl". Mean rows in the input are skipped
// and recomputed from the seed rows.
std::string pivot_series(const std::vector<ResultRow>& rows,
                         const std::string& metric);

} // namespace ndtsim

#endif
