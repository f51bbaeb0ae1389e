#include "ndtsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "ndtsim/error.hpp"

namespace ndtsim {

namespace {

// Counts and axis values: integer form when integral (the common case),
// fixed six decimals otherwise (means).
std::string FormatNumber(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return "inf";
    }
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string FormatRatio(std::optional<double> v, const char* undefined_token) {
    if (!v.has_value()) {
        return undefined_token;
    }
    if (std::isnan(*v)) {
        return "nan";
    }
    if (std::isinf(*v)) {
        return "inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", *v);
    return buf;
}

double ParseField(const std::string& field, const char* what) {
    if (field == "nan") {
        return std::nan("");
    }
    if (field == "inf") {
        return INFINITY;
    }
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(field, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != field.size() || field.empty()) {
        throw SimError(ErrorCode::ConfigInvalid,
                       std::string(what) + ": bad numeric field '" + field +
                           "'");
    }
    return out;
}

std::optional<double> AsOptional(double v) {
    if (std::isnan(v) || std::isinf(v)) {
        return std::nullopt;
    }
    return v;
}

} // namespace

ResultRow make_row(const ScenarioConfig& cfg, const MetricsReport& report) {
    ResultRow row;
    row.protocol = protocol_name(cfg.protocol);
    row.pause_time = cfg.pause_time_s;
    row.malicious = cfg.malicious;
    row.seed = std::to_string(cfg.seed);
    row.data_sent = static_cast<double>(report.data_sent);
    row.data_delivered = static_cast<double>(report.data_delivered);
    row.pdf = report.pdf;
    row.at_kbps = report.avg_throughput_kbps;
    row.routing_tx = static_cast<double>(report.routing_tx);
    row.nrl = report.nrl;
    row.first_detection = report.first_detection_time_s;
    row.broody_final_size = static_cast<double>(report.broody_final_size);
    return row;
}

ResultRow mean_row(const std::vector<ResultRow>& group) {
    if (group.empty()) {
        throw SimError(ErrorCode::Precondition,
                       "mean_row needs a non-empty group");
    }
    const double n = static_cast<double>(group.size());
    ResultRow mean = group.front();
    mean.seed = "mean";
    mean.data_sent = 0.0;
    mean.data_delivered = 0.0;
    mean.at_kbps = 0.0;
    mean.routing_tx = 0.0;
    mean.broody_final_size = 0.0;
    double pdf_sum = 0.0;
    double nrl_sum = 0.0;
    double fd_sum = 0.0;
    bool pdf_defined = true;
    bool nrl_defined = true;
    bool fd_defined = true;
    for (const ResultRow& r : group) {
        mean.data_sent += r.data_sent;
        mean.data_delivered += r.data_delivered;
        mean.at_kbps += r.at_kbps;
        mean.routing_tx += r.routing_tx;
        mean.broody_final_size += r.broody_final_size;
        pdf_defined = pdf_defined && r.pdf.has_value();
        nrl_defined = nrl_defined && r.nrl.has_value();
        fd_defined = fd_defined && r.first_detection.has_value();
        pdf_sum += r.pdf.value_or(0.0);
        nrl_sum += r.nrl.value_or(0.0);
        fd_sum += r.first_detection.value_or(0.0);
    }
    mean.data_sent /= n;
    mean.data_delivered /= n;
    mean.at_kbps /= n;
    mean.routing_tx /= n;
    mean.broody_final_size /= n;
    mean.pdf = pdf_defined ? std::optional<double>{pdf_sum / n} : std::nullopt;
    mean.nrl = nrl_defined ? std::optional<double>{nrl_sum / n} : std::nullopt;
    mean.first_detection =
        fd_defined ? std::optional<double>{fd_sum / n} : std::nullopt;
    return mean;
}

std::string to_csv(const ResultRow& row) {
    std::string out;
    out += row.protocol;
    out += ',';
    out += FormatNumber(row.pause_time);
    out += ',';
    out += std::to_string(row.malicious);
    out += ',';
    out += row.seed;
    out += ',';
    out += FormatNumber(row.data_sent);
    out += ',';
    out += FormatNumber(row.data_delivered);
    out += ',';
    out += FormatRatio(row.pdf, "nan");
    out += ',';
    out += FormatRatio(row.at_kbps, "nan");
    out += ',';
    out += FormatNumber(row.routing_tx);
    out += ',';
    out += FormatRatio(row.nrl, "inf");
    out += ',';
    out += FormatRatio(row.first_detection, "inf");
    out += ',';
    out += FormatNumber(row.broody_final_size);
    return out;
}

std::vector<ResultRow> parse_results_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw SimError(ErrorCode::ConfigInvalid,
                       "results: missing or unexpected CSV header");
    }
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 12) {
            throw SimError(ErrorCode::ConfigInvalid,
                           "results: expected 12 fields, got " +
                               std::to_string(fields.size()));
        }
        ResultRow row;
        row.protocol = fields[0];
        row.pause_time = ParseField(fields[1], "pause_time");
        row.malicious = static_cast<std::uint32_t>(
            ParseField(fields[2], "malicious"));
        row.seed = fields[3];
        row.data_sent = ParseField(fields[4], "data_sent");
        row.data_delivered = ParseField(fields[5], "data_delivered");
        row.pdf = AsOptional(ParseField(fields[6], "pdf"));
        row.at_kbps = ParseField(fields[7], "at_kbps");
        row.routing_tx = ParseField(fields[8], "routing_tx");
        row.nrl = AsOptional(ParseField(fields[9], "nrl"));
        row.first_detection =
            AsOptional(ParseField(fields[10], "first_detection_time"));
        row.broody_final_size =
            ParseField(fields[11], "broody_final_size");
        rows.push_back(row);
    }
    return rows;
}

std::string pivot_series(const std::vector<ResultRow>& rows,
                         const std::string& metric) {
    if (metric != "pdf" && metric != "at" && metric != "nrl") {
        throw SimError(ErrorCode::ConfigInvalid,
                       "metric: must be pdf, at, or nrl");
    }
    auto value_of = [&](const ResultRow& r) -> double {
        if (metric == "pdf") {
            return r.pdf.has_value() ? *r.pdf : std::nan("");
        }
        if (metric == "at") {
            return r.at_kbps;
        }
        return r.nrl.has_value() ? *r.nrl : INFINITY;
    };

    // (protocol, malicious) -> pause_time -> accumulated values. Undefined
    // members propagate through the mean as inf/nan, which is the honest
    // aggregate.
    std::map<std::pair<std::string, std::uint32_t>,
             std::map<double, std::pair<double, std::size_t>>>
        cells;
    std::set<double> pauses;
    for (const ResultRow& r : rows) {
        if (r.seed == "mean") {
            continue; // recomputed from the seed rows
        }
        auto& [sum, count] = cells[{r.protocol, r.malicious}][r.pause_time];
        sum += value_of(r);
        ++count;
        pauses.insert(r.pause_time);
    }

    std::string out = "pause_time";
    for (const auto& [key, series] : cells) {
        out += ',';
        out += key.first + "_m" + std::to_string(key.second);
    }
    out += '\n';
    for (double pause : pauses) {
        out += FormatNumber(pause);
        for (const auto& [key, series] : cells) {
            out += ',';
            auto it = series.find(pause);
            if (it == series.end() || it->second.second == 0) {
                out += "nan";
            } else {
                const double mean =
                    it->second.first /
                    static_cast<double>(it->second.second);
                out += FormatRatio(mean, "nan");
            }
        }
        out += '\n';
    }
    return out;
}

} // namespace ndtsim
