// Command-line front end: single runs, batch sweeps, and CSV pivoting.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ndtsim/config.hpp"
#include "ndtsim/error.hpp"
#include "ndtsim/report.hpp"
#include "ndtsim/scenario.hpp"
#include "ndtsim/sweep.hpp"
#include "ndtsim/trace.hpp"

namespace {

using namespace ndtsim;

std::vector<std::string> SplitCommas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        parts.push_back(part);
    }
    return parts;
}

double ParseOneDouble(const std::string& text, const char* what) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw SimError(ErrorCode::ConfigInvalid,
                       std::string(what) + ": bad value '" + text + "'");
    }
    return out;
}

std::uint64_t ParseOneU64(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long long out = 0;
    try {
        out = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw SimError(ErrorCode::ConfigInvalid,
                       std::string(what) + ": bad value '" + text + "'");
    }
    return out;
}

std::vector<double> ParseDoubleList(const std::string& text,
                                    const char* what) {
    std::vector<double> out;
    for (const std::string& part : SplitCommas(text)) {
        out.push_back(ParseOneDouble(part, what));
    }
    return out;
}

std::vector<std::uint32_t> ParseU32List(const std::string& text,
                                        const char* what) {
    std::vector<std::uint32_t> out;
    for (const std::string& part : SplitCommas(text)) {
        out.push_back(static_cast<std::uint32_t>(ParseOneU64(part, what)));
    }
    return out;
}

// "1..10" (inclusive range) or "1,4,9".
std::vector<std::uint64_t> ParseSeedList(const std::string& text) {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::uint64_t lo = ParseOneU64(text.substr(0, dots), "seeds");
        const std::uint64_t hi = ParseOneU64(text.substr(dots + 2), "seeds");
        if (hi < lo) {
            throw SimError(ErrorCode::ConfigInvalid,
                           "seeds: range end before start");
        }
        std::vector<std::uint64_t> out;
        for (std::uint64_t s = lo; s <= hi; ++s) {
            out.push_back(s);
        }
        return out;
    }
    std::vector<std::uint64_t> out;
    for (const std::string& part : SplitCommas(text)) {
        out.push_back(ParseOneU64(part, "seeds"));
    }
    return out;
}

std::vector<Protocol> ParseProtocolList(const std::string& text) {
    std::vector<Protocol> out;
    for (const std::string& part : SplitCommas(text)) {
        Protocol p{};
        if (!parse_protocol(part, p)) {
            throw SimError(ErrorCode::ConfigInvalid,
                           "protocols: unknown protocol '" + part + "'");
        }
        out.push_back(p);
    }
    return out;
}

void WriteTextFile(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw SimError(ErrorCode::Precondition,
                       "cannot open output file '" + path + "'");
    }
    out << content;
}

void EmitRows(const std::vector<ResultRow>& rows, const std::string& out_path) {
    std::string table = std::string(kCsvHeader) + "\n";
    for (const ResultRow& row : rows) {
        table += to_csv(row);
        table += '\n';
    }
    if (out_path.empty()) {
        std::cout << table;
    } else {
        WriteTextFile(out_path, table);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-event MANET simulator: AODV under request "
                 "flooding, with and without the neighbor defense"};
    app.require_subcommand(1);

    // --- run ---
    auto* run = app.add_subcommand("run", "Run one scenario, emit one CSV row");
    std::string run_config;
    std::string run_protocol;
    std::uint32_t run_nodes = 0;
    std::uint32_t run_malicious = 0;
    double run_pause = 0.0;
    std::uint64_t run_seed = 0;
    double run_duration = 0.0;
    std::string run_out;
    std::string run_trace;
    run->add_option("--config", run_config, "key=value config file")
        ->required();
    auto* run_protocol_opt =
        run->add_option("--protocol", run_protocol, "aodv or ndtaodv");
    auto* run_nodes_opt = run->add_option("--nodes", run_nodes, "node count");
    auto* run_malicious_opt =
        run->add_option("--malicious", run_malicious, "attacker count");
    auto* run_pause_opt =
        run->add_option("--pause-time", run_pause, "waypoint dwell, seconds");
    auto* run_seed_opt = run->add_option("--seed", run_seed, "random seed");
    auto* run_duration_opt =
        run->add_option("--duration", run_duration, "run length, seconds");
    run->add_option("--out", run_out, "output CSV (default stdout)");
    run->add_option("--trace", run_trace, "event trace TSV");

    // --- sweep ---
    auto* sweep = app.add_subcommand(
        "sweep", "Cross protocols x pause times x attackers x seeds");
    std::string sweep_config;
    std::string sweep_pauses = "0,5,10,15,20";
    std::string sweep_malicious = "0,1,3";
    std::string sweep_protocols = "aodv,ndtaodv";
    std::string sweep_seeds = "1..10";
    std::string sweep_out;
    sweep->add_option("--config", sweep_config, "key=value config file")
        ->required();
    sweep->add_option("--pause-times", sweep_pauses,
                      "comma list of pause times");
    sweep->add_option("--malicious", sweep_malicious,
                      "comma list of attacker counts");
    sweep->add_option("--protocols", sweep_protocols,
                      "comma list of protocols");
    sweep->add_option("--seeds", sweep_seeds, "comma list or lo..hi range");
    sweep->add_option("--out", sweep_out, "output CSV (default stdout)");

    // --- plot ---
    auto* plot = app.add_subcommand(
        "plot", "Pivot sweep results into one per-metric series");
    std::string plot_in;
    std::string plot_metric;
    std::string plot_out;
    plot->add_option("--in", plot_in, "results CSV from sweep")->required();
    plot->add_option("--metric", plot_metric, "pdf, at, or nrl")->required();
    plot->add_option("--out", plot_out, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // Treat flag/usage mistakes as config errors; help is a success.
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            ScenarioConfig cfg = load_config_file(run_config);
            if (run_protocol_opt->count() > 0 &&
                !parse_protocol(run_protocol, cfg.protocol)) {
                throw SimError(ErrorCode::ConfigInvalid,
                               "protocol: unknown protocol '" + run_protocol +
                                   "'");
            }
            if (run_nodes_opt->count() > 0) {
                cfg.nodes = run_nodes;
            }
            if (run_malicious_opt->count() > 0) {
                cfg.malicious = run_malicious;
            }
            if (run_pause_opt->count() > 0) {
                cfg.pause_time_s = run_pause;
            }
            if (run_seed_opt->count() > 0) {
                cfg.seed = run_seed;
            }
            if (run_duration_opt->count() > 0) {
                cfg.duration_s = run_duration;
            }
            Scenario scenario(cfg);
            std::optional<FileTraceSink> trace;
            if (!run_trace.empty()) {
                trace.emplace(run_trace);
                if (!trace->ok()) {
                    throw SimError(ErrorCode::Precondition,
                                   "cannot open trace file '" + run_trace +
                                       "'");
                }
                scenario.SetTraceSink(&*trace);
            }
            const MetricsReport& report = scenario.Run();
            EmitRows({make_row(cfg, report)}, run_out);
            return 0;
        }
        if (sweep->parsed()) {
            SweepSpec spec;
            spec.base = load_config_file(sweep_config);
            spec.pause_times = ParseDoubleList(sweep_pauses, "pause-times");
            spec.malicious_counts = ParseU32List(sweep_malicious, "malicious");
            spec.protocols = ParseProtocolList(sweep_protocols);
            spec.seeds = ParseSeedList(sweep_seeds);
            EmitRows(run_sweep(spec), sweep_out);
            return 0;
        }
        // plot
        std::ifstream in(plot_in);
        if (!in) {
            throw SimError(ErrorCode::ConfigInvalid,
                           "cannot open results file '" + plot_in + "'");
        }
        const auto rows = parse_results_csv(in);
        const std::string series = pivot_series(rows, plot_metric);
        if (plot_out.empty()) {
            std::cout << series;
        } else {
            WriteTextFile(plot_out, series);
        }
        return 0;
    } catch (const SimError& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
        case ErrorCode::ConfigInvalid:
        case ErrorCode::InsufficientNodes:
            return 2;
        default:
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
