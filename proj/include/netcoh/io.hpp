// io.hpp — edge-list file format, selection report JSON, benchmark CSV.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "netcoh/graph.hpp"
#include "netcoh/greedy.hpp"

namespace netcoh {

// Edge-list format: UTF-8 text, first line "n <count>", then one edge per
// line "u<TAB>v<TAB>w" with u < v, sorted lexicographically, weights printed
// with 17 significant digits. '#' lines are comments.

Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);
std::string format_edge_list(const Graph& g);
void write_edge_list(const Graph& g, const std::string& path);

/// Selection report as the canonical JSON object. `config` is echoed
/// verbatim. With stable=true, wall-clock fields are zeroed so reruns of a
/// seeded command produce byte-identical files.
nlohmann::json report_json(const SelectionReport& report,
                           double coherence_before, double coherence_after,
                           nlohmann::json config, bool stable = false);

/// json.dump(2) plus trailing newline; the single serialization used for
/// every report file.
std::string render_json(const nlohmann::json& j);

void write_text_file(const std::string& path, const std::string& text);

struct BenchmarkRecord {
    int n = 0;
    std::string algorithm;
    std::int64_t evals = 0;
    double seconds = 0.0;
    double trace_before = 0.0;
    double trace_after = 0.0;
};

/// Header "n,algorithm,evals,seconds,trace_before,trace_after" plus one row
/// per record.
std::string format_benchmark_csv(const std::vector<BenchmarkRecord>& records);

}  // namespace netcoh
