#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chaindex/generators.hpp"

namespace chaindex {

// One experiment row. Timings are integer milliseconds from a monotonic
// clock, each phase measured separately, no warm-up. width and the width
// phase timings are -1 when the width pipeline did not run.
struct BenchRecord {
    std::string model;
    int n = 0;
    double avg_degree = 0.0;
    std::uint64_t seed = 0;
    int k_c = 0;
    int width = -1;
    long long e_tr = 0;
    long long e_red = 0;
    double tr_ratio = 0.0;  // e_tr / (e_tr + e_red)
    long long decomp_ms = 0;
    long long index_ms = 0;
    long long total_ms = 0;  // sort + decomposition + index (+ reduction)
    long long tc_baseline_ms = 0;
    long long width_index_ms = -1;
    long long width_bipartite_ms = -1;
    long long width_matching_ms = -1;
    std::string error;  // empty on success; a failed cell never stops the grid
};

struct BenchConfig {
    std::vector<Model> models{Model::ER};
    std::vector<int> sizes{2000};
    std::vector<double> degrees{5, 10, 20, 40};
    int seeds = 1;
    std::uint64_t base_seed = 1;
    bool with_width = false;
    bool reduce_first = false;
    double ws_b = 0.9;
    int pb_paths = 100;
};

extern const char* const kBenchCsvHeader;

std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream* progress = nullptr);

BenchRecord run_bench_cell(const GeneratorConfig& g, bool with_width, bool reduce_first);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

// Two series (index_ms, tc_baseline_ms) keyed by avg_degree, averaged over
// seeds. Expects records from a single model.
std::string emit_plot_data(const std::vector<BenchRecord>& records);

}  // namespace chaindex
