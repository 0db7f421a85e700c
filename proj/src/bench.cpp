#include "chaindex/bench.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "chaindex/reach_index.hpp"
#include "chaindex/reduction.hpp"
#include "chaindex/stopwatch.hpp"
#include "chaindex/width.hpp"

namespace chaindex {

const char* const kBenchCsvHeader =
    "model,n,avg_degree,seed,k_c,width,e_tr,e_red,tr_ratio,decomp_ms,index_ms,total_ms,"
    "tc_baseline_ms,width_index_ms,width_bipartite_ms,width_matching_ms,error";

BenchRecord run_bench_cell(const GeneratorConfig& g, bool with_width, bool reduce_first) {
    BenchRecord rec;
    rec.model = model_name(g.model);
    rec.n = g.n;
    rec.avg_degree = g.avg_degree;
    rec.seed = g.seed;
    try {
        Dag dag = generate(g);

        Stopwatch total;
        Dag sorted = sort_adjacency_lists(dag);

        Stopwatch sw;
        auto [dec, stats] = greedy_chains(sorted);
        rec.decomp_ms = sw.elapsed_ms();
        rec.k_c = dec.k_c();

        const Dag* index_input = &sorted;
        Dag reduced;
        if (reduce_first) {
            reduced = reduce(sorted, dec).first;
            index_input = &reduced;
        }

        sw.restart();
        ReachIndex ix = build_index(*index_input, dec);
        rec.index_ms = sw.elapsed_ms();
        rec.total_ms = total.elapsed_ms();
        rec.e_tr = ix.e_tr;
        rec.e_red = ix.e_red;
        rec.tr_ratio = (ix.e_tr + ix.e_red) > 0
                           ? static_cast<double>(ix.e_tr) / static_cast<double>(ix.e_tr + ix.e_red)
                           : 0.0;

        sw.restart();
        BitMatrix closure = transitive_closure_baseline(sorted);
        (void)closure;
        rec.tc_baseline_ms = sw.elapsed_ms();

        if (with_width) {
            WidthResult w = fulkerson_width(sorted);
            rec.width = w.width;
            rec.width_index_ms = w.index_ms;
            rec.width_bipartite_ms = w.bipartite_ms;
            rec.width_matching_ms = w.matching_ms;
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream* progress) {
    std::vector<BenchRecord> records;
    for (Model model : cfg.models) {
        for (int n : cfg.sizes) {
            for (double degree : cfg.degrees) {
                for (int s = 0; s < cfg.seeds; ++s) {
                    GeneratorConfig g;
                    g.model = model;
                    g.n = n;
                    g.avg_degree = degree;
                    g.seed = cfg.base_seed + static_cast<std::uint64_t>(s);
                    g.ws_b = cfg.ws_b;
                    g.pb_paths = cfg.pb_paths;
                    if (progress)
                        *progress << "bench: " << model_name(model) << " n=" << n
                                  << " degree=" << degree << " seed=" << g.seed << "\n";
                    records.push_back(run_bench_cell(g, cfg.with_width, cfg.reduce_first));
                    if (progress && !records.back().error.empty())
                        *progress << "  cell failed: " << records.back().error << "\n";
                }
            }
        }
    }
    return records;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::string opt(long long v) { return v < 0 ? std::string() : std::to_string(v); }

}  // namespace

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << kBenchCsvHeader << "\n";
    for (const auto& r : records) {
        out << r.model << "," << r.n << "," << r.avg_degree << "," << r.seed << "," << r.k_c << ","
            << (r.width < 0 ? std::string() : std::to_string(r.width)) << "," << r.e_tr << ","
            << r.e_red << "," << r.tr_ratio << "," << r.decomp_ms << "," << r.index_ms << ","
            << r.total_ms << "," << r.tc_baseline_ms << "," << opt(r.width_index_ms) << ","
            << opt(r.width_bipartite_ms) << "," << opt(r.width_matching_ms) << ","
            << csv_escape(r.error) << "\n";
    }
}

std::string emit_plot_data(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "avg_degree,index_ms,tc_baseline_ms\n";
    std::map<double, std::pair<std::pair<double, double>, int>> by_degree;  // sums, count
    for (const auto& r : records) {
        if (!r.error.empty()) continue;
        auto& [sums, count] = by_degree[r.avg_degree];
        sums.first += static_cast<double>(r.index_ms);
        sums.second += static_cast<double>(r.tc_baseline_ms);
        ++count;
    }
    for (const auto& [degree, entry] : by_degree) {
        const auto& [sums, count] = entry;
        out << degree << "," << sums.first / count << "," << sums.second / count << "\n";
    }
    return out.str();
}

}  // namespace chaindex
