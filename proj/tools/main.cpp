#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chaindex/bench.hpp"
#include "chaindex/decomposition.hpp"
#include "chaindex/generators.hpp"
#include "chaindex/graph.hpp"
#include "chaindex/io.hpp"
#include "chaindex/reach_index.hpp"
#include "chaindex/reduction.hpp"
#include "chaindex/width.hpp"

namespace {

using namespace chaindex;

struct Stage {
    // tags errors with the pipeline stage they came from
    std::string name;
    explicit Stage(std::string n) : name(std::move(n)) {}
};

template <class Fn>
auto at_stage(const std::string& stage, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw std::runtime_error(stage + ": parse: " + e.what());
    } catch (const CycleError& e) {
        throw std::runtime_error(stage + ": cycle: " + e.what());
    } catch (const std::exception& e) {
        throw std::runtime_error(stage + ": " + e.what());
    }
}

Dag load_sorted(const std::string& path) {
    return at_stage("load", [&] {
        Digraph g = load_digraph(path);
        if (g.dropped_self_loops || g.dropped_duplicates)
            std::cerr << "note: dropped " << g.dropped_self_loops << " self-loops and "
                      << g.dropped_duplicates << " duplicate edges\n";
        return sort_adjacency_lists(to_dag(g));
    });
}

int run(int argc, char** argv) {
    CLI::App app{"chaindex: chain-decomposition reachability toolkit for DAGs"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a random DAG (edge-list format)");
    std::string gen_model = "er", gen_out;
    GeneratorConfig gcfg;
    gen->add_option("--model", gen_model, "er | ba | ws | pb")->capture_default_str();
    gen->add_option("--n", gcfg.n, "vertex count")->required();
    gen->add_option("--degree", gcfg.avg_degree, "target average degree (|E| ~ degree*n)");
    gen->add_option("--p", gcfg.p, "ER edge probability (overrides --degree)");
    gen->add_option("--k", gcfg.ws_k, "WS ring neighbors (even)");
    gen->add_option("--b", gcfg.ws_b, "WS rewiring probability")->capture_default_str();
    gen->add_option("--paths", gcfg.pb_paths, "PB predefined path count")->capture_default_str();
    gen->add_option("--seed", gcfg.seed, "random seed")->capture_default_str();
    gen->add_option("-o,--output", gen_out, "output edge-list file")->required();

    // ---- decompose ----
    auto* dec_cmd = app.add_subcommand("decompose", "compute a chain decomposition");
    std::string dec_in, dec_out, dec_method = "greedy";
    dec_cmd->add_option("-i,--input", dec_in, "edge-list file")->required();
    dec_cmd->add_option("-o,--output", dec_out, "chain file (line i = vertices of chain i)");
    dec_cmd->add_option("--method", dec_method, "greedy | node-order | node-order+concat")
        ->capture_default_str();

    // ---- reduce ----
    auto* red_cmd = app.add_subcommand("reduce", "remove chain-detectable transitive edges");
    std::string red_in, red_out;
    red_cmd->add_option("-i,--input", red_in, "edge-list file")->required();
    red_cmd->add_option("-o,--output", red_out, "reduced edge-list file");

    // ---- index ----
    auto* idx_cmd = app.add_subcommand("index", "build the reachability index");
    std::string idx_in, idx_out;
    bool idx_reduce_first = false;
    idx_cmd->add_option("-i,--input", idx_in, "edge-list file")->required();
    idx_cmd->add_option("-o,--output", idx_out, "index file")->required();
    idx_cmd->add_flag("--reduce-first", idx_reduce_first, "reduce the graph before indexing");

    // ---- query ----
    auto* q_cmd = app.add_subcommand("query", "answer one reachability query from an index file");
    std::string q_in;
    int q_s = 0, q_t = 0;
    q_cmd->add_option("-i,--input", q_in, "index file")->required();
    q_cmd->add_option("source", q_s, "source vertex")->required();
    q_cmd->add_option("target", q_t, "target vertex")->required();

    // ---- closure ----
    auto* clo_cmd = app.add_subcommand("closure", "expand the full transitive closure");
    std::string clo_in, clo_out;
    clo_cmd->add_option("-i,--input", clo_in, "edge-list file")->required();
    clo_cmd->add_option("-o,--output", clo_out, "output file (default stdout)");

    // ---- width ----
    auto* w_cmd = app.add_subcommand("width", "DAG width via index-accelerated matching");
    std::string w_in;
    w_cmd->add_option("-i,--input", w_in, "edge-list file")->required();

    // ---- bench ----
    auto* b_cmd = app.add_subcommand("bench", "run the experiment grid, write CSV");
    BenchConfig bcfg;
    std::vector<std::string> b_models{"er"};
    std::string b_csv, b_plot;
    bool b_large_scale = false;
    b_cmd->add_option("--model", b_models, "models to run (repeatable)")->capture_default_str();
    b_cmd->add_option("--n", bcfg.sizes, "graph sizes (repeatable)")->capture_default_str();
    b_cmd->add_option("--degree", bcfg.degrees, "average degrees (repeatable)")
        ->capture_default_str();
    b_cmd->add_option("--seeds", bcfg.seeds, "seeds per cell")->capture_default_str();
    b_cmd->add_option("--seed", bcfg.base_seed, "base seed")->capture_default_str();
    b_cmd->add_option("--b", bcfg.ws_b, "WS rewiring probability")->capture_default_str();
    b_cmd->add_option("--paths", bcfg.pb_paths, "PB path count")->capture_default_str();
    b_cmd->add_option("--csv", b_csv, "CSV output path (default stdout)");
    b_cmd->add_option("--plot", b_plot, "also write degree-keyed timing series CSV");
    b_cmd->add_flag("--with-width", bcfg.with_width, "run the width pipeline per cell");
    b_cmd->add_flag("--reduce-first", bcfg.reduce_first, "reduce before indexing");
    b_cmd->add_flag("--large-scale", b_large_scale, "allow n > 5000 or more than 3 seeds");

    CLI11_PARSE(app, argc, argv);

    if (*gen) {
        gcfg.model = model_from_string(gen_model);
        Dag d = at_stage("generate", [&] { return generate(gcfg); });
        save_edge_list(gen_out, d, "chaindex gen " + describe(gcfg));
        std::cout << "n=" << d.n << " m=" << d.edge_count() << "\n";
        return 0;
    }

    if (*dec_cmd) {
        Dag d = load_sorted(dec_in);
        ChainDecomposition dec;
        ConcatStats stats;
        if (dec_method == "greedy") {
            std::tie(dec, stats) = greedy_chains(d);
        } else if (dec_method == "node-order") {
            dec = node_order_paths(d);
            stats.k_p = stats.k_c = dec.k_c();
        } else if (dec_method == "node-order+concat") {
            std::tie(dec, stats) = concatenate(d, node_order_paths(d));
        } else {
            throw std::runtime_error("decompose: unknown method '" + dec_method + "'");
        }
        if (!dec_out.empty()) save_chains(dec_out, dec);
        std::cout << "chains=" << dec.k_c() << " concatenations=" << stats.concatenations << "\n";
        return 0;
    }

    if (*red_cmd) {
        Dag d = load_sorted(red_in);
        auto [dec, stats] = greedy_chains(d);
        auto [reduced, rstats] = reduce(d, dec);
        if (!red_out.empty()) save_edge_list(red_out, reduced);
        std::cout << "removed_out,removed_in,remaining\n"
                  << rstats.removed_out << "," << rstats.removed_in << "," << rstats.remaining
                  << "\n";
        return 0;
    }

    if (*idx_cmd) {
        Dag d = load_sorted(idx_in);
        auto [dec, stats] = greedy_chains(d);
        const Dag* input = &d;
        Dag reduced;
        if (idx_reduce_first) {
            reduced = reduce(d, dec).first;
            input = &reduced;
        }
        ReachIndex ix = at_stage("index", [&] { return build_index(*input, dec); });
        save_index(idx_out, ix);
        std::cout << "k_c=" << ix.k_c << " e_tr=" << ix.e_tr << " e_red=" << ix.e_red << "\n";
        return 0;
    }

    if (*q_cmd) {
        ReachIndex ix = at_stage("load", [&] { return load_index(q_in); });
        bool r = at_stage("query", [&] { return ix.query(q_s, q_t); });
        std::cout << (r ? "true" : "false") << "\n";
        return 0;
    }

    if (*clo_cmd) {
        Dag d = load_sorted(clo_in);
        auto [dec, stats] = greedy_chains(d);
        ReachIndex ix = build_index(d, dec);
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!clo_out.empty()) {
            file.open(clo_out);
            if (!file) throw std::runtime_error("closure: cannot open '" + clo_out + "'");
            out = &file;
        }
        *out << d.n << "\n";
        for (int s = 0; s < d.n; ++s) {
            *out << s << ":";
            for (int t = 0; t < d.n; ++t)
                if (ix.query_unchecked(s, t)) *out << " " << t;
            *out << "\n";
        }
        return 0;
    }

    if (*w_cmd) {
        Dag d = load_sorted(w_in);
        WidthResult w = at_stage("width", [&] { return fulkerson_width(d); });
        std::cout << "width=" << w.width << "\n"
                  << "index_ms,bipartite_ms,matching_ms,total_ms\n"
                  << w.index_ms << "," << w.bipartite_ms << "," << w.matching_ms << ","
                  << w.total_ms() << "\n";
        return 0;
    }

    if (*b_cmd) {
        bcfg.models.clear();
        for (const auto& m : b_models) bcfg.models.push_back(model_from_string(m));
        if (!b_large_scale) {
            for (int n : bcfg.sizes)
                if (n > 5000)
                    throw std::runtime_error(
                        "bench: n > 5000 needs --large-scale (desk-scale default)");
            if (bcfg.seeds > 3)
                throw std::runtime_error(
                    "bench: more than 3 seeds needs --large-scale (desk-scale default)");
        }
        auto records = run_bench(bcfg, &std::cerr);
        if (b_csv.empty()) {
            write_bench_csv(std::cout, records);
        } else {
            std::ofstream out(b_csv);
            if (!out) throw std::runtime_error("bench: cannot open '" + b_csv + "'");
            write_bench_csv(out, records);
        }
        if (!b_plot.empty()) {
            std::ofstream out(b_plot);
            if (!out) throw std::runtime_error("bench: cannot open '" + b_plot + "'");
            out << emit_plot_data(records);
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
