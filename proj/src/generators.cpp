#include "chaindex/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

namespace chaindex {

Model model_from_string(const std::string& s) {
    if (s == "er" || s == "ER") return Model::ER;
    if (s == "ba" || s == "BA") return Model::BA;
    if (s == "ws" || s == "WS") return Model::WS;
    if (s == "pb" || s == "PB") return Model::PB;
    throw InputError("unknown model '" + s + "' (expected er, ba, ws, or pb)");
}

std::string model_name(Model m) {
    switch (m) {
        case Model::ER: return "er";
        case Model::BA: return "ba";
        case Model::WS: return "ws";
        case Model::PB: return "pb";
    }
    return "?";
}

namespace {

// Fixed random stream: mt19937_64 seeded directly; doubles take the top 53
// bits, bounded ints use the multiply-shift reduction. Identical configs give
// bit-identical edge lists.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    // (0, 1]; never zero so logarithms stay finite
    double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
    int below(int bound) {
        return static_cast<int>((static_cast<unsigned __int128>(next()) *
                                 static_cast<std::uint64_t>(bound)) >> 64);
    }

private:
    std::mt19937_64 eng_;
};

Dag dag_from_edges(int n, std::vector<std::pair<int, int>> edges) {
    return to_dag(from_edge_list(n, edges));
}

}  // namespace

double er_p_for_degree(int n, double degree) {
    if (n < 2) return 0.0;
    return std::clamp(2.0 * degree / (n - 1), 0.0, 1.0);
}

Dag gen_er(int n, double p, std::uint64_t seed) {
    if (n < 0) throw InputError("n must be non-negative");
    if (p < 0.0 || p > 1.0) throw InputError("edge probability must be in [0,1]");
    std::vector<std::pair<int, int>> edges;
    if (n >= 2 && p > 0.0) {
        const unsigned long long total =
            static_cast<unsigned long long>(n) * (n - 1) / 2;
        if (p >= 1.0) {
            edges.reserve(total);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        } else {
            Rng rng(seed);
            edges.reserve(static_cast<std::size_t>(p * total * 1.05) + 16);
            const double log1mp = std::log1p(-p);
            // geometric jumps across the row-major pair slots (0,1),(0,2),...
            unsigned long long pos = 0;
            int row = 0;
            unsigned long long row_start = 0;
            unsigned long long row_len = static_cast<unsigned long long>(n) - 1;
            while (true) {
                double u = rng.uniform01();
                pos += static_cast<unsigned long long>(std::floor(std::log(u) / log1mp));
                if (pos >= total) break;
                while (pos >= row_start + row_len) {
                    row_start += row_len;
                    --row_len;
                    ++row;
                }
                edges.emplace_back(row, row + 1 + static_cast<int>(pos - row_start));
                ++pos;
            }
        }
    }
    return dag_from_edges(n, std::move(edges));
}

Dag gen_ba(int n, int m, std::uint64_t seed) {
    if (m < 1) throw InputError("attachment count m must be at least 1");
    if (n <= m) throw InputError("n must exceed m");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - m) * m);

    std::vector<int> endpoints;  // each node repeated once per incident edge
    std::vector<int> targets(m);
    std::iota(targets.begin(), targets.end(), 0);
    for (int v = m; v < n; ++v) {
        for (int t : targets) edges.emplace_back(t, v);
        endpoints.insert(endpoints.end(), targets.begin(), targets.end());
        endpoints.insert(endpoints.end(), m, v);
        if (v + 1 == n) break;
        targets.clear();
        std::unordered_set<int> chosen;
        while (static_cast<int>(targets.size()) < m) {
            int x = endpoints[rng.below(static_cast<int>(endpoints.size()))];
            if (chosen.insert(x).second) targets.push_back(x);
        }
    }
    return dag_from_edges(n, std::move(edges));
}

Dag gen_ws(int n, int k, double b, std::uint64_t seed) {
    if (k < 0 || k % 2 != 0) throw InputError("k must be even and non-negative");
    if (k >= n && n > 0) throw InputError("k must be smaller than n");
    if (b < 0.0 || b > 1.0) throw InputError("rewiring probability must be in [0,1]");

    std::vector<std::unordered_set<int>> und(n);
    auto has = [&](int u, int v) { return und[u].count(v) > 0; };
    auto add = [&](int u, int v) {
        und[u].insert(v);
        und[v].insert(u);
    };
    auto remove = [&](int u, int v) {
        und[u].erase(v);
        und[v].erase(u);
    };

    for (int j = 1; j <= k / 2; ++j)
        for (int u = 0; u < n; ++u) add(u, (u + j) % n);

    Rng rng(seed);
    for (int j = 1; j <= k / 2; ++j) {
        for (int u = 0; u < n; ++u) {
            int v = (u + j) % n;
            if (rng.uniform01() >= b) continue;
            if (static_cast<int>(und[u].size()) >= n - 1) continue;  // saturated
            int w = rng.below(n);
            while (w == u || has(u, w)) w = rng.below(n);
            remove(u, v);
            add(u, w);
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        std::vector<int> nb(und[u].begin(), und[u].end());
        std::sort(nb.begin(), nb.end());
        for (int v : nb)
            if (u < v) edges.emplace_back(u, v);
    }
    return dag_from_edges(n, std::move(edges));
}

Dag gen_pb(int n, int paths, double avg_degree, std::uint64_t seed) {
    if (n < 0) throw InputError("n must be non-negative");
    if (paths < 1 || paths > std::max(n, 1))
        throw InputError("path count must be in [1, n]");
    Rng rng(seed);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);

    // uniform composition of n into `paths` parts: distinct cut points in [1, n-1]
    std::vector<int> gaps(std::max(n - 1, 0));
    std::iota(gaps.begin(), gaps.end(), 1);
    int cut_count = std::min(paths - 1, n > 0 ? n - 1 : 0);
    for (int i = 0; i < cut_count; ++i)
        std::swap(gaps[i], gaps[i + rng.below(static_cast<int>(gaps.size()) - i)]);
    std::vector<int> cuts(gaps.begin(), gaps.begin() + cut_count);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);

    std::vector<std::pair<int, int>> edges;
    std::unordered_set<std::uint64_t> present;
    auto key = [n](int u, int v) {
        return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v;
    };
    int begin = 0;
    for (int cut : cuts) {
        std::vector<int> seg(perm.begin() + begin, perm.begin() + cut);
        std::sort(seg.begin(), seg.end());
        for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
            edges.emplace_back(seg[i], seg[i + 1]);
            present.insert(key(seg[i], seg[i + 1]));
        }
        begin = cut;
    }

    const unsigned long long total_pairs =
        n >= 2 ? static_cast<unsigned long long>(n) * (n - 1) / 2 : 0;
    unsigned long long target = std::min(
        static_cast<unsigned long long>(std::llround(avg_degree * n)), total_pairs);
    while (edges.size() < target) {
        int a = rng.below(n), b = rng.below(n);
        if (a == b) continue;
        int lo = std::min(a, b), hi = std::max(a, b);
        if (present.insert(key(lo, hi)).second) edges.emplace_back(lo, hi);
    }
    return dag_from_edges(n, std::move(edges));
}

Dag generate(const GeneratorConfig& cfg) {
    switch (cfg.model) {
        case Model::ER: {
            double p = cfg.p >= 0.0 ? cfg.p : er_p_for_degree(cfg.n, cfg.avg_degree);
            return gen_er(cfg.n, p, cfg.seed);
        }
        case Model::BA: {
            int m = cfg.ba_m > 0 ? cfg.ba_m : std::max(1, static_cast<int>(std::lround(cfg.avg_degree)));
            return gen_ba(cfg.n, m, cfg.seed);
        }
        case Model::WS: {
            int k = cfg.ws_k > 0 ? cfg.ws_k : 2 * std::max(1, static_cast<int>(std::lround(cfg.avg_degree)));
            return gen_ws(cfg.n, k, cfg.ws_b, cfg.seed);
        }
        case Model::PB:
            return gen_pb(cfg.n, cfg.pb_paths, cfg.avg_degree, cfg.seed);
    }
    throw InputError("unhandled model");
}

std::string describe(const GeneratorConfig& cfg) {
    std::ostringstream os;
    os << "model=" << model_name(cfg.model) << " n=" << cfg.n;
    switch (cfg.model) {
        case Model::ER:
            os << " p=" << (cfg.p >= 0.0 ? cfg.p : er_p_for_degree(cfg.n, cfg.avg_degree));
            break;
        case Model::BA:
            os << " m="
               << (cfg.ba_m > 0 ? cfg.ba_m
                                : std::max(1, static_cast<int>(std::lround(cfg.avg_degree))));
            break;
        case Model::WS:
            os << " k="
               << (cfg.ws_k > 0 ? cfg.ws_k
                                : 2 * std::max(1, static_cast<int>(std::lround(cfg.avg_degree))))
               << " b=" << cfg.ws_b;
            break;
        case Model::PB:
            os << " paths=" << cfg.pb_paths << " avg_degree=" << cfg.avg_degree;
            break;
    }
    os << " seed=" << cfg.seed << " rng=mt19937_64(top53-double,mulshift-int)";
    return os.str();
}

}  // namespace chaindex
