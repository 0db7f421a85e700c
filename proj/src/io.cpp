#include "chaindex/io.hpp"

#include <fstream>
#include <sstream>

namespace chaindex {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    return out;
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        if (is_blank(line)) throw ParseError("expected header 'n m'", line_no);
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
            throw ParseError("malformed header, expected 'n m'", line_no);
        break;
    }
    if (n < 0) throw ParseError("missing header 'n m'", line_no + 1);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    long long read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        if (is_blank(line)) {
            if (read == m) continue;  // tolerate trailing blank lines only
            throw ParseError("blank line inside edge list", line_no);
        }
        if (read == m) throw ParseError("more than the declared " + std::to_string(m) + " edges", line_no);
        std::istringstream es(line);
        long long u, v;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw ParseError("malformed edge line, expected 'u v'", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint outside [0," + std::to_string(n) + ")", line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ++read;
    }
    if (read < m)
        throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(read),
                         line_no + 1);
    return from_edge_list(static_cast<int>(n), edges);
}

Digraph load_digraph(const std::string& path) {
    auto in = open_in(path);
    return read_digraph(in);
}

Dag load_edge_list(const std::string& path) { return to_dag(load_digraph(path)); }

void write_edge_list(std::ostream& out, const Dag& d, const std::string& header_comment) {
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    out << d.n << " " << d.edge_count() << "\n";
    for (int u = 0; u < d.n; ++u)
        for (int v : d.out_adj[u]) out << u << " " << v << "\n";
}

void save_edge_list(const std::string& path, const Dag& d, const std::string& header_comment) {
    auto out = open_out(path);
    write_edge_list(out, d, header_comment);
}

void save_chains(const std::string& path, const ChainDecomposition& dec) {
    auto out = open_out(path);
    for (const auto& chain : dec.chains) {
        for (std::size_t i = 0; i < chain.size(); ++i) out << (i ? " " : "") << chain[i];
        out << "\n";
    }
}

void write_index(std::ostream& out, const ReachIndex& ix) {
    out << ix.n << " " << ix.k_c << "\n";
    for (int v = 0; v < ix.n; ++v) {
        out << ix.chain_of[v] + 1 << " " << ix.pos_of[v];
        const std::uint32_t* row = ix.row(v);
        for (int j = 0; j < ix.k_c; ++j) out << " " << row[j];
        out << "\n";
    }
}

void save_index(const std::string& path, const ReachIndex& ix) {
    auto out = open_out(path);
    write_index(out, ix);
}

ReachIndex read_index(std::istream& in) {
    ReachIndex ix;
    std::string line;
    int line_no = 1;
    if (!std::getline(in, line)) throw ParseError("missing index header 'n k_c'", line_no);
    {
        std::istringstream hs(line);
        if (!(hs >> ix.n >> ix.k_c) || ix.n < 0 || ix.k_c < 0)
            throw ParseError("malformed index header", line_no);
    }
    ix.chain_of.resize(ix.n);
    ix.pos_of.resize(ix.n);
    ix.idx.resize(static_cast<std::size_t>(ix.n) * ix.k_c);
    for (int v = 0; v < ix.n; ++v) {
        ++line_no;
        if (!std::getline(in, line)) throw ParseError("truncated index file", line_no);
        std::istringstream vs(line);
        long long chain, pos;
        if (!(vs >> chain >> pos) || chain < 1 || chain > ix.k_c || pos < 1)
            throw ParseError("malformed vertex labels", line_no);
        ix.chain_of[v] = static_cast<int>(chain) - 1;
        ix.pos_of[v] = static_cast<int>(pos);
        for (int j = 0; j < ix.k_c; ++j) {
            long long e;
            if (!(vs >> e) || e < 0)
                throw ParseError("malformed index entry for vertex " + std::to_string(v), line_no);
            ix.idx[static_cast<std::size_t>(v) * ix.k_c + j] = static_cast<std::uint32_t>(e);
        }
    }
    return ix;
}

ReachIndex load_index(const std::string& path) {
    auto in = open_in(path);
    return read_index(in);
}

}  // namespace chaindex
