#include "pasecdeg/edge_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pasecdeg {

namespace {

void write_header(std::ostream& out, std::size_t n) {
    out << "# " << kFormatVersion << " n=" << n << "\n";
}

std::size_t parse_header(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("edge list: empty input");
    const std::string prefix = std::string("# ") + kFormatVersion + " n=";
    if (line.rfind(prefix, 0) != 0)
        throw std::invalid_argument("edge list: bad header '" + line + "'");
    return std::stoull(line.substr(prefix.size()));
}

std::vector<std::pair<Vertex, Vertex>> parse_edges(std::istream& in) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::invalid_argument("edge list: line " + std::to_string(lineno) +
                                        " missing tab separator");
        const unsigned long long u = std::stoull(line.substr(0, tab));
        const unsigned long long v = std::stoull(line.substr(tab + 1));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return edges;
}

} // namespace

void write_edge_list(const AttachmentHistory& history, std::ostream& out) {
    write_header(out, history.size());
    for (std::size_t t = 1; t <= history.size(); ++t)
        out << t << '\t' << history.targets[t - 1] << '\n';
}

void write_edge_list(const MultiGraph& graph, std::ostream& out) {
    write_header(out, graph.vertex_count());
    const auto& u = graph.edge_sources();
    const auto& v = graph.edge_targets();
    for (std::size_t e = 0; e < u.size(); ++e) out << u[e] << '\t' << v[e] << '\n';
}

AttachmentHistory read_history(std::istream& in) {
    const std::size_t n = parse_header(in);
    const auto edges = parse_edges(in);
    if (edges.size() != n)
        throw std::invalid_argument("edge list: history needs exactly n=" +
                                    std::to_string(n) + " lines, got " +
                                    std::to_string(edges.size()));
    std::vector<Vertex> targets(n);
    for (std::size_t t = 1; t <= n; ++t) {
        if (edges[t - 1].first != t)
            throw std::invalid_argument("edge list: line " + std::to_string(t + 1) +
                                        " is not a history row (u != t)");
        targets[t - 1] = edges[t - 1].second;
    }
    return AttachmentHistory(std::move(targets)); // validates v <= t
}

MultiGraph read_multigraph(std::istream& in) {
    const std::size_t n = parse_header(in);
    return MultiGraph::from_edges(n, parse_edges(in));
}

namespace {

template <typename T>
void write_file(const T& value, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_edge_list(value, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

} // namespace

void write_edge_list_file(const AttachmentHistory& history, const std::string& path) {
    write_file(history, path);
}

void write_edge_list_file(const MultiGraph& graph, const std::string& path) {
    write_file(graph, path);
}

AttachmentHistory read_history_file(const std::string& path) {
    auto in = open_input(path);
    return read_history(in);
}

MultiGraph read_multigraph_file(const std::string& path) {
    auto in = open_input(path);
    return read_multigraph(in);
}

} // namespace pasecdeg
