#include "pasecdeg/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pasecdeg {

AttachmentHistory::AttachmentHistory(std::vector<Vertex> t) : targets(std::move(t)) {
    validate();
}

void AttachmentHistory::validate() const {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const Vertex tgt = targets[i];
        if (tgt < 1 || tgt > i + 1)
            throw std::invalid_argument(
                "AttachmentHistory: targets[" + std::to_string(i + 1) + "] = " +
                std::to_string(tgt) + " outside [1, " + std::to_string(i + 1) + "]");
    }
}

std::size_t MultiGraph::check(Vertex v) const {
    if (v < 1 || v > degree_.size())
        throw std::out_of_range("MultiGraph: vertex " + std::to_string(v) +
                                " outside [1, " + std::to_string(degree_.size()) + "]");
    return v - 1;
}

MultiGraph MultiGraph::from_history(const AttachmentHistory& history) {
    history.validate();
    const std::size_t n = history.size();
    MultiGraph g;
    g.edge_u_.reserve(n);
    g.edge_v_.reserve(n);
    for (std::size_t t = 1; t <= n; ++t) {
        g.edge_u_.push_back(static_cast<Vertex>(t));
        g.edge_v_.push_back(history.targets[t - 1]);
    }
    g.degree_.assign(n, 0);
    g.loops_.assign(n, 0);
    for (std::size_t t = 1; t <= n; ++t) {
        const Vertex s = history.targets[t - 1];
        g.degree_[t - 1] += 1;
        g.degree_[s - 1] += 1;
        if (s == t) g.loops_[t - 1] += 1;
    }
    g.build_adjacency();
    return g;
}

MultiGraph MultiGraph::from_edges(std::size_t n,
                                  std::vector<std::pair<Vertex, Vertex>> edges) {
    MultiGraph g;
    g.edge_u_.reserve(edges.size());
    g.edge_v_.reserve(edges.size());
    g.degree_.assign(n, 0);
    g.loops_.assign(n, 0);
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("MultiGraph: edge endpoint outside [1, " +
                                        std::to_string(n) + "]");
        g.edge_u_.push_back(u);
        g.edge_v_.push_back(v);
        g.degree_[u - 1] += 1;
        g.degree_[v - 1] += 1;
        if (u == v) g.loops_[u - 1] += 1;
    }
    g.build_adjacency();
    return g;
}

void MultiGraph::build_adjacency() {
    const std::size_t n = degree_.size();
    csr_offset_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) csr_offset_[i + 1] = csr_offset_[i] + degree_[i];
    csr_adjacency_.resize(csr_offset_[n]);
    std::vector<std::uint64_t> cursor(csr_offset_.begin(), csr_offset_.end() - 1);
    for (std::size_t e = 0; e < edge_u_.size(); ++e) {
        const Vertex u = edge_u_[e], v = edge_v_[e];
        csr_adjacency_[cursor[u - 1]++] = v;
        csr_adjacency_[cursor[v - 1]++] = u;
    }
}

Count MultiGraph::second_degree(Vertex v) const {
    const std::size_t i = check(v);
    Count sum = 0;
    const auto nbrs = incident(v);
    if (nbrs.size() <= 32) {
        // short lists: dedup by rescan of the handled prefix
        std::vector<Vertex> seen;
        seen.reserve(nbrs.size());
        for (const Vertex q : nbrs) {
            if (q == v) continue;
            bool dup = false;
            for (const Vertex s : seen)
                if (s == q) { dup = true; break; }
            if (dup) continue;
            seen.push_back(q);
            sum += degree_[q - 1];
        }
    } else {
        // hubs: sort a copy and skip runs
        std::vector<Vertex> sorted(nbrs.begin(), nbrs.end());
        std::sort(sorted.begin(), sorted.end());
        Vertex prev = 0;
        for (const Vertex q : sorted) {
            if (q == v || q == prev) continue;
            prev = q;
            sum += degree_[q - 1];
        }
    }
    return sum - (degree_[i] - 2ULL * loops_[i]);
}

std::vector<Count> MultiGraph::second_degrees() const {
    const std::size_t n = degree_.size();
    std::vector<Count> result(n, 0);
    std::vector<Vertex> mark(n, 0); // mark[q-1] == v means q already seen for v
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = static_cast<Vertex>(i + 1);
        Count sum = 0;
        for (std::uint64_t p = csr_offset_[i]; p < csr_offset_[i + 1]; ++p) {
            const Vertex q = csr_adjacency_[p];
            if (q == v || mark[q - 1] == v) continue;
            mark[q - 1] = v;
            sum += degree_[q - 1];
        }
        result[i] = sum - (degree_[i] - 2ULL * loops_[i]);
    }
    return result;
}

MultiGraph MultiGraph::collapse(std::uint32_t block) const {
    if (block < 1) throw std::invalid_argument("collapse: block size must be >= 1");
    const std::size_t n = vertex_count();
    if (n % block != 0)
        throw std::invalid_argument("collapse: vertex count " + std::to_string(n) +
                                    " not divisible by block size " + std::to_string(block));
    if (block == 1) return *this;
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(edge_u_.size());
    for (std::size_t e = 0; e < edge_u_.size(); ++e)
        edges.emplace_back((edge_u_[e] - 1) / block + 1, (edge_v_[e] - 1) / block + 1);
    return from_edges(n / block, std::move(edges));
}

} // namespace pasecdeg
