// Attachment histories and the immutable multigraph view built from them.
//
// A history of length n encodes one realization of the preferential
// attachment process: vertex t (1-based) attached to targets[t-1], where
// 1 <= targets[t-1] <= t and equality means a loop. Loops count twice in
// the degree. The second degree of v is the number of half-edges at v's
// distinct neighbors (v excluded) that are not paired with a half-edge
// of v itself:
//
//     d2(v) = sum_{q in N(v)\{v}} d(q) - (d(v) - 2*loops(v))
//
// so an edge between two neighbors counts twice, a loop at a neighbor
// counts twice, and multi-edges count with multiplicity.
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pasecdeg {

using Vertex = std::uint32_t; // 1-based everywhere
using Count = std::uint64_t;

struct AttachmentHistory {
    std::vector<Vertex> targets; // targets[t-1] = attachment target of vertex t

    AttachmentHistory() = default;
    explicit AttachmentHistory(std::vector<Vertex> t);

    std::size_t size() const { return targets.size(); }

    // Throws std::invalid_argument unless 1 <= targets[t-1] <= t for all t.
    void validate() const;
};

class MultiGraph {
public:
    static MultiGraph from_history(const AttachmentHistory& history);

    // General multigraph from an explicit edge list (endpoints in [1, n]).
    // Needed for collapsed graphs, which are not attachment histories.
    static MultiGraph from_edges(std::size_t n,
                                 std::vector<std::pair<Vertex, Vertex>> edges);

    std::size_t vertex_count() const { return degree_.size(); }
    std::size_t edge_count() const { return edge_u_.size(); }

    Count degree(Vertex v) const { return degree_[check(v)]; }
    std::uint32_t loop_count(Vertex v) const { return loops_[check(v)]; }
    bool has_loop(Vertex v) const { return loop_count(v) > 0; }

    Count second_degree(Vertex v) const;

    // All second degrees in one pass, O(n + sum deg).
    std::vector<Count> second_degrees() const;

    // Half-edge endpoints incident to v (multiset; a loop lists v twice).
    std::span<const Vertex> incident(Vertex v) const {
        const std::size_t i = check(v);
        return {csr_adjacency_.data() + csr_offset_[i],
                csr_adjacency_.data() + csr_offset_[i + 1]};
    }

    const std::vector<Vertex>& edge_sources() const { return edge_u_; }
    const std::vector<Vertex>& edge_targets() const { return edge_v_; }

    // G_m^{n/m}: vertex v maps to ceil(v/m), edges carried over. Requires
    // m >= 1 and m | n. block=1 returns a copy.
    MultiGraph collapse(std::uint32_t block) const;

private:
    MultiGraph() = default;
    void build_adjacency();
    std::size_t check(Vertex v) const;

    std::vector<Vertex> edge_u_, edge_v_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::uint32_t> loops_;
    std::vector<std::uint64_t> csr_offset_;
    std::vector<Vertex> csr_adjacency_;
};

} // namespace pasecdeg
