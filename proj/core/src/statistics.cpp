#include "pasecdeg/statistics.hpp"

namespace pasecdeg {

std::map<Count, Count> degree_histogram(const MultiGraph& g) {
    std::map<Count, Count> hist;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) ++hist[g.degree(v)];
    return hist;
}

std::map<Count, Count> second_degree_histogram(const MultiGraph& g) {
    std::map<Count, Count> hist;
    const auto d2 = g.second_degrees();
    for (const Count k : d2) ++hist[k];
    return hist;
}

JointCounts joint_counts(const MultiGraph& g) {
    JointCounts counts;
    counts.n = g.vertex_count();
    const auto d2 = g.second_degrees();
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        const Count l = g.degree(v);
        const Count k = d2[v - 1];
        ++counts.degree_hist[l];
        ++counts.secdeg_hist[k];
        if (g.has_loop(v))
            ++counts.P[{l, k}];
        else
            ++counts.N[{l, k}];
    }
    return counts;
}

} // namespace pasecdeg
