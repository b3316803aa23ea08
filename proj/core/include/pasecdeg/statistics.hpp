// Observables of one realized graph: the degree histogram #(d), the
// second-degree histogram X_n(k), and the joint census split into
// loopless vertices N(l,k) and looped vertices P(l,k).
#pragma once

#include "pasecdeg/multigraph.hpp"

#include <map>
#include <utility>

namespace pasecdeg {

struct JointCounts {
    Count n = 0;
    std::map<std::pair<Count, Count>, Count> N; // (l, k) -> loopless vertex count
    std::map<std::pair<Count, Count>, Count> P; // (l, k) -> looped vertex count
    std::map<Count, Count> degree_hist;         // d -> count
    std::map<Count, Count> secdeg_hist;         // k -> count, this is X_n(k)
};

std::map<Count, Count> degree_histogram(const MultiGraph& g);
std::map<Count, Count> second_degree_histogram(const MultiGraph& g);
JointCounts joint_counts(const MultiGraph& g);

} // namespace pasecdeg
