// O(n) sampler for the preferential attachment process.
//
// The attachment distribution at step t,
//     P(target = s) = d(s)/(2t-1)  for s < t,   P(target = t) = 1/(2t-1),
// is realized by keeping one slot per half-edge: after step t the slot
// array has length 2t and vertex v fills exactly d(v) slots. Drawing a
// uniform index over the 2t-1 options (2t-2 existing slots plus one extra
// meaning "loop at t") reproduces the display exactly, and makes every
// slot history equiprobable with weight 1/(2n-1)!!.
#pragma once

#include "pasecdeg/multigraph.hpp"
#include "pasecdeg/rng.hpp"

#include <cstdint>

namespace pasecdeg {

class GeneratorState {
public:
    explicit GeneratorState(std::uint64_t seed) : rng_(seed) {}

    // Performs step t (the next one), returns the chosen target and
    // appends both endpoints of the new edge to the slot array.
    Vertex attach_step();

    std::size_t step() const { return t_; } // steps completed so far
    const std::vector<Vertex>& slots() const { return slots_; }

    void reserve(std::size_t n) { slots_.reserve(2 * n); }

private:
    Xoshiro256PlusPlus rng_;
    std::vector<Vertex> slots_;
    std::size_t t_ = 0;
};

AttachmentHistory generate(std::size_t n, std::uint64_t seed);

// G_m^n: generates G_1^{mn} and collapses blocks of m vertices.
MultiGraph generate_collapsed(std::size_t n, std::uint32_t m, std::uint64_t seed);

} // namespace pasecdeg
