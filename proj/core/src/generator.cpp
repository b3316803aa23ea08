#include "pasecdeg/generator.hpp"

#include <stdexcept>

namespace pasecdeg {

Vertex GeneratorState::attach_step() {
    const std::size_t t = ++t_;
    const std::uint64_t j = rng_.bounded(2 * t - 1);
    const Vertex target =
        (j == 2 * t - 2) ? static_cast<Vertex>(t) : slots_[j];
    slots_.push_back(target);
    slots_.push_back(static_cast<Vertex>(t));
    return target;
}

AttachmentHistory generate(std::size_t n, std::uint64_t seed) {
    GeneratorState state(seed);
    state.reserve(n);
    AttachmentHistory history;
    history.targets.reserve(n);
    for (std::size_t t = 1; t <= n; ++t) history.targets.push_back(state.attach_step());
    return history;
}

MultiGraph generate_collapsed(std::size_t n, std::uint32_t m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("generate_collapsed: m must be >= 1");
    const auto history = generate(n * static_cast<std::size_t>(m), seed);
    return MultiGraph::from_history(history).collapse(m);
}

} // namespace pasecdeg
