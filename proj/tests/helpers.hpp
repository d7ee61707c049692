#pragma once

// Shared test builders. Arrows are written as {tail, head, mult} triples
// over 0-based vertex indices.

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "quiver/generate.hpp"
#include "quiver/quiver.hpp"

namespace quiver::testing {

inline Quiver make_quiver(int n, const std::vector<std::array<int, 3>>& arrows) {
    std::vector<Arrow> list;
    list.reserve(arrows.size());
    for (const auto& [tail, head, mult] : arrows)
        list.push_back({tail, head, mult});
    return Quiver::from_arrows(n, list);
}

inline std::set<std::pair<VertexId, VertexId>> support(const Quiver& q) {
    std::set<std::pair<VertexId, VertexId>> out;
    for (const Arrow& a : q.arrows())
        out.insert({a.tail, a.head});
    return out;
}

inline Quiver random_quiver(int n, std::uint64_t seed, double edge_probability = 0.4,
                            Entry max_multiplicity = 3) {
    return random_acyclic({n, edge_probability, max_multiplicity, seed});
}

} // namespace quiver::testing
