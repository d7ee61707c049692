#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quiver/quiver.hpp"

namespace quiver {

/// Parameters for the seeded random-quiver generator. Identical specs
/// yield identical quivers.
struct GenSpec {
    int n = 0;
    double edge_probability = 0.0;
    Entry max_multiplicity = 1;
    std::uint64_t seed = 0;
};

/// Draws a uniformly random topological order, then includes each forward
/// pair with `edge_probability` and a uniform multiplicity in
/// [1, max_multiplicity]. Acyclic by construction.
Quiver random_acyclic(const GenSpec& spec);

/// Streams every labeled quiver on exactly `n` vertices with entries in
/// [-max_multiplicity, max_multiplicity] whose support is acyclic, in a
/// fixed odometer order (duplicate-free, stable across runs). Guarded to
/// n <= 5; beyond that the corpus explodes (ResourceError).
class SmallQuiverEnumerator {
public:
    SmallQuiverEnumerator(int n, Entry max_multiplicity);

    /// Next quiver in the stream, or nullopt when exhausted.
    std::optional<Quiver> next();

private:
    int n_;
    Entry max_mult_;
    std::vector<Entry> digits_; // upper-triangle entries, row-major
    bool exhausted_ = false;
    bool first_ = true;

    bool advance();
    std::optional<Quiver> materialize() const;
};

} // namespace quiver
