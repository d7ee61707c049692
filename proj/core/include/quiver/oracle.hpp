#pragma once

#include <utility>
#include <vector>

#include "quiver/path_profile.hpp"
#include "quiver/quiver.hpp"

namespace quiver {

// Naive reference implementations for differential testing. Deliberately
// independent of the matrix-based code paths they cross-check: quivers as
// flat arrow lists, paths by exhaustive DFS.

/// One entry per arrow copy.
struct ArrowListQuiver {
    int n = 0;
    std::vector<std::pair<VertexId, VertexId>> arrows;
};

ArrowListQuiver to_arrow_list(const Quiver& q);

/// Throws UsageError if the list carries loops or opposite pairs.
Quiver to_matrix(const ArrowListQuiver& q);

/// Arrow-level mutation at k: add a composite i -> j for every pair of
/// copies (i -> k, k -> j), reverse all arrows incident to k, then cancel
/// opposite pairs maximally. Matches matrix mutation entry for entry.
ArrowListQuiver oracle_mutate(const ArrowListQuiver& q, VertexId k);

/// Every oriented path with at least one arrow, as a vertex sequence, in
/// lexicographic order. Throws DomainError on a cyclic quiver and
/// ResourceError for more than 12 vertices.
std::vector<std::vector<VertexId>> enumerate_paths(const Quiver& q);

/// PathProfile recomputed from the exhaustive enumeration; equals
/// path_profile(q) on every acyclic quiver small enough to enumerate.
PathProfile profile_from_paths(const Quiver& q);

} // namespace quiver
