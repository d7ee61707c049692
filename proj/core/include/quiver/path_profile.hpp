#pragma once

#include <set>
#include <utility>

#include "quiver/quiver.hpp"

namespace quiver {

/// Longest-path data of an acyclic quiver. Paths are vertex sequences
/// along positive matrix entries (parallel arrows do not multiply paths);
/// length counts arrows. A maximal path is one extendable at neither end,
/// i.e. it starts at an in-degree-0 vertex and ends at an out-degree-0
/// vertex. Only paths with at least one arrow are recorded, so isolated
/// vertices contribute nothing.
struct PathProfile {
    /// Maximum oriented path length; 0 for an arrowless quiver.
    int ell = 0;
    /// Lengths of all maximal oriented paths; empty iff no arrows.
    std::set<int> maximal_lengths;
    /// (tail, head) pairs lying on at least one path of length `ell`;
    /// nonempty iff ell >= 1.
    std::set<std::pair<VertexId, VertexId>> on_max_path;

    friend bool operator==(const PathProfile&, const PathProfile&) = default;
};

/// Computes the profile by dynamic programming over a topological order.
/// Throws DomainError on a cyclic quiver.
PathProfile path_profile(const Quiver& q);

/// (tail, head) pairs lying on at least one oriented path of length
/// exactly `length`. For length == path_profile(q).ell this agrees with
/// PathProfile::on_max_path; unlike it, the length may be prescribed
/// freely. Throws DomainError on a cyclic quiver.
std::set<std::pair<VertexId, VertexId>> arrows_on_paths_of_length(const Quiver& q,
                                                                  int length);

} // namespace quiver
