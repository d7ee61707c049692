#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "quiver/path_profile.hpp"
#include "quiver/quiver.hpp"

namespace quiver {

/// Step 1 bookkeeping: a new vertex `vertex` was framed onto the arrow
/// tail -> head (arrows head -> vertex and vertex -> tail added).
/// Always immediately followed by MutateAtEvent on the same vertex.
struct InsertVertexEvent {
    VertexId vertex = 0;
    VertexId head = 0;
    VertexId tail = 0;

    friend bool operator==(const InsertVertexEvent&, const InsertVertexEvent&) = default;
};

struct MutateAtEvent {
    VertexId vertex = 0;

    friend bool operator==(const MutateAtEvent&, const MutateAtEvent&) = default;
};

/// One Step 2 round: simultaneous mutation at all sources. The recorded
/// set is ascending and pairwise non-adjacent in the state it applies to,
/// so sequential replay in any order yields the same quiver.
struct MutateSourcesEvent {
    std::vector<VertexId> vertices;

    friend bool operator==(const MutateSourcesEvent&, const MutateSourcesEvent&) = default;
};

using MutationEvent = std::variant<InsertVertexEvent, MutateAtEvent, MutateSourcesEvent>;

/// Complete, replayable record of one run of the construction. Replaying
/// `events` forward from `input` reproduces `final_quiver` exactly. The
/// first 2*j events are the Step-1 insert/mutate pairs (j is the state
/// index at which Step 2 begins); everything after is a MutateSourcesEvent.
struct Trace {
    Quiver input;
    std::vector<MutationEvent> events;
    int j = 0;
    int ell = 0;
    Quiver final_quiver;
};

/// Observability counters for the termination and bound claims.
/// inserted_vertices always equals step1_iterations.
struct RunReport {
    std::uint64_t step1_iterations = 0;
    std::uint64_t step2_iterations = 0;
    std::uint64_t inserted_vertices = 0;
    PathProfile input_profile;
    /// Snapshot after each Step-1 insert/mutate pair.
    std::vector<PathProfile> step1_profiles;
    /// Snapshot after each Step-2 source round.
    std::vector<PathProfile> step2_profiles;
};

} // namespace quiver
