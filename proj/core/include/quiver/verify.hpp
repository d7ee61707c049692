#pragma once

#include <optional>
#include <vector>

#include "quiver/trace.hpp"

namespace quiver {

/// Per-instance certificate that the input quiver embeds as a full
/// subquiver of a quiver mutation-equivalent to the bipartite final
/// quiver. The ambient quiver R is reconstructed by reverse replay;
/// `vertex_map` is the identity injection of input vertices into R.
struct EmbeddingCertificate {
    /// Absent only when the trace is structurally unusable.
    std::optional<Quiver> ambient;
    std::vector<VertexId> vertex_map;
    bool bipartite_ok = false;
    bool full_subquiver_ok = false;
    bool mutation_equivalent_ok = false;

    bool accepted() const noexcept {
        return bipartite_ok && full_subquiver_ok && mutation_equivalent_ok;
    }
};

/// Re-executes the event list forward from `input`. Throws TraceError if
/// an event references an unknown vertex, an insertion does not target the
/// next free index, or the framed arrow is absent. The result equals
/// trace.final_quiver for every well-formed trace.
Quiver replay_forward(const Quiver& input, const Trace& trace);

/// Reconstructs the ambient quiver R by applying the mutation events in
/// reverse order to trace.final_quiver (mutation is an involution);
/// insertions are skipped, so R lives on the full final vertex set.
/// Mutation at a vertex only reads matrix entries indexed by that vertex's
/// neighborhood, so the reverse replay restores the input's entries among
/// the input vertices: restrict_to(R, input vertices) = trace.input.
Quiver reconstruct_ambient(const Trace& trace);

/// Checks the three verdicts:
///   bipartite_ok           - trace.final_quiver is bipartite;
///   full_subquiver_ok      - restrict_to(reconstruct_ambient(trace),
///                            input vertices) equals `input` exactly;
///   mutation_equivalent_ok - forward replay of the recorded events from
///                            `input` reaches trace.final_quiver.
/// Failures are verdicts, not errors; structural trace defects surface as
/// rejected certificates.
EmbeddingCertificate certify(const Quiver& input, const Trace& trace);

} // namespace quiver
