#include "quiver/verify.hpp"

#include <numeric>
#include <string>

namespace quiver {

namespace {

void check_index(const Quiver& q, VertexId v, const char* what) {
    if (v < 0 || v >= q.vertex_count())
        throw TraceError(std::string(what) + " references unknown vertex index " +
                         std::to_string(v));
}

} // namespace

Quiver replay_forward(const Quiver& input, const Trace& trace) {
    Quiver current = input;
    for (const MutationEvent& event : trace.events) {
        if (const auto* ins = std::get_if<InsertVertexEvent>(&event)) {
            if (ins->vertex != current.vertex_count())
                throw TraceError("insert event targets vertex index " +
                                 std::to_string(ins->vertex) + " but the next free index is " +
                                 std::to_string(current.vertex_count()));
            check_index(current, ins->tail, "insert event tail");
            check_index(current, ins->head, "insert event head");
            const Entry mult = current.entry(ins->tail, ins->head);
            if (mult <= 0)
                throw TraceError("insert event frames the absent arrow " +
                                 std::to_string(ins->tail) + " -> " + std::to_string(ins->head));
            current = insert_framed_vertex(current, Arrow{ins->tail, ins->head, mult}).first;
        } else if (const auto* mut = std::get_if<MutateAtEvent>(&event)) {
            check_index(current, mut->vertex, "mutate event");
            current = mutate(current, mut->vertex);
        } else {
            const auto& srcs = std::get<MutateSourcesEvent>(event);
            for (const VertexId s : srcs.vertices) {
                check_index(current, s, "source-mutation event");
                current = mutate(current, s);
            }
        }
    }
    return current;
}

Quiver reconstruct_ambient(const Trace& trace) {
    Quiver current = trace.final_quiver;
    for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it) {
        if (const auto* ins = std::get_if<InsertVertexEvent>(&*it)) {
            // The vertex stays; only the mutations are undone.
            check_index(current, ins->vertex, "insert event");
        } else if (const auto* mut = std::get_if<MutateAtEvent>(&*it)) {
            check_index(current, mut->vertex, "mutate event");
            current = mutate(current, mut->vertex);
        } else {
            const auto& srcs = std::get<MutateSourcesEvent>(*it);
            for (auto s = srcs.vertices.rbegin(); s != srcs.vertices.rend(); ++s) {
                check_index(current, *s, "source-mutation event");
                current = mutate(current, *s);
            }
        }
    }
    return current;
}

EmbeddingCertificate certify(const Quiver& input, const Trace& trace) {
    EmbeddingCertificate cert;
    cert.vertex_map.resize(static_cast<std::size_t>(input.vertex_count()));
    std::iota(cert.vertex_map.begin(), cert.vertex_map.end(), 0);

    cert.bipartite_ok = is_bipartite(trace.final_quiver);

    try {
        Quiver ambient = reconstruct_ambient(trace);
        if (ambient.vertex_count() >= input.vertex_count())
            cert.full_subquiver_ok = equal(restrict_to(ambient, cert.vertex_map), input);
        cert.ambient = std::move(ambient);
    } catch (const TraceError&) {
        // Structurally unusable trace: no ambient quiver, verdict stays false.
    }

    try {
        cert.mutation_equivalent_ok =
            equal(replay_forward(input, trace), trace.final_quiver);
    } catch (const TraceError&) {
    }

    return cert;
}

} // namespace quiver
