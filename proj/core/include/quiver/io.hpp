#pragma once

#include <string>

#include "quiver/trace.hpp"

namespace quiver {

// JSON document formats.
//
// Quiver document:
//   {
//     "vertices": [{"label": "1", "provenance": "original"}, ...],
//     "arrows":   [{"from": "1", "to": "2", "mult": 1}, ...]
//   }
// Labels are unique, every endpoint resolves, loops and opposite pairs are
// rejected. "mult" defaults to 1 on input and is always written.
//
// Trace document:
//   {
//     "input":  <quiver document>,
//     "ell":    2,
//     "j":      1,
//     "events": [{"kind": "insert_vertex", "vertex": "v4", "head": "2", "tail": "1"},
//                {"kind": "mutate_at", "vertex": "v4"},
//                {"kind": "mutate_sources", "vertices": ["1"]}],
//     "final":  <quiver document>
//   }
// Event vertices are referenced by label and resolve against the final
// quiver's registry, whose first entries must coincide with the input's.
//
// Serialization is canonical: fixed field order, vertices in index order,
// arrows sorted by (tail, head), two-space indentation, trailing newline.
// parse(serialize(x)) == x, and serialize(parse(doc)) is the canonical
// form of doc.

/// Throws SchemaError with field location on any validation failure.
Quiver parse_quiver(const std::string& text);
std::string serialize_quiver(const Quiver& q);

Trace parse_trace(const std::string& text);
std::string serialize_trace(const Trace& trace);

/// Graphviz text with one edge per arrow copy (multiplicity m emits m
/// parallel edges); inserted vertices are drawn dashed.
std::string emit_dot(const Quiver& q);

} // namespace quiver
