#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiver/errors.hpp"

namespace quiver {

/// Exchange-matrix entries are exact signed integers.
using Entry = std::int64_t;

/// Vertices are addressed by their 0-based index, stable for the lifetime
/// of a quiver value.
using VertexId = int;

enum class Provenance { Original, Inserted };

struct VertexInfo {
    std::string label;
    Provenance provenance = Provenance::Original;

    friend bool operator==(const VertexInfo&, const VertexInfo&) = default;
};

/// One support arrow tail -> head; `multiplicity` parallel copies.
struct Arrow {
    VertexId tail = 0;
    VertexId head = 0;
    Entry multiplicity = 1;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite quiver without loops or 2-cycles, stored as its skew-symmetric
/// exchange matrix: entry(i, j) > 0 means entry(i, j) parallel arrows
/// i -> j. Each vertex carries a display label and an Original/Inserted
/// provenance flag.
///
/// Values are immutable after construction; every operation returns a new
/// quiver. Construction validates skew-symmetry (which rules out loops and
/// 2-cycles), so the invariant holds for every live value.
class Quiver {
public:
    Quiver() = default;

    /// `n` isolated vertices labeled "1".."n".
    explicit Quiver(int n);

    /// Takes ownership of a row-major n*n matrix. Throws UsageError on a
    /// size mismatch, a non-skew-symmetric matrix, or duplicate labels.
    Quiver(std::vector<VertexInfo> vertices, std::vector<Entry> matrix);

    /// Builds from a support-arrow list over vertices labeled "1".."n".
    /// Throws UsageError on loops, duplicate or opposite pairs, indices out
    /// of range, or non-positive multiplicities.
    static Quiver from_arrows(int n, const std::vector<Arrow>& arrows);
    static Quiver from_arrows(std::vector<VertexInfo> vertices,
                              const std::vector<Arrow>& arrows);

    int vertex_count() const noexcept { return n_; }

    /// Signed arrow count between two vertices; bounds-checked.
    Entry entry(VertexId i, VertexId j) const;

    const VertexInfo& vertex(VertexId i) const;
    const std::vector<VertexInfo>& vertices() const noexcept { return vertices_; }
    std::optional<VertexId> index_of(std::string_view label) const;

    /// Row-major n*n view of the exchange matrix.
    const std::vector<Entry>& matrix() const noexcept { return b_; }

    /// Support arrows sorted by (tail, head).
    std::vector<Arrow> arrows() const;

    /// Total number of arrow copies (sum of positive entries).
    Entry arrow_multiplicity() const;

private:
    int n_ = 0;
    std::vector<Entry> b_;
    std::vector<VertexInfo> vertices_;

    void validate() const;
};

/// Number of arrow copies ending at / leaving `v`.
Entry in_degree(const Quiver& q, VertexId v);
Entry out_degree(const Quiver& q, VertexId v);

/// Fomin-Zelevinsky mutation at vertex k:
///   b'[i][j] = -b[i][j]                                   if k in {i, j}
///   b'[i][j] = b[i][j] + sign(b[i][k]) * max(b[i][k] * b[k][j], 0)  otherwise
/// Involutive; preserves skew-symmetry. Throws UsageError on a bad index.
Quiver mutate(const Quiver& q, VertexId k);

/// True iff the support digraph has no directed cycle.
bool is_acyclic(const Quiver& q);

/// A topological order of the support digraph, or nullopt if cyclic.
std::optional<std::vector<VertexId>> topological_order(const Quiver& q);

/// Vertices with no incoming arrow and at least one outgoing arrow.
/// Isolated vertices are excluded (mutation there is the identity).
std::vector<VertexId> sources(const Quiver& q);

/// True iff every vertex is a source or a sink (isolated vertices qualify
/// vacuously).
bool is_bipartite(const Quiver& q);

/// Subdivision frame for Step 1: adds one Inserted vertex v with single
/// arrows head(alpha) -> v and v -> tail(alpha). The new vertex is labeled
/// "v<k>" with k continuing from the current vertex count (bumped past any
/// label already in use). Requires the arrow to be present
/// (entry(tail, head) > 0), else UsageError. Returns the extended quiver
/// and the new vertex's index.
std::pair<Quiver, VertexId> insert_framed_vertex(const Quiver& q, const Arrow& alpha);

/// Full subquiver induced on `keep`: matrix restricted to those
/// rows/columns, labels and provenance preserved, vertices ordered by
/// ascending original index. Throws UsageError on unknown or duplicate
/// vertices.
Quiver restrict_to(const Quiver& q, std::vector<VertexId> keep);

/// Matrix-level equality: same vertex count, identical entries. Labels and
/// provenance are ignored (mutation equivalence is a matrix notion).
bool equal(const Quiver& a, const Quiver& b);

} // namespace quiver
