#include "quiver/quiver.hpp"

#include <algorithm>
#include <unordered_set>

namespace quiver {

namespace {

std::vector<VertexInfo> default_vertices(int n) {
    std::vector<VertexInfo> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back({std::to_string(i + 1), Provenance::Original});
    return out;
}

int sign_of(Entry x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

} // namespace

Quiver::Quiver(int n)
    : n_(n), b_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
      vertices_(default_vertices(n)) {
    if (n < 0)
        throw UsageError("quiver: negative vertex count");
}

Quiver::Quiver(std::vector<VertexInfo> vertices, std::vector<Entry> matrix)
    : n_(static_cast<int>(vertices.size())), b_(std::move(matrix)),
      vertices_(std::move(vertices)) {
    validate();
}

void Quiver::validate() const {
    const auto n = static_cast<std::size_t>(n_);
    if (b_.size() != n * n)
        throw UsageError("quiver: matrix size does not match vertex count");
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j)
            if (b_[static_cast<std::size_t>(i) * n + j] !=
                -b_[static_cast<std::size_t>(j) * n + i])
                throw UsageError("quiver: matrix is not skew-symmetric at (" +
                                 std::to_string(i) + ", " + std::to_string(j) + ")");
    std::unordered_set<std::string> seen;
    for (const VertexInfo& v : vertices_)
        if (!seen.insert(v.label).second)
            throw UsageError("quiver: duplicate vertex label \"" + v.label + "\"");
}

Quiver Quiver::from_arrows(int n, const std::vector<Arrow>& arrows) {
    return from_arrows(default_vertices(n), arrows);
}

Quiver Quiver::from_arrows(std::vector<VertexInfo> vertices,
                           const std::vector<Arrow>& arrows) {
    const int n = static_cast<int>(vertices.size());
    std::vector<Entry> b(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const Arrow& a : arrows) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw UsageError("quiver: arrow endpoint out of range");
        if (a.tail == a.head)
            throw UsageError("quiver: loop at vertex " + std::to_string(a.tail));
        if (a.multiplicity <= 0)
            throw UsageError("quiver: non-positive arrow multiplicity");
        const auto fwd = static_cast<std::size_t>(a.tail) * n + a.head;
        const auto rev = static_cast<std::size_t>(a.head) * n + a.tail;
        if (b[fwd] != 0 || b[rev] != 0)
            throw UsageError("quiver: duplicate or opposite arrow between " +
                             std::to_string(a.tail) + " and " + std::to_string(a.head));
        b[fwd] = a.multiplicity;
        b[rev] = -a.multiplicity;
    }
    return Quiver(std::move(vertices), std::move(b));
}

Entry Quiver::entry(VertexId i, VertexId j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw UsageError("quiver: entry index out of range");
    return b_[static_cast<std::size_t>(i) * n_ + j];
}

const VertexInfo& Quiver::vertex(VertexId i) const {
    if (i < 0 || i >= n_)
        throw UsageError("quiver: vertex index out of range");
    return vertices_[static_cast<std::size_t>(i)];
}

std::optional<VertexId> Quiver::index_of(std::string_view label) const {
    for (int i = 0; i < n_; ++i)
        if (vertices_[static_cast<std::size_t>(i)].label == label)
            return i;
    return std::nullopt;
}

std::vector<Arrow> Quiver::arrows() const {
    std::vector<Arrow> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Entry m = b_[static_cast<std::size_t>(i) * n_ + j];
            if (m > 0)
                out.push_back({i, j, m});
        }
    return out;
}

Entry Quiver::arrow_multiplicity() const {
    Entry total = 0;
    for (const Entry e : b_)
        if (e > 0)
            total += e;
    return total;
}

Entry in_degree(const Quiver& q, VertexId v) {
    Entry total = 0;
    for (int i = 0; i < q.vertex_count(); ++i) {
        const Entry e = q.entry(i, v);
        if (e > 0)
            total += e;
    }
    return total;
}

Entry out_degree(const Quiver& q, VertexId v) {
    Entry total = 0;
    for (int j = 0; j < q.vertex_count(); ++j) {
        const Entry e = q.entry(v, j);
        if (e > 0)
            total += e;
    }
    return total;
}

Quiver mutate(const Quiver& q, VertexId k) {
    const int n = q.vertex_count();
    if (k < 0 || k >= n)
        throw UsageError("mutate: vertex index " + std::to_string(k) + " out of range");
    const std::vector<Entry>& b = q.matrix();
    std::vector<Entry> out(b.size());
    auto at = [&](int i, int j) { return b[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Entry value;
            if (i == k || j == k)
                value = -at(i, j);
            else
                value = at(i, j) +
                        sign_of(at(i, k)) * std::max<Entry>(at(i, k) * at(k, j), 0);
            out[static_cast<std::size_t>(i) * n + j] = value;
        }
    // The constructor re-checks skew-symmetry, so every mutation result is
    // validated.
    return Quiver(q.vertices(), std::move(out));
}

std::optional<std::vector<VertexId>> topological_order(const Quiver& q) {
    const int n = q.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.matrix()[static_cast<std::size_t>(i) * n + j] > 0)
                ++indeg[static_cast<std::size_t>(j)];
    std::vector<VertexId> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<VertexId> ready;
    for (int v = n - 1; v >= 0; --v)
        if (indeg[static_cast<std::size_t>(v)] == 0)
            ready.push_back(v);
    while (!ready.empty()) {
        const VertexId v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (int w = n - 1; w >= 0; --w)
            if (q.matrix()[static_cast<std::size_t>(v) * n + w] > 0 &&
                --indeg[static_cast<std::size_t>(w)] == 0)
                ready.push_back(w);
    }
    if (static_cast<int>(order.size()) != n)
        return std::nullopt;
    return order;
}

bool is_acyclic(const Quiver& q) { return topological_order(q).has_value(); }

std::vector<VertexId> sources(const Quiver& q) {
    std::vector<VertexId> out;
    for (int v = 0; v < q.vertex_count(); ++v)
        if (in_degree(q, v) == 0 && out_degree(q, v) > 0)
            out.push_back(v);
    return out;
}

bool is_bipartite(const Quiver& q) {
    for (int v = 0; v < q.vertex_count(); ++v)
        if (in_degree(q, v) > 0 && out_degree(q, v) > 0)
            return false;
    return true;
}

std::pair<Quiver, VertexId> insert_framed_vertex(const Quiver& q, const Arrow& alpha) {
    const int n = q.vertex_count();
    if (alpha.tail < 0 || alpha.tail >= n || alpha.head < 0 || alpha.head >= n)
        throw UsageError("insert_framed_vertex: arrow endpoint out of range");
    if (q.entry(alpha.tail, alpha.head) <= 0)
        throw UsageError("insert_framed_vertex: arrow " + std::to_string(alpha.tail) +
                         " -> " + std::to_string(alpha.head) + " is absent");

    const int m = n + 1;
    std::vector<Entry> b(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b[static_cast<std::size_t>(i) * m + j] =
                q.matrix()[static_cast<std::size_t>(i) * n + j];
    const VertexId v = n;
    b[static_cast<std::size_t>(alpha.head) * m + v] = 1;
    b[static_cast<std::size_t>(v) * m + alpha.head] = -1;
    b[static_cast<std::size_t>(v) * m + alpha.tail] = 1;
    b[static_cast<std::size_t>(alpha.tail) * m + v] = -1;

    std::vector<VertexInfo> vertices = q.vertices();
    int k = m;
    std::string label = "v" + std::to_string(k);
    while (q.index_of(label).has_value())
        label = "v" + std::to_string(++k);
    vertices.push_back({label, Provenance::Inserted});

    return {Quiver(std::move(vertices), std::move(b)), v};
}

Quiver restrict_to(const Quiver& q, std::vector<VertexId> keep) {
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw UsageError("restrict_to: duplicate vertex in restriction set");
    for (const VertexId v : keep)
        if (v < 0 || v >= q.vertex_count())
            throw UsageError("restrict_to: vertex " + std::to_string(v) + " out of range");

    const int m = static_cast<int>(keep.size());
    std::vector<Entry> b(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    std::vector<VertexInfo> vertices;
    vertices.reserve(keep.size());
    for (int i = 0; i < m; ++i) {
        vertices.push_back(q.vertex(keep[static_cast<std::size_t>(i)]));
        for (int j = 0; j < m; ++j)
            b[static_cast<std::size_t>(i) * m + j] =
                q.entry(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
    }
    return Quiver(std::move(vertices), std::move(b));
}

bool equal(const Quiver& a, const Quiver& b) {
    return a.vertex_count() == b.vertex_count() && a.matrix() == b.matrix();
}

} // namespace quiver
