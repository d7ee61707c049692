#include "quiver/path_profile.hpp"

#include <algorithm>

namespace quiver {

namespace {

std::vector<std::vector<VertexId>> support_adjacency(const Quiver& q) {
    const int n = q.vertex_count();
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.matrix()[static_cast<std::size_t>(i) * n + j] > 0)
                adj[static_cast<std::size_t>(i)].push_back(j);
    return adj;
}

std::vector<VertexId> topological_order_or_throw(const Quiver& q, const char* op) {
    auto order = topological_order(q);
    if (!order)
        throw DomainError(std::string(op) + ": quiver has an oriented cycle");
    return *std::move(order);
}

} // namespace

PathProfile path_profile(const Quiver& q) {
    const auto order = topological_order_or_throw(q, "path_profile");
    const auto adj = support_adjacency(q);
    const int n = q.vertex_count();

    // Longest path ending at / starting from each vertex.
    std::vector<int> longest_in(static_cast<std::size_t>(n), 0);
    std::vector<int> longest_out(static_cast<std::size_t>(n), 0);
    for (const VertexId u : order)
        for (const VertexId w : adj[static_cast<std::size_t>(u)])
            longest_in[static_cast<std::size_t>(w)] =
                std::max(longest_in[static_cast<std::size_t>(w)],
                         longest_in[static_cast<std::size_t>(u)] + 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (const VertexId w : adj[static_cast<std::size_t>(*it)])
            longest_out[static_cast<std::size_t>(*it)] =
                std::max(longest_out[static_cast<std::size_t>(*it)],
                         longest_out[static_cast<std::size_t>(w)] + 1);

    PathProfile profile;
    for (int v = 0; v < n; ++v)
        profile.ell = std::max(profile.ell, longest_in[static_cast<std::size_t>(v)]);

    // In an acyclic quiver a path is maximal exactly when it starts at an
    // in-degree-0 vertex and ends at an out-degree-0 vertex; splicing never
    // repeats a vertex. Collect the achievable source-to-here lengths.
    std::vector<std::vector<char>> from_source(
        static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const VertexId u : order) {
        if (in_degree(q, u) == 0)
            from_source[static_cast<std::size_t>(u)][0] = 1;
        for (const VertexId w : adj[static_cast<std::size_t>(u)])
            for (int len = 0; len + 1 < n; ++len)
                if (from_source[static_cast<std::size_t>(u)][static_cast<std::size_t>(len)])
                    from_source[static_cast<std::size_t>(w)][static_cast<std::size_t>(len + 1)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (out_degree(q, v) == 0)
            for (int len = 1; len < n; ++len)
                if (from_source[static_cast<std::size_t>(v)][static_cast<std::size_t>(len)])
                    profile.maximal_lengths.insert(len);

    if (profile.ell >= 1)
        for (int i = 0; i < n; ++i)
            for (const VertexId j : adj[static_cast<std::size_t>(i)])
                if (longest_in[static_cast<std::size_t>(i)] + 1 +
                        longest_out[static_cast<std::size_t>(j)] ==
                    profile.ell)
                    profile.on_max_path.insert({i, j});

    return profile;
}

std::set<std::pair<VertexId, VertexId>> arrows_on_paths_of_length(const Quiver& q,
                                                                  int length) {
    const auto order = topological_order_or_throw(q, "arrows_on_paths_of_length");
    const auto adj = support_adjacency(q);
    const int n = q.vertex_count();

    std::set<std::pair<VertexId, VertexId>> out;
    if (length < 1 || n == 0)
        return out;

    // Achievable path lengths ending at / starting from each vertex, with
    // arbitrary endpoints. Any prefix and suffix splice into a genuine path
    // because the quiver is acyclic.
    std::vector<std::vector<char>> ending_at(
        static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<std::vector<char>> starting_at = ending_at;
    for (const VertexId u : order) {
        ending_at[static_cast<std::size_t>(u)][0] = 1;
        for (const VertexId w : adj[static_cast<std::size_t>(u)])
            for (int len = 0; len + 1 < n; ++len)
                if (ending_at[static_cast<std::size_t>(u)][static_cast<std::size_t>(len)])
                    ending_at[static_cast<std::size_t>(w)][static_cast<std::size_t>(len + 1)] = 1;
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const VertexId u = *it;
        starting_at[static_cast<std::size_t>(u)][0] = 1;
        for (const VertexId w : adj[static_cast<std::size_t>(u)])
            for (int len = 0; len + 1 < n; ++len)
                if (starting_at[static_cast<std::size_t>(w)][static_cast<std::size_t>(len)])
                    starting_at[static_cast<std::size_t>(u)][static_cast<std::size_t>(len + 1)] = 1;
    }

    for (int i = 0; i < n; ++i)
        for (const VertexId j : adj[static_cast<std::size_t>(i)])
            for (int prefix = 0; prefix <= length - 1; ++prefix) {
                const int suffix = length - 1 - prefix;
                if (prefix < n && suffix < n &&
                    ending_at[static_cast<std::size_t>(i)][static_cast<std::size_t>(prefix)] &&
                    starting_at[static_cast<std::size_t>(j)][static_cast<std::size_t>(suffix)]) {
                    out.insert({i, j});
                    break;
                }
            }
    return out;
}

} // namespace quiver
