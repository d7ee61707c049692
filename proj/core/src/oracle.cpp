#include "quiver/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace quiver {

ArrowListQuiver to_arrow_list(const Quiver& q) {
    ArrowListQuiver out;
    out.n = q.vertex_count();
    for (const Arrow& a : q.arrows())
        for (Entry copy = 0; copy < a.multiplicity; ++copy)
            out.arrows.push_back({a.tail, a.head});
    return out;
}

Quiver to_matrix(const ArrowListQuiver& q) {
    std::map<std::pair<VertexId, VertexId>, Entry> counts;
    for (const auto& a : q.arrows)
        ++counts[a];
    std::vector<Arrow> arrows;
    for (const auto& [pair, count] : counts) {
        if (counts.contains({pair.second, pair.first}) && pair.first > pair.second)
            throw UsageError("to_matrix: arrow list contains a 2-cycle");
        arrows.push_back({pair.first, pair.second, count});
    }
    return Quiver::from_arrows(q.n, arrows);
}

ArrowListQuiver oracle_mutate(const ArrowListQuiver& q, VertexId k) {
    if (k < 0 || k >= q.n)
        throw UsageError("oracle_mutate: vertex index out of range");

    std::vector<std::pair<VertexId, VertexId>> raw;
    // One composite per pair of copies through k.
    for (const auto& into : q.arrows)
        if (into.second == k)
            for (const auto& outof : q.arrows)
                if (outof.first == k)
                    raw.push_back({into.first, outof.second});
    // Reverse everything incident to k, keep the rest.
    for (const auto& a : q.arrows) {
        if (a.first == k || a.second == k)
            raw.push_back({a.second, a.first});
        else
            raw.push_back(a);
    }

    // Cancel opposite pairs maximally.
    std::map<std::pair<VertexId, VertexId>, Entry> counts;
    for (const auto& a : raw)
        ++counts[a];
    ArrowListQuiver out;
    out.n = q.n;
    for (const auto& [pair, count] : counts) {
        const auto rev = counts.find({pair.second, pair.first});
        // Each unordered pair is settled once, at its first key.
        if (pair.first > pair.second && rev != counts.end())
            continue;
        const Entry opposite = rev == counts.end() ? 0 : rev->second;
        const Entry net = count - opposite;
        for (Entry copy = 0; copy < std::abs(net); ++copy)
            out.arrows.push_back(net > 0 ? pair
                                         : std::make_pair(pair.second, pair.first));
    }
    std::sort(out.arrows.begin(), out.arrows.end());
    return out;
}

std::vector<std::vector<VertexId>> enumerate_paths(const Quiver& q) {
    const int n = q.vertex_count();
    if (n > 12)
        throw ResourceError("enumerate_paths: refusing to enumerate beyond 12 vertices");
    if (!is_acyclic(q))
        throw DomainError("enumerate_paths: quiver has an oriented cycle");

    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (const Arrow& a : q.arrows())
        adj[static_cast<std::size_t>(a.tail)].push_back(a.head);

    std::vector<std::vector<VertexId>> paths;
    std::vector<VertexId> path;
    auto extend = [&](auto&& self, VertexId v) -> void {
        path.push_back(v);
        if (path.size() >= 2)
            paths.push_back(path);
        for (const VertexId w : adj[static_cast<std::size_t>(v)])
            self(self, w);
        path.pop_back();
    };
    for (int v = 0; v < n; ++v)
        extend(extend, v);
    std::sort(paths.begin(), paths.end());
    return paths;
}

PathProfile profile_from_paths(const Quiver& q) {
    const auto paths = enumerate_paths(q);

    PathProfile profile;
    for (const auto& p : paths)
        profile.ell = std::max(profile.ell, static_cast<int>(p.size()) - 1);
    for (const auto& p : paths) {
        const int length = static_cast<int>(p.size()) - 1;
        if (in_degree(q, p.front()) == 0 && out_degree(q, p.back()) == 0)
            profile.maximal_lengths.insert(length);
        if (length == profile.ell && profile.ell >= 1)
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                profile.on_max_path.insert({p[i], p[i + 1]});
    }
    return profile;
}

} // namespace quiver
