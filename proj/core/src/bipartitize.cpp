#include "quiver/bipartitize.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "rng.hpp"

namespace quiver {

namespace {

std::string show_lengths(const std::set<int>& lengths) {
    std::string out = "{";
    for (const int len : lengths) {
        if (out.size() > 1)
            out += ", ";
        out += std::to_string(len);
    }
    return out + "}";
}

std::uint64_t default_step1_cap(const Quiver& q, int ell) {
    return 10ull * static_cast<std::uint64_t>(std::max(ell, 0)) *
           static_cast<std::uint64_t>(q.arrow_multiplicity());
}

} // namespace

std::vector<Arrow> subdividable_arrows(const Quiver& q, int ell) {
    const auto covered = arrows_on_paths_of_length(q, ell);
    std::vector<Arrow> out;
    for (const Arrow& a : q.arrows())
        if (!covered.contains({a.tail, a.head}))
            out.push_back(a);
    return out; // q.arrows() is already sorted by (tail, head)
}

std::optional<Arrow> pick_subdividable_arrow(const Quiver& q, int ell) {
    auto candidates = subdividable_arrows(q, ell);
    if (candidates.empty())
        return std::nullopt;
    return candidates.front();
}

StepOutcome step1(const Quiver& q, const ConstructionOptions& options) {
    StepOutcome out;
    out.report.input_profile = path_profile(q); // DomainError on a cyclic input
    const int ell = out.report.input_profile.ell;
    const std::uint64_t cap =
        options.step1_cap ? *options.step1_cap : default_step1_cap(q, ell);
    std::mt19937_64 rng(options.arrow_choice_seed.value_or(0));

    Quiver current = q;
    std::uint64_t iterations = 0;
    const auto partial = [&](const Quiver& state) {
        return Trace{q, out.events, static_cast<int>(iterations), ell, state};
    };

    for (;;) {
        const auto candidates = subdividable_arrows(current, ell);
        if (candidates.empty())
            break;
        if (iterations >= cap)
            throw IterationCapExceeded(
                "step 1 exceeded its iteration cap of " + std::to_string(cap) +
                    "; the construction is expected to terminate",
                partial(current));

        const Arrow alpha =
            options.arrow_choice_seed
                ? candidates[detail::bounded(rng, candidates.size())]
                : candidates.front();
        auto [framed, v] = insert_framed_vertex(current, alpha);
        out.events.push_back(InsertVertexEvent{v, alpha.head, alpha.tail});
        // The framed state is transiently cyclic (tail -> head -> v -> tail);
        // mutating at v collapses the cycle and performs the subdivision.
        current = mutate(framed, v);
        out.events.push_back(MutateAtEvent{v});
        ++iterations;

        if (!is_acyclic(current))
            throw InvariantViolation(
                "step 1 iteration " + std::to_string(iterations) +
                    " produced an oriented cycle after mutating at vertex " +
                    std::to_string(v),
                partial(current));
        PathProfile profile = path_profile(current);
        if (profile.ell != ell)
            throw InvariantViolation(
                "longest path length moved from " + std::to_string(ell) + " to " +
                    std::to_string(profile.ell) + " during step 1",
                partial(current));
        out.report.step1_profiles.push_back(std::move(profile));
    }

    out.report.step1_iterations = iterations;
    out.report.inserted_vertices = iterations;

    if (ell >= 1) {
        const PathProfile profile = path_profile(current);
        if (profile.maximal_lengths != std::set<int>{ell})
            throw InvariantViolation(
                "maximal path lengths " + show_lengths(profile.maximal_lengths) +
                    " after step 1 are not all equal to " + std::to_string(ell),
                partial(current));
    }
    out.quiver = std::move(current);
    return out;
}

StepOutcome step2(const Quiver& q, int ell, int j, const ConstructionOptions&) {
    StepOutcome out;
    if (!is_acyclic(q))
        throw DomainError("step2: quiver has an oriented cycle");

    Quiver current = q;
    const int bound = std::max(0, ell - 1);
    int rounds = 0;
    const auto partial = [&](const Quiver& state) {
        return Trace{q, out.events, j, ell, state};
    };

    while (!is_bipartite(current)) {
        if (rounds > bound)
            break; // one excess round recorded below; stop and report
        const std::vector<VertexId> round_sources = sources(current);
        for (std::size_t a = 0; a < round_sources.size(); ++a)
            for (std::size_t b = a + 1; b < round_sources.size(); ++b)
                if (current.entry(round_sources[a], round_sources[b]) != 0)
                    throw InvariantViolation("sources are adjacent; quiver state is corrupt",
                                             partial(current));
        for (const VertexId s : round_sources)
            current = mutate(current, s);
        out.events.push_back(MutateSourcesEvent{round_sources});
        ++rounds;

        PathProfile profile;
        try {
            profile = path_profile(current);
        } catch (const DomainError&) {
            throw InvariantViolation(
                "step 2 round " + std::to_string(rounds) + " produced an oriented cycle",
                partial(current));
        }
        const int expected = std::max(1, ell - rounds);
        for (const int len : profile.maximal_lengths)
            if (len != 1 && len != expected)
                throw InvariantViolation(
                    "path-length law violated in step 2 round " + std::to_string(rounds) +
                        ": maximal lengths " + show_lengths(profile.maximal_lengths) +
                        " not within {1, " + std::to_string(expected) + "}",
                    partial(current));
        out.report.step2_profiles.push_back(std::move(profile));
    }

    if (!is_bipartite(current))
        throw InvariantViolation(
            "quiver is still not bipartite after " + std::to_string(rounds) +
                " source rounds (bound " + std::to_string(bound) + ")",
            partial(current));
    if (rounds > bound)
        throw InvariantViolation(
            "step 2 needed " + std::to_string(rounds) +
                " source rounds, above the bound max(0, ell - 1) = " +
                std::to_string(bound),
            partial(current));

    out.report.step2_iterations = static_cast<std::uint64_t>(rounds);
    out.quiver = std::move(current);
    return out;
}

BipartitizeResult bipartitize(const Quiver& q, const ConstructionOptions& options) {
    if (!is_acyclic(q))
        throw DomainError("bipartitize: input quiver has an oriented cycle");

    StepOutcome first = step1(q, options);
    const int ell = first.report.input_profile.ell;
    const int j = static_cast<int>(first.report.step1_iterations);

    const auto merge_trace = [&](const Trace& tail_part) {
        Trace merged{q, first.events, j, ell, tail_part.final_quiver};
        merged.events.insert(merged.events.end(), tail_part.events.begin(),
                             tail_part.events.end());
        return merged;
    };

    StepOutcome second;
    try {
        second = step2(first.quiver, ell, j, options);
    } catch (const InvariantViolation& e) {
        throw InvariantViolation(e.what(), merge_trace(e.partial_trace()));
    }

    Trace trace{q, std::move(first.events), j, ell, second.quiver};
    trace.events.insert(trace.events.end(), second.events.begin(), second.events.end());

    RunReport report = std::move(first.report);
    report.step2_iterations = second.report.step2_iterations;
    report.step2_profiles = std::move(second.report.step2_profiles);

    return {std::move(trace), std::move(report)};
}

} // namespace quiver
