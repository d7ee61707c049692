#include "doctest.h"

#include <variant>

#include "helpers.hpp"
#include "quiver/bipartitize.hpp"
#include "quiver/generate.hpp"
#include "quiver/verify.hpp"

using namespace quiver;
using quiver::testing::make_quiver;
using quiver::testing::random_quiver;
using quiver::testing::support;

namespace {

const std::vector<std::array<int, 3>> kTriangle = {{0, 1, 1}, {0, 2, 1}, {2, 1, 1}};

// {3->1, 3->2, 4->1, 4->2} on indices 0..3.
const std::vector<std::array<int, 3>> kFinal = {{2, 0, 1}, {2, 1, 1}, {3, 0, 1}, {3, 1, 1}};

} // namespace

TEST_CASE("pick_subdividable_arrow finds the paper's arrow") {
    CHECK(pick_subdividable_arrow(make_quiver(3, kTriangle), 2) == Arrow{0, 1, 1});
}

TEST_CASE("pick_subdividable_arrow returns nothing when saturated") {
    // Every arrow of 1->3->2 lies on the length-2 path.
    CHECK_FALSE(pick_subdividable_arrow(make_quiver(3, {{0, 2, 1}, {2, 1, 1}}), 2));
    // Q^(1) of the worked example: both length-2 paths cover all four arrows.
    const Quiver q1 = make_quiver(4, {{0, 3, 1}, {3, 1, 1}, {0, 2, 1}, {2, 1, 1}});
    CHECK_FALSE(pick_subdividable_arrow(q1, 2));
}

TEST_CASE("pick_subdividable_arrow rejects cyclic input") {
    CHECK_THROWS_AS(
        pick_subdividable_arrow(make_quiver(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}), 1),
        DomainError);
}

TEST_CASE("step1 on the worked example") {
    const auto outcome = step1(make_quiver(3, kTriangle));
    CHECK(outcome.report.step1_iterations == 1);
    CHECK(outcome.report.inserted_vertices == 1);
    REQUIRE(outcome.events.size() == 2);
    CHECK(std::get<InsertVertexEvent>(outcome.events[0]) == InsertVertexEvent{3, 1, 0});
    CHECK(std::get<MutateAtEvent>(outcome.events[1]) == MutateAtEvent{3});
    CHECK(support(outcome.quiver) ==
          std::set<std::pair<VertexId, VertexId>>{{0, 3}, {3, 1}, {0, 2}, {2, 1}});
}

TEST_CASE("step1 is a no-op on a saturated quiver") {
    const Quiver q = make_quiver(3, {{0, 2, 1}, {2, 1, 1}});
    const auto outcome = step1(q);
    CHECK(outcome.report.step1_iterations == 0);
    CHECK(outcome.events.empty());
    CHECK(equal(outcome.quiver, q));
}

TEST_CASE("step1 subdivides a parallel pair copy by copy") {
    // {1->2 (x2), 1->3, 3->2}: each mutation at the framed vertex removes
    // exactly one copy of 1->2 and adds a length-2 detour.
    const Quiver q = make_quiver(3, {{0, 1, 2}, {0, 2, 1}, {2, 1, 1}});
    const auto outcome = step1(q);
    CHECK(outcome.report.step1_iterations == 2);
    CHECK(outcome.quiver.vertex_count() == 5);
    CHECK(outcome.quiver.entry(0, 1) == 0);
    CHECK(path_profile(outcome.quiver).maximal_lengths == std::set<int>{2});
}

TEST_CASE("step1 reports a cap overrun with the partial trace") {
    const Quiver q = make_quiver(3, {{0, 1, 2}, {0, 2, 1}, {2, 1, 1}});
    ConstructionOptions options;
    options.step1_cap = 1;
    try {
        step1(q, options);
        FAIL("expected IterationCapExceeded");
    } catch (const IterationCapExceeded& e) {
        CHECK(e.partial_trace().events.size() == 2);
        CHECK(equal(e.partial_trace().input, q));
    }
}

TEST_CASE("step2 on the worked example") {
    const Quiver q1 = make_quiver(4, {{0, 3, 1}, {3, 1, 1}, {0, 2, 1}, {2, 1, 1}});
    const auto outcome = step2(q1, 2, 1);
    CHECK(outcome.report.step2_iterations == 1);
    REQUIRE(outcome.events.size() == 1);
    CHECK(std::get<MutateSourcesEvent>(outcome.events[0]) ==
          MutateSourcesEvent{{0}});
    CHECK(equal(outcome.quiver, make_quiver(4, kFinal)));
}

TEST_CASE("step2 does nothing to a bipartite quiver") {
    const Quiver q = make_quiver(3, {{0, 1, 1}, {2, 1, 1}});
    const auto outcome = step2(q, 1, 0);
    CHECK(outcome.report.step2_iterations == 0);
    CHECK(outcome.events.empty());
    CHECK(equal(outcome.quiver, q));
}

TEST_CASE("step2 needs exactly ell - 1 rounds on a linear quiver") {
    // 1->2->3->4: ell = 3, already saturated, and the path-length law pins
    // the lengths after each round.
    const Quiver line = make_quiver(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    CHECK(step1(line).report.step1_iterations == 0);
    const auto outcome = step2(line, 3, 0);
    CHECK(outcome.report.step2_iterations == 2);
    REQUIRE(outcome.report.step2_profiles.size() == 2);
    CHECK(outcome.report.step2_profiles[0].maximal_lengths == std::set<int>{1, 2});
    CHECK(outcome.report.step2_profiles[1].maximal_lengths == std::set<int>{1});
    CHECK(is_bipartite(outcome.quiver));
}

TEST_CASE("bipartitize reproduces the worked example end to end") {
    const Quiver input = make_quiver(3, kTriangle);
    const auto [trace, report] = bipartitize(input);

    CHECK(trace.ell == 2);
    CHECK(trace.j == 1);
    REQUIRE(trace.events.size() == 3);
    CHECK(std::get<InsertVertexEvent>(trace.events[0]) == InsertVertexEvent{3, 1, 0});
    CHECK(std::get<MutateAtEvent>(trace.events[1]) == MutateAtEvent{3});
    CHECK(std::get<MutateSourcesEvent>(trace.events[2]) == MutateSourcesEvent{{0}});
    CHECK(equal(trace.final_quiver, make_quiver(4, kFinal)));
    CHECK(report.step1_iterations == 1);
    CHECK(report.step2_iterations == 1);
    CHECK(report.inserted_vertices == 1);
    CHECK(trace.final_quiver.vertex(3).label == "v4");
}

TEST_CASE("bipartitize of an arrowless quiver is empty") {
    const auto [trace, report] = bipartitize(Quiver(3));
    CHECK(trace.events.empty());
    CHECK(trace.ell == 0);
    CHECK(equal(trace.final_quiver, Quiver(3)));
    CHECK(report.step1_iterations == 0);
    CHECK(report.step2_iterations == 0);
}

TEST_CASE("bipartitize rejects cyclic input") {
    CHECK_THROWS_AS(bipartitize(make_quiver(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}})),
                    DomainError);
}

TEST_CASE("every tiny quiver lands on a bipartite final state") {
    for (int n = 1; n <= 3; ++n) {
        SmallQuiverEnumerator corpus(n, 2);
        while (const auto q = corpus.next()) {
            const auto [trace, report] = bipartitize(*q);
            CHECK(is_bipartite(trace.final_quiver));
            CHECK(report.step2_iterations <=
                  static_cast<std::uint64_t>(std::max(0, trace.ell - 1)));
        }
    }
}

TEST_CASE("randomized arrow choice still certifies") {
    const Quiver q = random_quiver(7, 11, 0.5, 2);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        ConstructionOptions options;
        options.arrow_choice_seed = seed;
        const auto [trace, report] = bipartitize(q, options);
        CHECK(is_bipartite(trace.final_quiver));
        CHECK(certify(q, trace).accepted());
    }
}

TEST_CASE("step-1 pairs touch only the framed arrow's neighborhood") {
    const Quiver input = random_quiver(6, 21, 0.5, 2);
    const auto [trace, report] = bipartitize(input);

    Quiver state = input;
    for (std::size_t i = 0; i + 1 < trace.events.size(); i += 2) {
        const auto* ins = std::get_if<InsertVertexEvent>(&trace.events[i]);
        if (!ins)
            break;
        Quiver next = insert_framed_vertex(
                          state, {ins->tail, ins->head, state.entry(ins->tail, ins->head)})
                          .first;
        next = mutate(next, ins->vertex);

        std::vector<VertexId> untouched;
        for (int v = 0; v < state.vertex_count(); ++v)
            if (v != ins->tail && v != ins->head)
                untouched.push_back(v);
        CHECK(equal(restrict_to(state, untouched), restrict_to(next, untouched)));
        state = next;
    }
}

TEST_CASE("step-1 states remain acyclic at fixed longest-path length") {
    for (std::uint64_t seed = 60; seed < 80; ++seed) {
        const Quiver q = random_quiver(6, seed, 0.5, 2);
        const int ell = path_profile(q).ell;
        const auto outcome = step1(q);
        for (const PathProfile& profile : outcome.report.step1_profiles) {
            CHECK(profile.ell == ell);
        }
        CHECK(is_acyclic(outcome.quiver));
        if (ell >= 1)
            CHECK(path_profile(outcome.quiver).maximal_lengths == std::set<int>{ell});
    }
}
