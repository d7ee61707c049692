#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quiver/trace.hpp"

namespace quiver {

struct ConstructionOptions {
    /// Step-1 iteration cap; default 10 * ell * (total arrow multiplicity
    /// of the input). Hitting it raises IterationCapExceeded.
    std::optional<std::uint64_t> step1_cap;
    /// When set, Step 1 picks the subdivided arrow uniformly at random
    /// among the candidates (seeded, reproducible) instead of taking the
    /// lexicographically least one.
    std::optional<std::uint64_t> arrow_choice_seed;
};

/// A construction step failed; carries the trace accumulated so far for
/// diagnosis.
class ConstructionError : public Error {
public:
    ConstructionError(const std::string& message, Trace partial)
        : Error(message), partial_(std::move(partial)) {}

    const Trace& partial_trace() const noexcept { return partial_; }

private:
    Trace partial_;
};

/// The Step-1 cap tripped. The construction is supposed to terminate on
/// every acyclic input, so this is a diagnosable anomaly, not a retry
/// condition.
class IterationCapExceeded : public ConstructionError {
public:
    using ConstructionError::ConstructionError;
};

/// An intermediate state contradicts the construction's fundamental
/// invariants: an oriented cycle appeared, the longest path length moved
/// during Step 1, the path-length law failed, or Step 2 overran its round
/// bound.
class InvariantViolation : public ConstructionError {
public:
    using ConstructionError::ConstructionError;
};

/// All support arrows absent from every oriented path of length `ell`,
/// sorted by (tail, head). Throws DomainError on a cyclic quiver.
std::vector<Arrow> subdividable_arrows(const Quiver& q, int ell);

/// The lexicographically least subdividable arrow, or nullopt when every
/// arrow lies on a length-`ell` path (Step 1 is finished). `ell` is the
/// longest-path length fixed from the input quiver, not recomputed.
std::optional<Arrow> pick_subdividable_arrow(const Quiver& q, int ell);

struct StepOutcome {
    Quiver quiver;
    std::vector<MutationEvent> events;
    RunReport report;
};

/// Step 1: repeatedly frame a new vertex onto an arrow lying on no
/// length-ell path and mutate there, until no such arrow remains. Each
/// pair subdivides one arrow copy; every intermediate state is acyclic
/// with longest path length exactly ell, and afterwards all maximal
/// oriented paths have length ell (all checked; violations throw).
StepOutcome step1(const Quiver& q, const ConstructionOptions& options = {});

/// Step 2: mutate at all sources, round by round, until the quiver is
/// bipartite. After round r the maximal path lengths are contained in
/// {1, max(1, ell - r)} and the bipartite state is reached within
/// max(0, ell - 1) rounds (both checked; violations throw, after recording
/// at most one excess round for diagnosis). `j` is the state index at
/// which Step 2 begins, used for trace bookkeeping.
StepOutcome step2(const Quiver& q, int ell, int j, const ConstructionOptions& options = {});

struct BipartitizeResult {
    Trace trace;
    RunReport report;
};

/// The full construction: Step 1 followed by Step 2. The returned trace
/// replays forward from the input to the bipartite final quiver. Throws
/// DomainError if the input has an oriented cycle; propagates Step-1/2
/// errors with the merged trace attached.
BipartitizeResult bipartitize(const Quiver& q, const ConstructionOptions& options = {});

} // namespace quiver
