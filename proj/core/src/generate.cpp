#include "quiver/generate.hpp"

#include <numeric>
#include <random>

#include "rng.hpp"

namespace quiver {

Quiver random_acyclic(const GenSpec& spec) {
    if (spec.n < 0)
        throw UsageError("random_acyclic: negative vertex count");
    if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0)
        throw UsageError("random_acyclic: edge probability outside [0, 1]");
    if (spec.max_multiplicity < 1)
        throw UsageError("random_acyclic: max multiplicity must be positive");

    std::mt19937_64 rng(spec.seed);

    std::vector<VertexId> order(static_cast<std::size_t>(spec.n));
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[detail::bounded(rng, i)]);

    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (detail::unit_double(rng) < spec.edge_probability) {
                const Entry mult =
                    1 + static_cast<Entry>(detail::bounded(
                            rng, static_cast<std::uint64_t>(spec.max_multiplicity)));
                arrows.push_back({order[i], order[j], mult});
            }
    return Quiver::from_arrows(spec.n, arrows);
}

SmallQuiverEnumerator::SmallQuiverEnumerator(int n, Entry max_multiplicity)
    : n_(n), max_mult_(max_multiplicity),
      digits_(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2, 0) {
    if (n < 0)
        throw UsageError("enumerate: negative vertex count");
    if (n > 5)
        throw ResourceError("enumerate: corpus explodes beyond 5 vertices; refusing");
    if (max_multiplicity < 1)
        throw UsageError("enumerate: max multiplicity must be positive");
    for (Entry& d : digits_)
        d = -max_mult_;
}

bool SmallQuiverEnumerator::advance() {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] < max_mult_) {
            ++digits_[i];
            return true;
        }
        digits_[i] = -max_mult_;
    }
    return false;
}

std::optional<Quiver> SmallQuiverEnumerator::materialize() const {
    std::vector<Entry> b(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    std::size_t next = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            const Entry value = digits_[next++];
            b[static_cast<std::size_t>(i) * n_ + j] = value;
            b[static_cast<std::size_t>(j) * n_ + i] = -value;
        }
    Quiver q(Quiver(n_).vertices(), std::move(b));
    if (!is_acyclic(q))
        return std::nullopt;
    return q;
}

std::optional<Quiver> SmallQuiverEnumerator::next() {
    while (!exhausted_) {
        if (first_)
            first_ = false;
        else if (!advance()) {
            exhausted_ = true;
            break;
        }
        if (auto q = materialize())
            return q;
    }
    return std::nullopt;
}

} // namespace quiver
