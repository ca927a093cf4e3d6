#pragma once

#include <span>
#include <utility>
#include <vector>

#include "orderflow/config.hpp"

namespace orderflow {

/// A finitely supported permutation of Z (an element of S_0).
///
/// Canonical form: only moved points are stored, sorted by source, so structural
/// equality is group equality.
class FinPerm {
public:
    using Pair = std::pair<Point, Point>;

    /// The identity.
    FinPerm() = default;

    /// Accepts pairs in any order; self-pairs are dropped. Throws InvalidArgument unless
    /// sources are distinct, targets are distinct and both sets coincide.
    static FinPerm from_pairs(std::vector<Pair> pairs);

    /// Completes a partial injection (distinct sources, distinct targets) to a permutation of
    /// sources ∪ targets. Unmatched targets are sent to unmatched sources in increasing order.
    static FinPerm extend(std::span<const Pair> partial);

    Point operator()(Point x) const;
    Point preimage(Point x) const;

    std::span<const Pair> pairs() const noexcept { return pairs_; }
    std::vector<Point> support() const;
    bool is_identity() const noexcept { return pairs_.empty(); }

    /// alpha(W) as a window.
    Window image(const Window& w) const;
    Window preimage(const Window& w) const;

    friend bool operator==(const FinPerm&, const FinPerm&) = default;

private:
    std::vector<Pair> pairs_;
};

/// Applies beta first, then alpha.
FinPerm compose(const FinPerm& alpha, const FinPerm& beta);
FinPerm inverse(const FinPerm& alpha);

} // namespace orderflow
