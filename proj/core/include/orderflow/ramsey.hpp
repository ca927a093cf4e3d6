#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "orderflow/config.hpp"
#include "orderflow/orders.hpp"
#include "orderflow/perm.hpp"

namespace orderflow {

/// A 2-coloring of the unordered pairs of a ground window.
class PairColoring {
public:
    PairColoring(Window ground, std::vector<std::uint8_t> colors);

    /// `f(Point a, Point b)` with a < b returns 0 or 1.
    template <typename F>
    static PairColoring generate(Window ground, F&& f) {
        std::vector<std::uint8_t> colors;
        const std::size_t n = ground.size();
        colors.reserve(n * (n > 0 ? n - 1 : 0) / 2);
        for(std::size_t i = 0; i < n; ++i) {
            for(std::size_t j = i + 1; j < n; ++j) {
                colors.push_back(static_cast<std::uint8_t>(f(ground[i], ground[j])));
            }
        }
        return PairColoring(std::move(ground), std::move(colors));
    }

    const Window& ground() const noexcept { return ground_; }
    int color(Point a, Point b) const;
    int color_at(std::size_t i, std::size_t j) const;

private:
    Window ground_;
    std::vector<std::uint8_t> colors_;
};

/// 2^(2m), the ground size that guarantees the greedy pivot extraction succeeds.
std::uint64_t ramsey_bound(std::size_t m);

enum class RamseyMode { strict, best_effort };

struct MonoSubset {
    std::vector<Point> members;
    int color = 0;
    /// False when the ground was below ramsey_bound(m) (best-effort mode only).
    bool meets_bound = true;
};

/// Greedy pivot extraction of a monochromatic m-subset, in ground order.
///
/// Repeatedly takes the least remaining point as a pivot and keeps the larger of its two
/// color classes among the remaining points (color 0 on ties). Every pivot sees a single
/// color towards all later pivots, so the pivots of the majority pivot color are
/// monochromatic. In strict mode throws GroundTooSmall below ramsey_bound(m); in best-effort
/// mode returns the largest monochromatic set found, truncated to m.
MonoSubset ramsey_mono_subset(const PairColoring& coloring, std::size_t m,
                              RamseyMode mode = RamseyMode::strict);

/// True iff all pairs of `subset` have the same color.
bool is_monochromatic(const PairColoring& coloring, std::span<const Point> subset);

enum class WitnessKind { minimality, proximality_agree, proximality_reverse };

std::string_view to_string(WitnessKind kind);
WitnessKind witness_kind_from_string(std::string_view s);

/// A group element certifying a finite-window dynamical property.
struct Witness {
    FinPerm alpha;
    Window checked_window;
    WitnessKind kind = WitnessKind::minimality;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// alpha with (alpha . source)|_W = target. The |W| least ground points are mapped onto W,
/// the i-th lowest under `source` going to the target's rank-i element. Throws GroundTooSmall.
Witness minimality_witness(const LinearOrder& source, const LinearOrder& target);
bool verify_minimality(const Witness& w, const LinearOrder& source, const LinearOrder& target);

/// alpha with (alpha . o1)|_W = +-(alpha . o2)|_W, found by Ramsey extraction on the
/// agree/disagree coloring of pairs. Throws GroundTooSmall below ramsey_bound(|W|) and
/// InvalidArgument when the orders live on different grounds.
Witness proximality_witness(const LinearOrder& o1, const LinearOrder& o2, const Window& target);
bool verify_proximality(const Witness& w, const LinearOrder& o1, const LinearOrder& o2);

} // namespace orderflow
