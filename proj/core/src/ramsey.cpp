#include "orderflow/ramsey.hpp"

#include <algorithm>
#include <string>

namespace orderflow {

namespace {

// position of pair (i, j), i < j, in the row-major upper triangle of an n x n matrix
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

} // namespace

PairColoring::PairColoring(Window ground, std::vector<std::uint8_t> colors)
    : ground_(std::move(ground)), colors_(std::move(colors)) {
    const std::size_t n = ground_.size();
    if(colors_.size() != n * (n > 0 ? n - 1 : 0) / 2) {
        fail(ErrorCode::invalid_argument, "coloring must cover all pairs of the ground");
    }
    for(auto c : colors_) {
        if(c > 1) fail(ErrorCode::invalid_argument, "pair colors must be 0 or 1");
    }
}

int PairColoring::color_at(std::size_t i, std::size_t j) const {
    if(i == j) fail(ErrorCode::invalid_argument, "a pair needs two distinct points");
    if(i > j) std::swap(i, j);
    return colors_[pair_index(ground_.size(), i, j)];
}

int PairColoring::color(Point a, Point b) const {
    return color_at(ground_.index_of(a), ground_.index_of(b));
}

std::uint64_t ramsey_bound(std::size_t m) {
    if(2 * m >= 64) fail(ErrorCode::invalid_argument, "Ramsey bound overflows 64 bits");
    return std::uint64_t{1} << (2 * m);
}

MonoSubset ramsey_mono_subset(const PairColoring& coloring, std::size_t m, RamseyMode mode) {
    const std::size_t n = coloring.ground().size();
    const bool meets = n >= ramsey_bound(m);
    if(!meets && mode == RamseyMode::strict) {
        fail(ErrorCode::ground_too_small, "ground of size " + std::to_string(n) +
             " is below the Ramsey bound " + std::to_string(ramsey_bound(m)) +
             " for a monochromatic " + std::to_string(m) + "-set");
    }

    std::vector<std::size_t> pivots;
    std::vector<int> pivot_color;
    std::vector<std::size_t> candidates(n);
    for(std::size_t i = 0; i < n; ++i) candidates[i] = i;
    while(!candidates.empty()) {
        const std::size_t p = candidates.front();
        std::vector<std::size_t> cls[2];
        for(std::size_t i = 1; i < candidates.size(); ++i) {
            cls[coloring.color_at(p, candidates[i])].push_back(candidates[i]);
        }
        const int keep = cls[1].size() > cls[0].size() ? 1 : 0;
        pivots.push_back(p);
        pivot_color.push_back(keep);
        candidates = std::move(cls[keep]);
    }

    // the last pivot has no later pivots and may join either class
    std::size_t count[2] = {0, 0};
    for(std::size_t i = 0; i + 1 < pivots.size(); ++i) ++count[pivot_color[i]];
    const int color = count[1] > count[0] ? 1 : 0;

    MonoSubset out;
    out.color = color;
    out.meets_bound = meets;
    for(std::size_t i = 0; i < pivots.size() && out.members.size() < m; ++i) {
        if(i + 1 == pivots.size() || pivot_color[i] == color) {
            out.members.push_back(coloring.ground()[pivots[i]]);
        }
    }
    if(out.members.size() < m && mode == RamseyMode::strict) {
        // unreachable above the bound: at least 2m + 1 pivots are produced
        fail(ErrorCode::ground_too_small, "greedy extraction fell short of the target size");
    }
    return out;
}

bool is_monochromatic(const PairColoring& coloring, std::span<const Point> subset) {
    if(subset.size() < 2) return true;
    const int c = coloring.color(subset[0], subset[1]);
    for(std::size_t i = 0; i < subset.size(); ++i) {
        for(std::size_t j = i + 1; j < subset.size(); ++j) {
            if(coloring.color(subset[i], subset[j]) != c) return false;
        }
    }
    return true;
}

std::string_view to_string(WitnessKind kind) {
    switch(kind) {
        case WitnessKind::minimality: return "minimality";
        case WitnessKind::proximality_agree: return "proximality-agree";
        case WitnessKind::proximality_reverse: return "proximality-reverse";
    }
    return "unknown";
}

WitnessKind witness_kind_from_string(std::string_view s) {
    if(s == "minimality") return WitnessKind::minimality;
    if(s == "proximality-agree") return WitnessKind::proximality_agree;
    if(s == "proximality-reverse") return WitnessKind::proximality_reverse;
    fail(ErrorCode::invalid_argument, "unknown witness kind '" + std::string(s) + "'");
}

Witness minimality_witness(const LinearOrder& source, const LinearOrder& target) {
    const Window& ground = source.window();
    const Window& w = target.window();
    if(ground.size() < w.size()) {
        fail(ErrorCode::ground_too_small, "ground of size " + std::to_string(ground.size()) +
             " cannot carry a pattern on " + std::to_string(w.size()) + " points");
    }
    std::vector<Point> chosen(ground.elements().begin(),
                              ground.elements().begin() + static_cast<std::ptrdiff_t>(w.size()));
    std::sort(chosen.begin(), chosen.end(), [&](Point a, Point b) { return source.less(a, b); });

    std::vector<FinPerm::Pair> partial;
    partial.reserve(w.size());
    for(std::size_t i = 0; i < chosen.size(); ++i) partial.emplace_back(chosen[i], target.sequence()[i]);
    return Witness{FinPerm::extend(partial), w, WitnessKind::minimality};
}

bool verify_minimality(const Witness& w, const LinearOrder& source, const LinearOrder& target) {
    if(w.kind != WitnessKind::minimality || w.checked_window != target.window()) return false;
    if(target.size() < 2) return source.window().includes(w.alpha.preimage(w.checked_window));
    try {
        return transported_pattern(w.alpha, source, w.checked_window) == lin_order_to_config2(target);
    } catch(const Error&) {
        return false;
    }
}

Witness proximality_witness(const LinearOrder& o1, const LinearOrder& o2, const Window& target) {
    if(o1.window() != o2.window()) fail(ErrorCode::invalid_argument, "orders must share a ground");
    const Window& ground = o1.window();
    if(ground.size() < ramsey_bound(target.size())) {
        fail(ErrorCode::ground_too_small, "ground of size " + std::to_string(ground.size()) +
             " is below the required " + std::to_string(ramsey_bound(target.size())));
    }
    if(o1 == o2 && ground.includes(target)) {
        return Witness{FinPerm{}, target, WitnessKind::proximality_agree};
    }
    // color 0: the orders agree on the pair; 1: they disagree
    auto coloring = PairColoring::generate(ground, [&](Point a, Point b) {
        return o1.less(a, b) == o2.less(a, b) ? 0 : 1;
    });
    MonoSubset mono = ramsey_mono_subset(coloring, target.size());

    std::sort(mono.members.begin(), mono.members.end(), [&](Point a, Point b) { return o1.less(a, b); });
    std::vector<FinPerm::Pair> partial;
    partial.reserve(target.size());
    for(std::size_t i = 0; i < mono.members.size(); ++i) partial.emplace_back(mono.members[i], target[i]);
    return Witness{FinPerm::extend(partial), target,
                   mono.color == 0 ? WitnessKind::proximality_agree : WitnessKind::proximality_reverse};
}

bool verify_proximality(const Witness& w, const LinearOrder& o1, const LinearOrder& o2) {
    if(w.kind == WitnessKind::minimality) return false;
    if(w.checked_window.size() < 2) {
        return o1.window().includes(w.alpha.preimage(w.checked_window)) &&
               o2.window().includes(w.alpha.preimage(w.checked_window));
    }
    try {
        KConfig a = transported_pattern(w.alpha, o1, w.checked_window);
        KConfig b = transported_pattern(w.alpha, o2, w.checked_window);
        return w.kind == WitnessKind::proximality_agree ? a == b : a == b.negated();
    } catch(const Error&) {
        return false;
    }
}

} // namespace orderflow
