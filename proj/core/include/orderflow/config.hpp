#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orderflow/error.hpp"

namespace orderflow {

using Point = std::int64_t;

/// Finite, strictly increasing set of integers standing in for the index set Z.
class Window {
public:
    Window() = default;
    /// Throws InvalidArgument unless `elements` is strictly increasing.
    explicit Window(std::vector<Point> elements);

    /// Sorts; duplicates are rejected.
    static Window from_unsorted(std::vector<Point> elements);
    /// {first, first + 1, ..., first + count - 1}
    static Window range(Point first, std::size_t count);

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    std::span<const Point> elements() const noexcept { return elements_; }
    Point operator[](std::size_t i) const { return elements_[i]; }
    Point front() const { return elements_.front(); }
    Point back() const { return elements_.back(); }

    bool contains(Point x) const;
    std::optional<std::size_t> find(Point x) const;
    /// Position of `x` in the window; throws OutOfWindow.
    std::size_t index_of(Point x) const;
    bool includes(const Window& other) const;

    friend bool operator==(const Window&, const Window&) = default;

private:
    std::vector<Point> elements_;
};

/// n (n-1) ... (n-k+1); zero when k > n.
std::size_t falling_factorial(std::size_t n, std::size_t k);

/// Visits all injective k-tuples of indices in [0, n) in lexicographic order.
template <typename F>
void for_each_injective_tuple(std::size_t n, std::size_t k, F&& f) {
    if(k > n) return;
    std::vector<std::size_t> tuple(k);
    std::vector<char> used(n, 0);
    std::size_t depth = 0;
    std::vector<std::size_t> next(k + 1, 0);
    // iterative DFS; next[d] is the first candidate to try at depth d
    while(true) {
        if(depth == k) {
            f(std::span<const std::size_t>(tuple));
            if(k == 0) return;
            --depth;
            used[tuple[depth]] = 0;
            next[depth] = tuple[depth] + 1;
            continue;
        }
        std::size_t c = next[depth];
        while(c < n && used[c]) ++c;
        if(c == n) {
            if(depth == 0) return;
            --depth;
            used[tuple[depth]] = 0;
            next[depth] = tuple[depth] + 1;
            continue;
        }
        tuple[depth] = c;
        used[c] = 1;
        ++depth;
        next[depth] = 0;
    }
}

class FinPerm;

/// A {+1, -1}-valued function on the injective k-tuples over a window, stored flat in
/// lexicographic order of window ranks.
class KConfig {
public:
    using Value = std::int8_t;
    static constexpr int default_max_arity = 6;

    /// Throws InvalidArgument for k < 2, k > max_arity, a wrong value count or a value other than +-1.
    KConfig(int k, Window window, std::vector<Value> values, int max_arity = default_max_arity);

    /// Builds the configuration tuple by tuple; `f(std::span<const Point>)` must return +1 or -1.
    template <typename F>
    static KConfig generate(int k, Window window, F&& f, int max_arity = default_max_arity) {
        check_arity(k, max_arity);
        std::vector<Value> values;
        values.reserve(falling_factorial(window.size(), static_cast<std::size_t>(k)));
        std::vector<Point> tuple(static_cast<std::size_t>(k));
        for_each_injective_tuple(window.size(), static_cast<std::size_t>(k),
            [&](std::span<const std::size_t> ranks) {
                for(std::size_t i = 0; i < ranks.size(); ++i) tuple[i] = window[ranks[i]];
                values.push_back(static_cast<Value>(f(std::span<const Point>(tuple))));
            });
        return KConfig(k, std::move(window), std::move(values), max_arity);
    }

    int arity() const noexcept { return k_; }
    const Window& window() const noexcept { return window_; }
    std::span<const Value> values() const noexcept { return values_; }
    std::size_t tuple_count() const noexcept { return values_.size(); }

    /// Value on a tuple of window points. Throws OutOfWindow or InvalidArgument (repeated entry).
    int operator()(std::span<const Point> tuple) const;
    int operator()(std::initializer_list<Point> tuple) const {
        return (*this)(std::span<const Point>(tuple.begin(), tuple.size()));
    }
    int at_ranks(std::span<const std::size_t> ranks) const {
        return values_[index_of_ranks(ranks)];
    }

    /// Lehmer-style mixed-radix index of an injective rank tuple.
    std::size_t index_of_ranks(std::span<const std::size_t> ranks) const;

    /// `f(std::span<const std::size_t> ranks, int value)` in storage order.
    template <typename F>
    void for_each(F&& f) const {
        std::size_t i = 0;
        for_each_injective_tuple(window_.size(), static_cast<std::size_t>(k_),
            [&](std::span<const std::size_t> ranks) { f(ranks, static_cast<int>(values_[i++])); });
    }

    KConfig negated() const;

    friend bool operator==(const KConfig&, const KConfig&) = default;

    static void check_arity(int k, int max_arity);

private:
    int k_ = 2;
    Window window_;
    std::vector<Value> values_;
};

/// Restriction to a sub-window. Throws OutOfWindow.
KConfig restrict(const KConfig& config, const Window& sub);

/// (alpha w)(i_1..i_k) = w(alpha^-1 i_1, ..., alpha^-1 i_k), on the relocated window alpha(W).
KConfig apply_perm(const FinPerm& alpha, const KConfig& config);
/// Same action evaluated on an explicit image window. Throws DomainEscape if some
/// alpha^-1(i), i in `image`, lies outside config.window().
KConfig apply_perm(const FinPerm& alpha, const KConfig& config, const Window& image);

/// w(sigma t) = sgn(sigma) w(t) for every tuple t and sigma in S_k. Checks adjacent transpositions.
bool is_alternating(const KConfig& config);

} // namespace orderflow
