#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "orderflow/config.hpp"
#include "orderflow/perm.hpp"

namespace orderflow {

/// A linear order on a finite window: rank 0 is the least element.
class LinearOrder {
public:
    /// Throws InvalidArgument unless `ranks` is a bijection onto {0..|W|-1}.
    LinearOrder(Window window, std::vector<std::size_t> ranks);

    /// Elements listed lowest first, e.g. {7, 3, 9} means 7 < 3 < 9.
    static LinearOrder from_sequence(std::vector<Point> lowest_first);
    /// The order inherited from Z.
    static LinearOrder natural(const Window& window);

    const Window& window() const noexcept { return window_; }
    std::size_t size() const noexcept { return window_.size(); }

    std::size_t rank(Point x) const { return ranks_[window_.index_of(x)]; }
    /// Rank of the i-th window element.
    std::size_t rank_at(std::size_t i) const { return ranks_[i]; }
    std::span<const std::size_t> ranks() const noexcept { return ranks_; }
    /// Window elements lowest first.
    std::span<const Point> sequence() const noexcept { return sequence_; }

    bool less(Point a, Point b) const { return rank(a) < rank(b); }

    friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
        return a.window_ == b.window_ && a.ranks_ == b.ranks_;
    }

private:
    Window window_;
    std::vector<std::size_t> ranks_;
    std::vector<Point> sequence_;
};

/// Visits all |W|! orders on `window`, in lexicographic order of their sequences.
template <typename F>
void for_each_order(const Window& window, F&& f);

/// Position of `order` in the enumeration of for_each_order.
std::size_t order_index(const LinearOrder& order);
LinearOrder order_from_index(const Window& window, std::size_t index);

std::size_t factorial(std::size_t n);

/// The order alpha.o on alpha(W): rank(alpha(x)) = rank(x).
LinearOrder relabel(const FinPerm& alpha, const LinearOrder& order);
/// Induced order on a sub-window. Throws OutOfWindow.
LinearOrder restrict(const LinearOrder& order, const Window& sub);

/// A permutation sigma of {0..k-1}, stored in one-line notation.
class OrderType {
public:
    /// Throws InvalidArgument unless `images` is a permutation of {0..k-1}.
    explicit OrderType(std::vector<std::uint8_t> images);
    static OrderType identity(std::size_t k);
    /// The index-th permutation of {0..k-1} in lexicographic order.
    static OrderType from_index(std::size_t k, std::size_t index);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    std::span<const std::uint8_t> images() const noexcept { return images_; }

    /// Lexicographic rank among the k! permutations.
    std::size_t index() const;
    int sign() const;

    friend bool operator==(const OrderType&, const OrderType&) = default;

private:
    std::vector<std::uint8_t> images_;
};

/// (a . b)(i) = a(b(i)).
OrderType compose(const OrderType& a, const OrderType& b);
OrderType inverse(const OrderType& a);

/// The sigma with tuple[sigma(0)] < tuple[sigma(1)] < ... under `order`. Throws OutOfWindow.
OrderType order_type(std::span<const Point> tuple, const LinearOrder& order);
/// Order type under the natural order of the values themselves.
template <typename T>
OrderType sorting_permutation(std::span<const T> values);

/// w(m, n) = +1 exactly when m precedes n. Throws DegenerateWindow if |W| < 2.
KConfig lin_order_to_config2(const LinearOrder& order);
/// Alternating and transitive. Throws ArityMismatch if k != 2.
bool config2_is_linear_order(const KConfig& config);
/// Inverse of lin_order_to_config2. Throws ArityMismatch or NotALinearOrder.
LinearOrder config2_to_order(const KConfig& config);

/// rank'(x) = |W| - 1 - rank(x)
LinearOrder reverse(const LinearOrder& order);
/// The member of {o, reverse(o)} ranking min(W) below max(W). Throws DegenerateWindow if |W| < 2.
LinearOrder reversal_class_rep(const LinearOrder& order);

/// (alpha . order-config) restricted to `target`, computed from the order restricted to
/// alpha^-1(target). Throws DomainEscape when alpha^-1(target) leaves the order's window.
KConfig transported_pattern(const FinPerm& alpha, const LinearOrder& order, const Window& target);

inline constexpr std::size_t default_realizability_bound = 8;

/// Whether a k = 3 configuration is the circular code of some linear order on its window.
/// Exhaustive over rotation classes. Throws ArityMismatch or WindowTooLarge.
bool is_circular_realizable(const KConfig& config,
                            std::size_t max_window = default_realizability_bound);

// --- templates ---

template <typename F>
void for_each_order(const Window& window, F&& f) {
    std::vector<std::size_t> perm(window.size());
    for(std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<std::size_t> ranks(window.size());
    do {
        for(std::size_t r = 0; r < perm.size(); ++r) ranks[perm[r]] = r;
        f(LinearOrder(window, ranks));
    } while(std::next_permutation(perm.begin(), perm.end()));
}

template <typename T>
OrderType sorting_permutation(std::span<const T> values) {
    std::vector<std::uint8_t> idx(values.size());
    for(std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint8_t>(i);
    std::sort(idx.begin(), idx.end(), [&](std::uint8_t a, std::uint8_t b) { return values[a] < values[b]; });
    for(std::size_t i = 1; i < idx.size(); ++i) {
        if(!(values[idx[i - 1]] < values[idx[i]])) {
            fail(ErrorCode::degenerate_input, "tuple entries must be distinct");
        }
    }
    return OrderType(std::move(idx));
}

} // namespace orderflow
