#include "orderflow/orders.hpp"

#include <numeric>
#include <string>

namespace orderflow {

namespace {

std::vector<Point> sequence_from_ranks(const Window& window, std::span<const std::size_t> ranks) {
    std::vector<Point> seq(window.size());
    for(std::size_t i = 0; i < ranks.size(); ++i) seq[ranks[i]] = window[i];
    return seq;
}

// Lexicographic rank of a permutation of {0..n-1}.
std::size_t lehmer_rank(std::span<const std::size_t> perm) {
    const std::size_t n = perm.size();
    std::size_t index = 0;
    for(std::size_t i = 0; i < n; ++i) {
        std::size_t smaller_later = 0;
        for(std::size_t j = i + 1; j < n; ++j) {
            if(perm[j] < perm[i]) ++smaller_later;
        }
        index += smaller_later * factorial(n - i - 1);
    }
    return index;
}

std::vector<std::size_t> lehmer_unrank(std::size_t n, std::size_t index) {
    if(index >= factorial(n)) fail(ErrorCode::invalid_argument, "permutation index out of range");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::vector<std::size_t> perm;
    perm.reserve(n);
    for(std::size_t i = 0; i < n; ++i) {
        std::size_t f = factorial(n - i - 1);
        std::size_t digit = index / f;
        index %= f;
        perm.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return perm;
}

} // namespace

std::size_t factorial(std::size_t n) {
    std::size_t r = 1;
    for(std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

LinearOrder::LinearOrder(Window window, std::vector<std::size_t> ranks)
    : window_(std::move(window)), ranks_(std::move(ranks)) {
    if(ranks_.size() != window_.size()) {
        fail(ErrorCode::invalid_argument, "rank vector length differs from window size");
    }
    std::vector<char> seen(ranks_.size(), 0);
    for(std::size_t r : ranks_) {
        if(r >= ranks_.size() || seen[r]) {
            fail(ErrorCode::invalid_argument, "ranks are not a bijection onto {0..|W|-1}");
        }
        seen[r] = 1;
    }
    sequence_ = sequence_from_ranks(window_, ranks_);
}

LinearOrder LinearOrder::from_sequence(std::vector<Point> lowest_first) {
    Window w = Window::from_unsorted(lowest_first);
    std::vector<std::size_t> ranks(w.size());
    for(std::size_t r = 0; r < lowest_first.size(); ++r) ranks[w.index_of(lowest_first[r])] = r;
    return LinearOrder(std::move(w), std::move(ranks));
}

LinearOrder LinearOrder::natural(const Window& window) {
    std::vector<std::size_t> ranks(window.size());
    std::iota(ranks.begin(), ranks.end(), std::size_t{0});
    return LinearOrder(window, std::move(ranks));
}

std::size_t order_index(const LinearOrder& order) {
    std::vector<std::size_t> perm(order.size());
    for(std::size_t i = 0; i < order.size(); ++i) perm[order.rank_at(i)] = i;
    return lehmer_rank(perm);
}

LinearOrder order_from_index(const Window& window, std::size_t index) {
    std::vector<std::size_t> perm = lehmer_unrank(window.size(), index);
    std::vector<std::size_t> ranks(window.size());
    for(std::size_t r = 0; r < perm.size(); ++r) ranks[perm[r]] = r;
    return LinearOrder(window, std::move(ranks));
}

LinearOrder relabel(const FinPerm& alpha, const LinearOrder& order) {
    std::vector<Point> seq(order.sequence().begin(), order.sequence().end());
    for(Point& x : seq) x = alpha(x);
    return LinearOrder::from_sequence(std::move(seq));
}

LinearOrder restrict(const LinearOrder& order, const Window& sub) {
    std::vector<Point> seq;
    seq.reserve(sub.size());
    for(Point x : order.sequence()) {
        if(sub.contains(x)) seq.push_back(x);
    }
    if(seq.size() != sub.size()) {
        fail(ErrorCode::out_of_window, "restriction window is not contained in the order's window");
    }
    return LinearOrder::from_sequence(std::move(seq));
}

OrderType::OrderType(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for(auto v : images_) {
        if(v >= images_.size() || seen[v]) fail(ErrorCode::invalid_argument, "not a permutation");
        seen[v] = 1;
    }
}

OrderType OrderType::identity(std::size_t k) {
    std::vector<std::uint8_t> v(k);
    std::iota(v.begin(), v.end(), std::uint8_t{0});
    return OrderType(std::move(v));
}

OrderType OrderType::from_index(std::size_t k, std::size_t index) {
    auto perm = lehmer_unrank(k, index);
    return OrderType(std::vector<std::uint8_t>(perm.begin(), perm.end()));
}

std::size_t OrderType::index() const {
    std::vector<std::size_t> perm(images_.begin(), images_.end());
    return lehmer_rank(perm);
}

int OrderType::sign() const {
    int s = 1;
    for(std::size_t i = 0; i < images_.size(); ++i) {
        for(std::size_t j = i + 1; j < images_.size(); ++j) {
            if(images_[i] > images_[j]) s = -s;
        }
    }
    return s;
}

OrderType compose(const OrderType& a, const OrderType& b) {
    if(a.size() != b.size()) fail(ErrorCode::arity_mismatch, "composing permutations of different degree");
    std::vector<std::uint8_t> v(a.size());
    for(std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint8_t>(a(b(i)));
    return OrderType(std::move(v));
}

OrderType inverse(const OrderType& a) {
    std::vector<std::uint8_t> v(a.size());
    for(std::size_t i = 0; i < v.size(); ++i) v[a(i)] = static_cast<std::uint8_t>(i);
    return OrderType(std::move(v));
}

OrderType order_type(std::span<const Point> tuple, const LinearOrder& order) {
    std::vector<std::size_t> ranks(tuple.size());
    for(std::size_t i = 0; i < tuple.size(); ++i) ranks[i] = order.rank(tuple[i]);
    return sorting_permutation<std::size_t>(ranks);
}

KConfig lin_order_to_config2(const LinearOrder& order) {
    if(order.size() < 2) fail(ErrorCode::degenerate_window, "a k = 2 configuration needs |W| >= 2");
    return KConfig::generate(2, order.window(), [&](std::span<const Point> t) {
        return order.less(t[0], t[1]) ? 1 : -1;
    });
}

bool config2_is_linear_order(const KConfig& config) {
    if(config.arity() != 2) fail(ErrorCode::arity_mismatch, "expected k = 2");
    if(!is_alternating(config)) return false;
    const std::size_t n = config.window().size();
    std::size_t t[2];
    auto w = [&](std::size_t a, std::size_t b) {
        t[0] = a;
        t[1] = b;
        return config.at_ranks(t);
    };
    for(std::size_t m = 0; m < n; ++m) {
        for(std::size_t a = 0; a < n; ++a) {
            if(a == m || w(m, a) != 1) continue;
            for(std::size_t l = 0; l < n; ++l) {
                if(l == m || l == a) continue;
                if(w(a, l) == 1 && w(m, l) != 1) return false;
            }
        }
    }
    return true;
}

LinearOrder config2_to_order(const KConfig& config) {
    if(!config2_is_linear_order(config)) {
        fail(ErrorCode::not_a_linear_order, "configuration does not determine a linear order");
    }
    const std::size_t n = config.window().size();
    std::vector<std::size_t> ranks(n, 0);
    config.for_each([&](std::span<const std::size_t> r, int value) {
        if(value == 1) ++ranks[r[1]];
    });
    return LinearOrder(config.window(), std::move(ranks));
}

LinearOrder reverse(const LinearOrder& order) {
    const std::size_t n = order.size();
    std::vector<std::size_t> ranks(n);
    for(std::size_t i = 0; i < n; ++i) ranks[i] = n - 1 - order.rank_at(i);
    return LinearOrder(order.window(), std::move(ranks));
}

LinearOrder reversal_class_rep(const LinearOrder& order) {
    if(order.size() < 2) fail(ErrorCode::degenerate_window, "reversal classes need |W| >= 2");
    if(order.rank_at(0) < order.rank_at(order.size() - 1)) return order;
    return reverse(order);
}

KConfig transported_pattern(const FinPerm& alpha, const LinearOrder& order, const Window& target) {
    Window pre = alpha.preimage(target);
    if(!order.window().includes(pre)) {
        fail(ErrorCode::domain_escape, "alpha^-1 of the target window leaves the order's window");
    }
    return apply_perm(alpha, lin_order_to_config2(restrict(order, pre)), target);
}

bool is_circular_realizable(const KConfig& config, std::size_t max_window) {
    if(config.arity() != 3) fail(ErrorCode::arity_mismatch, "circular realizability needs k = 3");
    const Window& w = config.window();
    const std::size_t n = w.size();
    if(n > max_window) {
        fail(ErrorCode::window_too_large, "window of size " + std::to_string(n) +
             " exceeds the realizability bound " + std::to_string(max_window));
    }
    if(n < 3) return true;

    // rotation classes: fix window[0] at rank 0 and permute the rest
    std::vector<std::size_t> rest(n - 1);
    std::iota(rest.begin(), rest.end(), std::size_t{1});
    std::vector<std::size_t> ranks(n);
    std::size_t rk[3];
    do {
        ranks[0] = 0;
        for(std::size_t r = 0; r < rest.size(); ++r) ranks[rest[r]] = r + 1;
        bool match = true;
        config.for_each([&](std::span<const std::size_t> t, int value) {
            if(!match) return;
            for(int i = 0; i < 3; ++i) rk[i] = ranks[t[i]];
            if(sorting_permutation<std::size_t>(rk).sign() != value) match = false;
        });
        if(match) return true;
    } while(std::next_permutation(rest.begin(), rest.end()));
    return false;
}

} // namespace orderflow
