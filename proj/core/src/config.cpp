#include "orderflow/config.hpp"

#include <algorithm>
#include <string>

#include "orderflow/perm.hpp"

namespace orderflow {

Window::Window(std::vector<Point> elements) : elements_(std::move(elements)) {
    for(std::size_t i = 1; i < elements_.size(); ++i) {
        if(elements_[i - 1] >= elements_[i]) {
            fail(ErrorCode::invalid_argument, "Window elements must be strictly increasing");
        }
    }
}

Window Window::from_unsorted(std::vector<Point> elements) {
    std::sort(elements.begin(), elements.end());
    return Window(std::move(elements));
}

Window Window::range(Point first, std::size_t count) {
    std::vector<Point> v(count);
    for(std::size_t i = 0; i < count; ++i) v[i] = first + static_cast<Point>(i);
    return Window(std::move(v));
}

std::optional<std::size_t> Window::find(Point x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if(it == elements_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

bool Window::contains(Point x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t Window::index_of(Point x) const {
    auto i = find(x);
    if(!i) fail(ErrorCode::out_of_window, std::to_string(x) + " is not in the window");
    return *i;
}

bool Window::includes(const Window& other) const {
    return std::includes(elements_.begin(), elements_.end(),
                         other.elements_.begin(), other.elements_.end());
}

std::size_t falling_factorial(std::size_t n, std::size_t k) {
    if(k > n) return 0;
    std::size_t r = 1;
    for(std::size_t i = 0; i < k; ++i) r *= n - i;
    return r;
}

void KConfig::check_arity(int k, int max_arity) {
    if(k < 2 || k > max_arity) {
        fail(ErrorCode::invalid_argument,
             "arity " + std::to_string(k) + " outside [2, " + std::to_string(max_arity) + "]");
    }
}

KConfig::KConfig(int k, Window window, std::vector<Value> values, int max_arity)
    : k_(k), window_(std::move(window)), values_(std::move(values)) {
    check_arity(k, max_arity);
    std::size_t expected = falling_factorial(window_.size(), static_cast<std::size_t>(k));
    if(values_.size() != expected) {
        fail(ErrorCode::invalid_argument, "KConfig expects " + std::to_string(expected) +
             " values, got " + std::to_string(values_.size()));
    }
    for(Value v : values_) {
        if(v != 1 && v != -1) fail(ErrorCode::invalid_argument, "KConfig values must be +1 or -1");
    }
}

std::size_t KConfig::index_of_ranks(std::span<const std::size_t> ranks) const {
    const std::size_t n = window_.size();
    const std::size_t k = static_cast<std::size_t>(k_);
    if(ranks.size() != k) {
        fail(ErrorCode::arity_mismatch, "tuple length " + std::to_string(ranks.size()) +
             " for arity " + std::to_string(k));
    }
    std::size_t index = 0;
    for(std::size_t j = 0; j < k; ++j) {
        if(ranks[j] >= n) fail(ErrorCode::out_of_window, "rank out of range");
        std::size_t smaller_unused = ranks[j];
        for(std::size_t i = 0; i < j; ++i) {
            if(ranks[i] == ranks[j]) fail(ErrorCode::invalid_argument, "tuple entries must be distinct");
            if(ranks[i] < ranks[j]) --smaller_unused;
        }
        index += smaller_unused * falling_factorial(n - j - 1, k - j - 1);
    }
    return index;
}

int KConfig::operator()(std::span<const Point> tuple) const {
    if(tuple.size() != static_cast<std::size_t>(k_)) {
        fail(ErrorCode::arity_mismatch, "tuple length does not match arity");
    }
    std::size_t fixed[16];
    std::vector<std::size_t> spill;
    std::size_t* ranks = fixed;
    if(tuple.size() > 16) {
        spill.resize(tuple.size());
        ranks = spill.data();
    }
    for(std::size_t i = 0; i < tuple.size(); ++i) ranks[i] = window_.index_of(tuple[i]);
    return at_ranks(std::span<const std::size_t>(ranks, tuple.size()));
}

KConfig KConfig::negated() const {
    std::vector<Value> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(), [](Value x) { return static_cast<Value>(-x); });
    KConfig out = *this;
    out.values_ = std::move(v);
    return out;
}

KConfig restrict(const KConfig& config, const Window& sub) {
    if(!config.window().includes(sub)) {
        fail(ErrorCode::out_of_window, "restriction window is not contained in the configuration window");
    }
    return KConfig::generate(config.arity(), sub, [&](std::span<const Point> t) { return config(t); },
                             std::max(config.arity(), KConfig::default_max_arity));
}

KConfig apply_perm(const FinPerm& alpha, const KConfig& config, const Window& image) {
    const FinPerm inv = inverse(alpha);
    for(Point i : image.elements()) {
        if(!config.window().contains(inv(i))) {
            fail(ErrorCode::domain_escape, "alpha^-1(" + std::to_string(i) + ") = " +
                 std::to_string(inv(i)) + " lies outside the configuration window");
        }
    }
    std::vector<Point> pulled(static_cast<std::size_t>(config.arity()));
    return KConfig::generate(config.arity(), image, [&](std::span<const Point> t) {
        for(std::size_t i = 0; i < t.size(); ++i) pulled[i] = inv(t[i]);
        return config(pulled);
    }, std::max(config.arity(), KConfig::default_max_arity));
}

KConfig apply_perm(const FinPerm& alpha, const KConfig& config) {
    return apply_perm(alpha, config, alpha.image(config.window()));
}

bool is_alternating(const KConfig& config) {
    const std::size_t k = static_cast<std::size_t>(config.arity());
    std::vector<std::size_t> swapped(k);
    bool ok = true;
    config.for_each([&](std::span<const std::size_t> ranks, int value) {
        if(!ok) return;
        std::copy(ranks.begin(), ranks.end(), swapped.begin());
        for(std::size_t j = 0; j + 1 < k; ++j) {
            std::swap(swapped[j], swapped[j + 1]);
            if(config.at_ranks(swapped) != -value) {
                ok = false;
                return;
            }
            std::swap(swapped[j], swapped[j + 1]);
        }
    });
    return ok;
}

} // namespace orderflow
