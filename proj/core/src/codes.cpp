#include "orderflow/codes.hpp"

#include <string>

namespace orderflow {

BlockCode::BlockCode(int k, std::vector<std::int8_t> table, int max_arity)
    : k_(k), table_(std::move(table)) {
    KConfig::check_arity(k, max_arity);
    if(table_.size() != factorial(static_cast<std::size_t>(k))) {
        fail(ErrorCode::invalid_argument, "block code table needs k! entries");
    }
    for(auto v : table_) {
        if(v != 1 && v != -1) fail(ErrorCode::invalid_argument, "block code values must be +1 or -1");
    }
}

BlockCode sign_code(int k) {
    KConfig::check_arity(k, KConfig::default_max_arity);
    const std::size_t n = factorial(static_cast<std::size_t>(k));
    std::vector<std::int8_t> table(n);
    for(std::size_t i = 0; i < n; ++i) {
        table[i] = static_cast<std::int8_t>(OrderType::from_index(static_cast<std::size_t>(k), i).sign());
    }
    return BlockCode(k, std::move(table));
}

BlockCode constant_code(int k, int value) {
    KConfig::check_arity(k, KConfig::default_max_arity);
    return BlockCode(k, std::vector<std::int8_t>(factorial(static_cast<std::size_t>(k)),
                                                 static_cast<std::int8_t>(value)));
}

KConfig apply_code(const BlockCode& code, const LinearOrder& order) {
    const std::size_t k = static_cast<std::size_t>(code.arity());
    if(order.size() < k) {
        fail(ErrorCode::window_too_small, "window of size " + std::to_string(order.size()) +
             " is smaller than the code arity " + std::to_string(k));
    }
    std::vector<std::size_t> ranks(k);
    return KConfig::generate(code.arity(), order.window(), [&](std::span<const Point> t) {
        for(std::size_t i = 0; i < k; ++i) ranks[i] = order.rank(t[i]);
        return code(sorting_permutation<std::size_t>(ranks));
    }, std::max(code.arity(), KConfig::default_max_arity));
}

KConfig circular_code(const LinearOrder& order) {
    return apply_code(sign_code(3), order);
}

bool is_alternating_code(const BlockCode& code) {
    const std::size_t k = static_cast<std::size_t>(code.arity());
    const std::size_t n = factorial(k);
    std::vector<OrderType> perms;
    perms.reserve(n);
    for(std::size_t i = 0; i < n; ++i) perms.push_back(OrderType::from_index(k, i));
    for(const auto& sigma : perms) {
        for(const auto& tau : perms) {
            if(code(compose(sigma, inverse(tau))) != tau.sign() * code(sigma)) return false;
        }
    }
    return true;
}

bool code_image_is_alternating(const BlockCode& code, std::size_t window_size) {
    if(window_size > 8) fail(ErrorCode::window_too_large, "image criterion is exhaustive; use |W| <= 8");
    if(window_size < static_cast<std::size_t>(code.arity())) {
        fail(ErrorCode::window_too_small, "window smaller than the code arity");
    }
    bool ok = true;
    for_each_order(Window::range(0, window_size), [&](const LinearOrder& o) {
        if(ok && !is_alternating(apply_code(code, o))) ok = false;
    });
    return ok;
}

int moment_curve_orientation(std::span<const Rational> params) {
    const std::size_t k = params.size();
    if(k < 2) fail(ErrorCode::invalid_argument, "moment curve orientation needs at least two parameters");
    for(std::size_t i = 0; i < k; ++i) {
        for(std::size_t j = i + 1; j < k; ++j) {
            if(params[i] == params[j]) fail(ErrorCode::degenerate_input, "repeated moment curve parameter");
        }
    }
    RationalMatrix m(k, std::vector<Rational>(k));
    for(std::size_t i = 0; i < k; ++i) {
        Rational p = 1;
        for(std::size_t j = 0; j < k; ++j) {
            m[i][j] = p;
            p *= params[i];
        }
    }
    return sign(determinant(m));
}

KConfig moment_curve_config(const LinearOrder& order, int k) {
    std::vector<Rational> params(static_cast<std::size_t>(k));
    return KConfig::generate(k, order.window(), [&](std::span<const Point> t) {
        for(std::size_t i = 0; i < t.size(); ++i) params[i] = Rational(static_cast<long long>(order.rank(t[i])));
        return moment_curve_orientation(params);
    });
}

} // namespace orderflow
