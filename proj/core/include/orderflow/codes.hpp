#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orderflow/config.hpp"
#include "orderflow/orders.hpp"
#include "orderflow/rational.hpp"

namespace orderflow {

/// A tuple-local factor map from linear orders into k-configurations: the value on a
/// tuple depends only on its order type. Indexed by OrderType::index().
class BlockCode {
public:
    /// Throws InvalidArgument unless the table has k! entries of +-1.
    BlockCode(int k, std::vector<std::int8_t> table, int max_arity = KConfig::default_max_arity);

    int arity() const noexcept { return k_; }
    std::span<const std::int8_t> table() const noexcept { return table_; }
    int operator()(const OrderType& sigma) const { return table_[sigma.index()]; }

    friend bool operator==(const BlockCode&, const BlockCode&) = default;

private:
    int k_;
    std::vector<std::int8_t> table_;
};

/// table[sigma] = sgn(sigma)
BlockCode sign_code(int k);
BlockCode constant_code(int k, int value);

/// w(t) = code[order_type(t, order)]. Throws WindowTooSmall if |W| < k.
KConfig apply_code(const BlockCode& code, const LinearOrder& order);

/// Triple orientation of the order read cyclically; same as apply_code(sign_code(3), order).
KConfig circular_code(const LinearOrder& order);

/// table[sigma . tau^-1] = sgn(tau) table[sigma] for all sigma, tau.
bool is_alternating_code(const BlockCode& code);
/// Image criterion: apply_code(code, o) is alternating for every order o on a window of
/// size `window_size` (exhaustive; window_size <= 8).
bool code_image_is_alternating(const BlockCode& code, std::size_t window_size);

/// Sign of det[1, t_i, t_i^2, ..., t_i^(k-1)], the orientation of the simplex spanned by
/// the points (t_i, ..., t_i^(k-1)) of the moment curve. Throws DegenerateInput on a repeated
/// entry and InvalidArgument for fewer than two entries.
int moment_curve_orientation(std::span<const Rational> params);

/// w(t) = moment_curve_orientation(rank(t_1), ..., rank(t_k)) for points placed on the
/// moment curve by rank.
KConfig moment_curve_config(const LinearOrder& order, int k);

} // namespace orderflow
