#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "orderflow/orders.hpp"
#include "orderflow/rational.hpp"

namespace orderflow {

/// Mass 1/|W|! of the cylinder of configurations showing `pattern` on its window.
Rational cylinder_measure(const LinearOrder& pattern);

/// Uniform over the |W|! rankings; the same seed gives the same order.
LinearOrder random_linear_order(const Window& window, std::uint64_t seed);

/// Seed for stream `index` of the task `label`, derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index);

struct PatternStat {
    LinearOrder pattern;
    Rational exact;
    double empirical = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct SamplingOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
    /// Trials per seeded chunk. Results depend on it, not on `workers`.
    std::uint64_t chunk_size = 8192;
};

/// Frequency with which a uniformly random injection of |W| ground points onto W, applied
/// as a finite-support permutation, transports `source` to `pattern` on W.
/// Throws GroundTooSmall and InvalidArgument (trials == 0).
PatternStat orbit_average(const LinearOrder& source, const LinearOrder& pattern,
                          std::uint64_t trials, std::uint64_t seed, SamplingOptions opts = {});

/// All |W|! patterns at once, drawn from the same sample stream as orbit_average, in
/// order_index order. Hits sum to `trials`.
std::vector<PatternStat> orbit_frequencies(const LinearOrder& source, const Window& window,
                                           std::uint64_t trials, std::uint64_t seed,
                                           SamplingOptions opts = {});

} // namespace orderflow
