#include "orderflow/ergodic.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "orderflow/perm.hpp"

namespace orderflow {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Hit counts per pattern, indexed by order_index.
std::vector<std::uint64_t> sample_histogram(const LinearOrder& source, const Window& window,
                                            std::uint64_t trials, std::uint64_t seed,
                                            const SamplingOptions& opts) {
    const Window& ground = source.window();
    const std::size_t m = window.size();
    if(ground.size() < m) {
        fail(ErrorCode::ground_too_small, "ground of size " + std::to_string(ground.size()) +
             " is smaller than the pattern window " + std::to_string(m));
    }
    if(trials == 0) fail(ErrorCode::invalid_argument, "trials must be at least 1");
    if(opts.chunk_size == 0) fail(ErrorCode::invalid_argument, "chunk size must be at least 1");

    const std::size_t patterns = factorial(m);
    const std::uint64_t chunks = (trials + opts.chunk_size - 1) / opts.chunk_size;
    std::vector<std::vector<std::uint64_t>> per_chunk(chunks);

    auto run_chunk = [&](std::uint64_t c) {
        std::vector<std::uint64_t> counts(patterns, 0);
        const std::uint64_t begin = c * opts.chunk_size;
        const std::uint64_t end = std::min(trials, begin + opts.chunk_size);
        std::mt19937_64 rng(derive_seed(seed, "orbit_average", c));
        std::vector<std::size_t> idx(ground.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::vector<FinPerm::Pair> partial(m);
        for(std::uint64_t t = begin; t < end; ++t) {
            // partial Fisher-Yates: idx[0..m) is a uniform ordered m-subset of the ground
            for(std::size_t i = 0; i < m; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
                std::swap(idx[i], idx[pick(rng)]);
                partial[i] = {ground[idx[i]], window[i]};
            }
            if(m < 2) {
                ++counts[0];
                continue;
            }
            FinPerm alpha = FinPerm::extend(partial);
            LinearOrder seen = config2_to_order(transported_pattern(alpha, source, window));
            ++counts[order_index(seen)];
        }
        per_chunk[c] = std::move(counts);
    };

    unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    if(workers <= 1) {
        for(std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for(unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for(std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
            });
        }
    }

    std::vector<std::uint64_t> total(patterns, 0);
    for(const auto& counts : per_chunk) {
        for(std::size_t p = 0; p < patterns; ++p) total[p] += counts[p];
    }
    return total;
}

PatternStat make_stat(LinearOrder pattern, std::uint64_t hits, std::uint64_t trials, std::uint64_t seed) {
    PatternStat s{std::move(pattern), 0, 0.0, hits, trials, seed};
    s.exact = cylinder_measure(s.pattern);
    s.empirical = static_cast<double>(hits) / static_cast<double>(trials);
    return s;
}

} // namespace

Rational cylinder_measure(const LinearOrder& pattern) {
    BigInt n_fact = 1;
    for(std::size_t i = 2; i <= pattern.size(); ++i) n_fact *= i;
    return Rational(BigInt(1), n_fact);
}

LinearOrder random_linear_order(const Window& window, std::uint64_t seed) {
    std::vector<Point> seq(window.elements().begin(), window.elements().end());
    std::mt19937_64 rng(seed);
    std::shuffle(seq.begin(), seq.end(), rng);
    if(seq.empty()) return LinearOrder(window, {});
    return LinearOrder::from_sequence(std::move(seq));
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for(unsigned char ch : label) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return splitmix64(splitmix64(master ^ h) + index);
}

PatternStat orbit_average(const LinearOrder& source, const LinearOrder& pattern,
                          std::uint64_t trials, std::uint64_t seed, SamplingOptions opts) {
    auto counts = sample_histogram(source, pattern.window(), trials, seed, opts);
    return make_stat(pattern, counts[order_index(pattern)], trials, seed);
}

std::vector<PatternStat> orbit_frequencies(const LinearOrder& source, const Window& window,
                                           std::uint64_t trials, std::uint64_t seed,
                                           SamplingOptions opts) {
    auto counts = sample_histogram(source, window, trials, seed, opts);
    std::vector<PatternStat> out;
    out.reserve(counts.size());
    for(std::size_t i = 0; i < counts.size(); ++i) {
        out.push_back(make_stat(order_from_index(window, i), counts[i], trials, seed));
    }
    return out;
}

} // namespace orderflow
