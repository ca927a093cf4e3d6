#include "orderflow/perm.hpp"

#include <algorithm>
#include <iterator>

namespace orderflow {

namespace {

const FinPerm::Pair* find_source(std::span<const FinPerm::Pair> pairs, Point x) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), x,
        [](const FinPerm::Pair& p, Point v) { return p.first < v; });
    if(it != pairs.end() && it->first == x) return &*it;
    return nullptr;
}

} // namespace

FinPerm FinPerm::from_pairs(std::vector<Pair> pairs) {
    std::erase_if(pairs, [](const Pair& p) { return p.first == p.second; });
    std::sort(pairs.begin(), pairs.end());

    std::vector<Point> sources, targets;
    sources.reserve(pairs.size());
    targets.reserve(pairs.size());
    for(const auto& [s, t] : pairs) {
        sources.push_back(s);
        targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());
    if(std::adjacent_find(sources.begin(), sources.end()) != sources.end()) {
        fail(ErrorCode::invalid_argument, "FinPerm: repeated source");
    }
    if(std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
        fail(ErrorCode::invalid_argument, "FinPerm: repeated target");
    }
    if(sources != targets) {
        fail(ErrorCode::invalid_argument, "FinPerm: sources and targets differ, not a bijection");
    }

    FinPerm out;
    out.pairs_ = std::move(pairs);
    return out;
}

FinPerm FinPerm::extend(std::span<const Pair> partial) {
    std::vector<Point> sources, targets;
    for(const auto& [s, t] : partial) {
        sources.push_back(s);
        targets.push_back(t);
    }
    std::sort(sources.begin(), sources.end());
    std::sort(targets.begin(), targets.end());
    if(std::adjacent_find(sources.begin(), sources.end()) != sources.end() ||
       std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
        fail(ErrorCode::invalid_argument, "FinPerm::extend: partial map is not injective");
    }

    // points still needing an image are targets that are not sources, and vice versa
    std::vector<Point> free_sources, free_targets;
    std::set_difference(targets.begin(), targets.end(), sources.begin(), sources.end(),
        std::back_inserter(free_sources));
    std::set_difference(sources.begin(), sources.end(), targets.begin(), targets.end(),
        std::back_inserter(free_targets));

    std::vector<Pair> pairs(partial.begin(), partial.end());
    for(std::size_t i = 0; i < free_sources.size(); ++i) {
        pairs.emplace_back(free_sources[i], free_targets[i]);
    }
    return from_pairs(std::move(pairs));
}

Point FinPerm::operator()(Point x) const {
    const Pair* p = find_source(pairs_, x);
    return p ? p->second : x;
}

Point FinPerm::preimage(Point x) const {
    for(const auto& [s, t] : pairs_) {
        if(t == x) return s;
    }
    return x;
}

std::vector<Point> FinPerm::support() const {
    std::vector<Point> out;
    out.reserve(pairs_.size());
    for(const auto& p : pairs_) out.push_back(p.first);
    return out;
}

Window FinPerm::image(const Window& w) const {
    std::vector<Point> out;
    out.reserve(w.size());
    for(Point x : w.elements()) out.push_back((*this)(x));
    return Window::from_unsorted(std::move(out));
}

Window FinPerm::preimage(const Window& w) const {
    return inverse(*this).image(w);
}

FinPerm compose(const FinPerm& alpha, const FinPerm& beta) {
    std::vector<Point> domain = alpha.support();
    for(const auto& p : beta.pairs()) domain.push_back(p.first);
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());

    std::vector<FinPerm::Pair> pairs;
    pairs.reserve(domain.size());
    for(Point x : domain) pairs.emplace_back(x, alpha(beta(x)));
    return FinPerm::from_pairs(std::move(pairs));
}

FinPerm inverse(const FinPerm& alpha) {
    std::vector<FinPerm::Pair> pairs;
    pairs.reserve(alpha.pairs().size());
    for(const auto& [s, t] : alpha.pairs()) pairs.emplace_back(t, s);
    return FinPerm::from_pairs(std::move(pairs));
}

} // namespace orderflow
