#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace orderflow;

namespace {

PairColoring random_coloring(std::size_t n, std::mt19937_64& rng) {
    return PairColoring::generate(Window::range(0, n), [&](Point, Point) { return static_cast<int>(rng() & 1); });
}

// Checks all pairs directly against the coloring rule, without the library helper.
template <typename Rule>
bool all_pairs_same(std::span<const Point> s, Rule rule) {
    for(std::size_t i = 0; i < s.size(); ++i) {
        for(std::size_t j = i + 1; j < s.size(); ++j) {
            if(rule(s[i], s[j]) != rule(s[0], s[1])) return false;
        }
    }
    return true;
}

} // namespace

TEST_SUITE("ramsey_dynamics") {

TEST_CASE("pair coloring indexing") {
    auto c = PairColoring::generate(Window({2, 5, 9, 11}), [](Point a, Point b) { return (a + b) % 2; });
    CHECK(c.color(2, 9) == 1);
    CHECK(c.color(9, 2) == 1);
    CHECK(c.color(5, 9) == 0);
    CHECK(c.color(9, 11) == 0);
    CHECK_THROWS_AS(c.color(2, 2), Error);
    CHECK_THROWS_AS(PairColoring(Window::range(0, 3), {0, 1}), Error);
}

TEST_CASE("ramsey_bound") {
    CHECK(ramsey_bound(1) == 4);
    CHECK(ramsey_bound(4) == 256);
}

TEST_CASE("monochromatic input returns the first m points") {
    auto c = PairColoring::generate(Window::range(10, 64), [](Point, Point) { return 0; });
    MonoSubset s = ramsey_mono_subset(c, 3);
    CHECK(s.members == std::vector<Point>{10, 11, 12});
    CHECK(s.color == 0);
    CHECK(s.meets_bound);

    auto small = PairColoring::generate(Window::range(10, 3), [](Point, Point) { return 0; });
    MonoSubset b = ramsey_mono_subset(small, 3, RamseyMode::best_effort);
    CHECK(b.members == std::vector<Point>{10, 11, 12});
    CHECK_FALSE(b.meets_bound);
}

TEST_CASE("agreement coloring of two identical orders is constant") {
    std::mt19937_64 rng(1);
    LinearOrder o = random_linear_order(Window::range(0, 64), rng());
    auto c = PairColoring::generate(o.window(), [&](Point a, Point b) { return o.less(a, b) == o.less(a, b) ? 0 : 1; });
    MonoSubset s = ramsey_mono_subset(c, 3);
    CHECK(s.color == 0);
    CHECK(s.members == std::vector<Point>{0, 1, 2});
}

TEST_CASE("strict mode enforces the bound") {
    std::mt19937_64 rng(5);
    auto c = random_coloring(255, rng);
    try {
        ramsey_mono_subset(c, 4);
        FAIL("expected GroundTooSmall");
    } catch(const Error& e) {
        CHECK(e.code() == ErrorCode::ground_too_small);
    }
    MonoSubset b = ramsey_mono_subset(c, 4, RamseyMode::best_effort);
    CHECK_FALSE(b.meets_bound);
    CHECK(is_monochromatic(c, b.members));
}

TEST_CASE("property: random colorings yield verified, deterministic monochromatic sets") {
    std::mt19937_64 rng(20240611);
    for(int rep = 0; rep < 40; ++rep) {
        const std::size_t m = 2 + rep % 3;
        const std::size_t n = ramsey_bound(m) + rep % 7;
        std::vector<std::uint8_t> colors(n * (n - 1) / 2);
        for(auto& x : colors) x = rng() & 1;
        PairColoring c(Window::range(0, n), colors);
        MonoSubset s = ramsey_mono_subset(c, m);
        CHECK(s.members.size() == m);
        CHECK(std::is_sorted(s.members.begin(), s.members.end()));
        CHECK(all_pairs_same(s.members, [&](Point a, Point b) {
            std::size_t i = static_cast<std::size_t>(a), j = static_cast<std::size_t>(b);
            return colors[i * (2 * n - i - 1) / 2 + (j - i - 1)];
        }));
        MonoSubset again = ramsey_mono_subset(c, m);
        CHECK(again.members == s.members);
        CHECK(again.color == s.color);
    }
    auto big = random_coloring(256, rng);
    MonoSubset s = ramsey_mono_subset(big, 4);
    CHECK(s.members.size() == 4);
    CHECK(is_monochromatic(big, s.members));
}

TEST_CASE("minimality witness examples") {
    LinearOrder source = LinearOrder::natural(Window::range(0, 20));
    LinearOrder target = LinearOrder::from_sequence({2, 0, 1});
    Witness w = minimality_witness(source, target);
    CHECK(w.alpha(0) == 2);
    CHECK(w.alpha(1) == 0);
    CHECK(w.alpha(2) == 1);
    CHECK(verify_minimality(w, source, target));
    CHECK(transported_pattern(w.alpha, source, target.window()) == lin_order_to_config2(target));

    // target equal to the restriction of the source: identity suffices
    LinearOrder same = restrict(source, Window::range(0, 4));
    Witness id = minimality_witness(source, same);
    CHECK(id.alpha.is_identity());
    CHECK(verify_minimality(id, source, same));

    // a tampered witness fails verification
    Witness bad = w;
    bad.alpha = compose(FinPerm::from_pairs({{0, 1}, {1, 0}}), w.alpha);
    CHECK_FALSE(verify_minimality(bad, source, target));

    try {
        minimality_witness(LinearOrder::natural(Window::range(0, 2)), target);
        FAIL("expected GroundTooSmall");
    } catch(const Error& e) {
        CHECK(e.code() == ErrorCode::ground_too_small);
    }
}

TEST_CASE("every pattern on a 4-window has a minimality witness") {
    std::mt19937_64 rng(12);
    LinearOrder source = random_linear_order(Window::range(0, 20), rng());
    int verified = 0;
    for_each_order(Window({3, 10, 25, 40}), [&](const LinearOrder& target) {
        Witness w = minimality_witness(source, target);
        if(verify_minimality(w, source, target)) ++verified;
    });
    CHECK(verified == 24);
}

TEST_CASE("proximality witness examples") {
    std::mt19937_64 rng(3);
    Window ground = Window::range(0, 256);
    Window target = Window::range(0, 4);
    LinearOrder o1 = random_linear_order(ground, rng());

    Witness same = proximality_witness(o1, o1, target);
    CHECK(same.kind == WitnessKind::proximality_agree);
    CHECK(same.alpha.is_identity());
    CHECK(verify_proximality(same, o1, o1));

    Witness rev = proximality_witness(o1, reverse(o1), target);
    CHECK(rev.kind == WitnessKind::proximality_reverse);
    CHECK(verify_proximality(rev, o1, reverse(o1)));

    for(int rep = 0; rep < 10; ++rep) {
        LinearOrder a = random_linear_order(ground, rng());
        LinearOrder b = random_linear_order(ground, rng());
        Witness w = proximality_witness(a, b, Window({-7, 2, 300, 301}));
        CHECK(verify_proximality(w, a, b));
        Witness flipped = w;
        flipped.kind = w.kind == WitnessKind::proximality_agree ? WitnessKind::proximality_reverse
                                                                 : WitnessKind::proximality_agree;
        CHECK_FALSE(verify_proximality(flipped, a, b));
    }

    try {
        proximality_witness(restrict(o1, Window::range(0, 16)), restrict(o1, Window::range(0, 16)), target);
        FAIL("expected GroundTooSmall");
    } catch(const Error& e) {
        CHECK(e.code() == ErrorCode::ground_too_small);
    }
}

TEST_CASE("witness kinds round-trip through their names") {
    for(auto k : {WitnessKind::minimality, WitnessKind::proximality_agree, WitnessKind::proximality_reverse}) {
        CHECK(witness_kind_from_string(to_string(k)) == k);
    }
    CHECK_THROWS_AS(witness_kind_from_string("proximal"), Error);
}

} // TEST_SUITE
