#include <random>
#include <set>

#include "doctest.h"
#include "test_support.hpp"

using namespace orderflow;
using orderflow::testing::random_perm;

namespace {

OrderType ot(std::initializer_list<int> one_based) {
    std::vector<std::uint8_t> v;
    for(int x : one_based) v.push_back(static_cast<std::uint8_t>(x - 1));
    return OrderType(v);
}

} // namespace

TEST_SUITE("orders") {

TEST_CASE("LinearOrder construction") {
    LinearOrder o = LinearOrder::from_sequence({7, 3, 9});
    CHECK(o.window() == Window({3, 7, 9}));
    CHECK(o.rank(7) == 0);
    CHECK(o.rank(3) == 1);
    CHECK(o.rank(9) == 2);
    CHECK(o.less(3, 9));
    CHECK_THROWS_AS(LinearOrder(Window({0, 1}), {0, 0}), Error);
    CHECK_THROWS_AS(LinearOrder(Window({0, 1}), {0, 2}), Error);
    CHECK_THROWS_AS(LinearOrder::from_sequence({1, 1}), Error);
}

TEST_CASE("order enumeration and indexing") {
    for(std::size_t n = 0; n <= 5; ++n) {
        Window w = Window::range(3, n);
        std::size_t i = 0;
        std::set<std::vector<Point>> seen;
        bool ok = true;
        for_each_order(w, [&](const LinearOrder& o) {
            ok = ok && order_index(o) == i && order_from_index(w, i) == o;
            seen.insert({o.sequence().begin(), o.sequence().end()});
            ++i;
        });
        CHECK(ok);
        CHECK(i == factorial(n));
        CHECK(seen.size() == factorial(n));
    }
}

TEST_CASE("lin_order_to_config2 examples") {
    KConfig c = lin_order_to_config2(LinearOrder::from_sequence({0, 1}));
    CHECK(c({0, 1}) == 1);
    CHECK(c({1, 0}) == -1);

    KConfig d = lin_order_to_config2(LinearOrder::from_sequence({2, 1, 0}));
    CHECK(d({2, 1}) == 1);
    CHECK(d({1, 0}) == 1);
    CHECK(d({2, 0}) == 1);
    CHECK(d({1, 2}) == -1);
    CHECK(d({0, 1}) == -1);
    CHECK(d({0, 2}) == -1);

    try {
        lin_order_to_config2(LinearOrder::from_sequence({4}));
        FAIL("expected DegenerateWindow");
    } catch(const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_window);
    }
}

TEST_CASE("config2_is_linear_order examples") {
    bool ok = true;
    std::size_t count = 0;
    for_each_order(Window::range(0, 4), [&](const LinearOrder& o) {
        ok = ok && config2_is_linear_order(lin_order_to_config2(o));
        ++count;
    });
    CHECK(ok);
    CHECK(count == 24);

    // alternating but cyclic: 0 < 1 < 2 < 0
    KConfig cyc = KConfig::generate(2, Window::range(0, 3), [](std::span<const Point> t) {
        const bool forward = (t[1] - t[0] + 3) % 3 == 1;
        return forward ? 1 : -1;
    });
    CHECK(is_alternating(cyc));
    CHECK(cyc({0, 1}) == 1);
    CHECK(cyc({1, 2}) == 1);
    CHECK(cyc({2, 0}) == 1);
    CHECK_FALSE(config2_is_linear_order(cyc));

    CHECK_FALSE(config2_is_linear_order(KConfig::generate(2, Window::range(0, 3), [](auto) { return 1; })));
    try {
        config2_is_linear_order(KConfig::generate(3, Window::range(0, 3), [](auto) { return 1; }));
        FAIL("expected ArityMismatch");
    } catch(const Error& e) {
        CHECK(e.code() == ErrorCode::arity_mismatch);
    }
}

TEST_CASE("config2_to_order examples and round trips") {
    CHECK(config2_to_order(KConfig(2, Window({0, 1}), {1, -1})) == LinearOrder::from_sequence({0, 1}));
    LinearOrder o = config2_to_order(lin_order_to_config2(LinearOrder::from_sequence({7, 3, 9})));
    CHECK(o.rank(7) == 0);
    CHECK(o.rank(3) == 1);
    CHECK(o.rank(9) == 2);

    for(std::size_t n = 2; n <= 5; ++n) {
        bool ok = true;
        for_each_order(Window::range(0, n), [&](const LinearOrder& x) {
            ok = ok && config2_to_order(lin_order_to_config2(x)) == x;
        });
        CHECK(ok);
    }
    // the other direction over every k = 2 configuration on |W| <= 4
    for(std::size_t n = 2; n <= 4; ++n) {
        const std::size_t tuples = n * (n - 1);
        std::size_t valid = 0;
        for(std::uint32_t bits = 0; bits < (1u << tuples); ++bits) {
            std::vector<KConfig::Value> v(tuples);
            for(std::size_t i = 0; i < tuples; ++i) v[i] = (bits >> i) & 1 ? 1 : -1;
            KConfig c(2, Window::range(0, n), v);
            if(!config2_is_linear_order(c)) {
                CHECK_THROWS_AS(config2_to_order(c), Error);
                continue;
            }
            ++valid;
            CHECK(lin_order_to_config2(config2_to_order(c)) == c);
        }
        CHECK(valid == factorial(n));
    }
}

TEST_CASE("order_type examples") {
    LinearOrder nat = LinearOrder::natural(Window::range(0, 6));
    std::vector<Point> inc{1, 3, 4, 5};
    CHECK(order_type(inc, nat) == OrderType::identity(4));

    std::vector<Point> pair{5, 2};
    CHECK(order_type(pair, nat) == ot({2, 1}));

    // (b, c, a) with a < b < c
    std::vector<Point> bca{3, 4, 1};
    CHECK(order_type(bca, nat) == ot({3, 1, 2}));

    std::vector<Point> outside{1, 42};
    CHECK_THROWS_AS(order_type(outside, nat), Error);
}

TEST_CASE("property: permuting a tuple by tau precomposes its order type with tau^-1") {
    std::mt19937_64 rng(77);
    for(int rep = 0; rep < 300; ++rep) {
        const std::size_t k = 2 + rep % 4;
        LinearOrder o = random_linear_order(Window::range(0, 8), rng());
        std::vector<Point> t(o.window().elements().begin(), o.window().elements().end());
        std::shuffle(t.begin(), t.end(), rng);
        t.resize(k);
        OrderType tau = OrderType::from_index(k, rng() % factorial(k));
        std::vector<Point> moved(k);
        for(std::size_t i = 0; i < k; ++i) moved[i] = t[tau(i)];
        CHECK(order_type(moved, o) == compose(inverse(tau), order_type(t, o)));
    }
}

TEST_CASE("reverse") {
    CHECK(reverse(LinearOrder::from_sequence({0, 1, 2})) == LinearOrder::from_sequence({2, 1, 0}));
    for(std::size_t n = 1; n <= 5; ++n) {
        bool ok = true;
        for_each_order(Window::range(0, n), [&](const LinearOrder& o) {
            ok = ok && reverse(reverse(o)) == o;
            if(n >= 2) {
                ok = ok && reverse(o) != o && lin_order_to_config2(reverse(o)) == lin_order_to_config2(o).negated();
            }
        });
        CHECK(ok);
    }
}

TEST_CASE("reversal_class_rep") {
    CHECK(reversal_class_rep(LinearOrder::from_sequence({0, 1})) == LinearOrder::from_sequence({0, 1}));
    CHECK(reversal_class_rep(LinearOrder::from_sequence({1, 0})) == LinearOrder::from_sequence({0, 1}));
    std::set<std::vector<Point>> classes;
    bool ok = true;
    for_each_order(Window::range(0, 4), [&](const LinearOrder& o) {
        LinearOrder r = reversal_class_rep(o);
        ok = ok && r == reversal_class_rep(reverse(o)) && reversal_class_rep(r) == r;
        ok = ok && r.rank(0) < r.rank(3);
        classes.insert({r.sequence().begin(), r.sequence().end()});
    });
    CHECK(ok);
    CHECK(classes.size() == 12);
    try {
        reversal_class_rep(LinearOrder::from_sequence({5}));
        FAIL("expected DegenerateWindow");
    } catch(const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_window);
    }
}

TEST_CASE("property: relabelling is equivariant for the k = 2 configuration") {
    std::mt19937_64 rng(8);
    for(int rep = 0; rep < 200; ++rep) {
        Window w = Window::range(0, 2 + rep % 6);
        LinearOrder o = random_linear_order(w, rng());
        FinPerm a = random_perm(w, rng);
        CHECK(lin_order_to_config2(relabel(a, o)) == apply_perm(a, lin_order_to_config2(o)));
    }
}

TEST_CASE("is_circular_realizable") {
    for(std::size_t n = 3; n <= 5; ++n) {
        bool ok = true;
        for_each_order(Window::range(0, n), [&](const LinearOrder& o) { ok = ok && is_circular_realizable(circular_code(o)); });
        CHECK(ok);
    }

    // alternating, every cyclic triple +1: the circular order of 0 < 1 < 2
    KConfig cyc = KConfig::generate(3, Window::range(0, 3), [](std::span<const Point> t) {
        const bool cyclic = (t[1] - t[0] + 3) % 3 == 1;
        return cyclic ? 1 : -1;
    });
    CHECK(is_circular_realizable(cyc));

    // Found by brute force over the 16 alternating k = 3 configurations on {0,1,2,3}: the one
    // with ascending triples (012, 013, 023, 123) = (+, +, +, -) matches none of the 24 orders.
    const int ascending[4] = {1, 1, 1, -1};
    KConfig bad = KConfig::generate(3, Window::range(0, 4), [&](std::span<const Point> t) {
        std::vector<Point> s(t.begin(), t.end());
        std::sort(s.begin(), s.end());
        const int which = s == std::vector<Point>{0, 1, 2} ? 0 : s == std::vector<Point>{0, 1, 3} ? 1
                        : s == std::vector<Point>{0, 2, 3} ? 2 : 3;
        return ascending[which] * sorting_permutation<Point>(t).sign();
    });
    CHECK(is_alternating(bad));
    CHECK_FALSE(is_circular_realizable(bad));

    try {
        is_circular_realizable(lin_order_to_config2(LinearOrder::natural(Window::range(0, 3))));
        FAIL("expected ArityMismatch");
    } catch(const Error& e) {
        CHECK(e.code() == ErrorCode::arity_mismatch);
    }
    try {
        is_circular_realizable(circular_code(LinearOrder::natural(Window::range(0, 9))));
        FAIL("expected WindowTooLarge");
    } catch(const Error& e) {
        CHECK(e.code() == ErrorCode::window_too_large);
    }
    CHECK(is_circular_realizable(circular_code(LinearOrder::natural(Window::range(0, 9))), 9));
}

TEST_CASE("realizable k = 3 configurations number (n-1)!") {
    for(std::size_t n = 3; n <= 5; ++n) {
        std::set<std::vector<KConfig::Value>> images;
        for_each_order(Window::range(0, n), [&](const LinearOrder& o) {
            KConfig c = circular_code(o);
            images.insert({c.values().begin(), c.values().end()});
        });
        CHECK(images.size() == factorial(n - 1));
    }
}

} // TEST_SUITE
