#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "orderflow/cli.hpp"

namespace orderflow::cli {

namespace {

KConfig random_config(int k, const Window& w, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    return KConfig::generate(k, w, [&](std::span<const Point>) { return coin(rng) ? 1 : -1; });
}

// Random permutation of W together with a few points just above it.
FinPerm random_perm(const Window& w, std::mt19937_64& rng) {
    std::vector<Point> dom(w.elements().begin(), w.elements().end());
    const Point top = w.empty() ? 0 : w.back();
    for(Point i = 1; i <= 3; ++i) dom.push_back(top + i);
    std::vector<Point> img = dom;
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<FinPerm::Pair> pairs;
    for(std::size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], img[i]);
    return FinPerm::from_pairs(std::move(pairs));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if(!in) fail(ErrorCode::invalid_argument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::vector<CheckResult> run_invariant_suite(const RunConfig& rc) {
    const std::size_t max_n = rc.max_window;
    std::vector<CheckResult> results;
    std::mt19937_64 rng(derive_seed(rc.seed, "verify", 0));

    auto check = [&](std::string name, std::string params, const std::function<bool()>& body) {
        if(!results.empty() && !results.back().passed) return;
        bool ok = false;
        try {
            ok = body();
        } catch(const Error&) {
            ok = false;
        }
        results.push_back({std::move(name), std::move(params), ok});
    };
    const std::string upto = "|W|<=" + std::to_string(max_n);

    if(!rc.fixture.empty()) {
        check("fixture-linear-order", rc.fixture, [&] {
            KConfig c = parse_kconfig(read_file(rc.fixture));
            return c.arity() == 2 && config2_is_linear_order(c) &&
                   lin_order_to_config2(config2_to_order(c)) == c;
        });
    }

    check("bijection", upto, [&] {
        for(std::size_t n = 2; n <= max_n; ++n) {
            bool ok = true;
            for_each_order(Window::range(0, n), [&](const LinearOrder& o) {
                KConfig c = lin_order_to_config2(o);
                ok = ok && config2_is_linear_order(c) && config2_to_order(c) == o;
            });
            if(!ok) return false;
        }
        return true;
    });

    check("bijection-inverse", "|W|<=" + std::to_string(std::min<std::size_t>(max_n, 4)), [&] {
        for(std::size_t n = 2; n <= std::min<std::size_t>(max_n, 4); ++n) {
            const Window w = Window::range(0, n);
            const std::size_t pairs = n * (n - 1) / 2;
            std::size_t valid = 0;
            for(std::uint32_t bits = 0; bits < (1u << pairs); ++bits) {
                KConfig c = KConfig::generate(2, w, [&](std::span<const Point> t) {
                    Point a = std::min(t[0], t[1]), b = std::max(t[0], t[1]);
                    std::size_t bit = static_cast<std::size_t>(a) * (2 * n - static_cast<std::size_t>(a) - 1) / 2 +
                                      static_cast<std::size_t>(b - a - 1);
                    int v = (bits >> bit) & 1 ? 1 : -1;
                    return t[0] < t[1] ? v : -v;
                });
                if(!config2_is_linear_order(c)) continue;
                ++valid;
                if(lin_order_to_config2(config2_to_order(c)) != c) return false;
            }
            if(valid != factorial(n)) return false;
        }
        return true;
    });

    check("action-laws", upto + " k=2,3", [&] {
        for(std::size_t n = 3; n <= max_n + 2; ++n) {
            for(int k : {2, 3}) {
                for(int rep = 0; rep < 20; ++rep) {
                    Window w = Window::range(0, n);
                    KConfig c = random_config(k, w, rng);
                    FinPerm a = random_perm(w, rng), b = random_perm(w, rng);
                    if(apply_perm(FinPerm{}, c) != c) return false;
                    if(apply_perm(compose(a, b), c) != apply_perm(a, apply_perm(b, c))) return false;
                }
            }
        }
        return true;
    });

    check("alternation", upto + " k=2,3,4", [&] {
        for(std::size_t n = 2; n <= max_n; ++n) {
            for(int k = 2; k <= std::min<int>(4, static_cast<int>(n)); ++k) {
                BlockCode code = sign_code(k);
                bool ok = true;
                for_each_order(Window::range(0, n), [&](const LinearOrder& o) {
                    ok = ok && is_alternating(apply_code(code, o));
                });
                if(!ok) return false;
            }
        }
        return true;
    });

    check("alternation-preserved", upto, [&] {
        for(std::size_t n = 3; n <= max_n; ++n) {
            for(int rep = 0; rep < 20; ++rep) {
                Window w = Window::range(0, n);
                LinearOrder o = random_linear_order(w, rng());
                KConfig c = apply_code(sign_code(3), o);
                if(!is_alternating(apply_perm(random_perm(w, rng), c))) return false;
            }
        }
        return true;
    });

    check("equivariance", upto + " codes=sign-2,sign-3,sign-4,circular", [&] {
        for(std::size_t n = 4; n <= std::max<std::size_t>(max_n, 4); ++n) {
            Window w = Window::range(0, n);
            for(int rep = 0; rep < 25; ++rep) {
                LinearOrder o = random_linear_order(w, rng());
                FinPerm a = random_perm(w, rng);
                for(int k : {2, 3, 4}) {
                    BlockCode code = sign_code(k);
                    if(apply_code(code, relabel(a, o)) != apply_perm(a, apply_code(code, o))) return false;
                }
                if(circular_code(relabel(a, o)) != apply_perm(a, circular_code(o))) return false;
            }
        }
        return true;
    });

    check("reversal", upto, [&] {
        for(std::size_t n = 2; n <= max_n; ++n) {
            bool ok = true;
            for_each_order(Window::range(0, n), [&](const LinearOrder& o) {
                LinearOrder r = reverse(o);
                ok = ok && r != o && reverse(r) == o &&
                     lin_order_to_config2(r) == lin_order_to_config2(o).negated() &&
                     reversal_class_rep(o) == reversal_class_rep(r);
            });
            if(!ok) return false;
        }
        return true;
    });

    const std::size_t circ_n = std::min<std::size_t>(max_n, 6);
    check("circular-count", "3<=n<=" + std::to_string(circ_n), [&] {
        for(std::size_t n = 3; n <= circ_n; ++n) {
            std::set<std::vector<KConfig::Value>> images;
            bool ok = true;
            for_each_order(Window::range(0, n), [&](const LinearOrder& o) {
                KConfig c = circular_code(o);
                if(images.insert({c.values().begin(), c.values().end()}).second) {
                    ok = ok && is_circular_realizable(c);
                }
            });
            if(!ok || images.size() != factorial(n - 1)) return false;
        }
        return true;
    });

    check("moment-curve", "k=4 4<=n<=" + std::to_string(std::min<std::size_t>(max_n, 5)), [&] {
        for(std::size_t n = 4; n <= std::min<std::size_t>(max_n, 5); ++n) {
            bool ok = true;
            for_each_order(Window::range(0, n), [&](const LinearOrder& o) {
                ok = ok && apply_code(sign_code(4), o) == moment_curve_config(o, 4);
            });
            if(!ok) return false;
        }
        return true;
    });

    check("cylinder-mass", upto, [&] {
        for(std::size_t n = 1; n <= max_n; ++n) {
            Rational total = 0;
            for_each_order(Window::range(0, n), [&](const LinearOrder& o) { total += cylinder_measure(o); });
            if(total != 1) return false;
        }
        return true;
    });

    return results;
}

} // namespace orderflow::cli
