#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "orderflow/cli.hpp"

using namespace orderflow;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
    return std::string(ORDERFLOW_TEST_DATA) + "/" + name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "orderflow_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("verify passes with defaults and with a reduced window") {
    Run r = run({"verify"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS circular-count") != std::string::npos);
    CHECK(r.err.find("run_config: subcommand=verify seed=0 max-window=5") != std::string::npos);

    Run small = run({"verify", "--max-window", "3"});
    CHECK(small.code == cli::exit_ok);
    CHECK(run({"verify", "--max-window", "1"}).code == cli::exit_usage);
}

TEST_CASE("verify names the corrupted fixture") {
    Run good = run({"verify", "--max-window", "3", "--fixture", data("linear_order_config.txt")});
    CHECK(good.code == cli::exit_ok);
    Run bad = run({"verify", "--max-window", "3", "--fixture", data("corrupt_config.txt")});
    CHECK(bad.code == cli::exit_failure);
    CHECK(bad.out.find("first failure: fixture-linear-order") != std::string::npos);
    CHECK(bad.err.find("invariant failed: fixture-linear-order") != std::string::npos);
}

TEST_CASE("frequencies") {
    Run r = run({"frequencies", "--window", "3", "--trials", "100000", "--seed", "7"});
    REQUIRE(r.code == cli::exit_ok);
    auto stats = parse_pattern_stats_json(r.out);
    REQUIRE(stats.size() == 6);
    std::uint64_t hits = 0;
    for(const auto& s : stats) {
        hits += s.hits;
        CHECK(std::abs(s.empirical - 1.0 / 6.0) <= 3.0 * std::sqrt((1.0 / 6.0) * (5.0 / 6.0) / 100000.0));
    }
    CHECK(hits == 100000);

    Run one = run({"frequencies", "--window", "1", "--trials", "50"});
    REQUIRE(one.code == cli::exit_ok);
    auto single = parse_pattern_stats_json(one.out);
    REQUIRE(single.size() == 1);
    CHECK(single[0].empirical == 1.0);

    Run zero = run({"frequencies", "--trials", "0"});
    CHECK(zero.code == cli::exit_usage);
    CHECK(zero.err.find("--trials") != std::string::npos);
    CHECK(run({"frequencies", "--window", "5", "--ground", "4"}).code == cli::exit_usage);
    CHECK(run({"frequencies", "--format", "xml"}).code == cli::exit_usage);

    Run csv = run({"frequencies", "--trials", "100", "--format", "csv"});
    CHECK(csv.out.rfind("pattern,window,exact_num,exact_den,empirical,trials,seed", 0) == 0);
}

TEST_CASE("witness subcommand") {
    auto path = scratch("minimality.txt");
    Run m = run({"witness", "minimality", "--ground", "20", "--window", "4", "--seed", "1", "--out", path.string()});
    CHECK(m.code == cli::exit_ok);
    CHECK(m.out.find("verification: PASS") != std::string::npos);
    Witness w = parse_witness(slurp(path));
    CHECK(w.kind == WitnessKind::minimality);
    CHECK(w.checked_window == Window::range(0, 4));

    Run rev = run({"witness", "proximality", "--ground", "256", "--window", "4", "--reverse-pair"});
    CHECK(rev.code == cli::exit_ok);
    CHECK(parse_witness(rev.out).kind == WitnessKind::proximality_reverse);
    CHECK(rev.err.find("verification: PASS") != std::string::npos);

    Run small = run({"witness", "proximality", "--ground", "16", "--window", "4"});
    CHECK(small.code == cli::exit_usage);
    CHECK(small.err.find("256") != std::string::npos);

    CHECK(run({"witness", "sideways"}).code == cli::exit_usage);
}

TEST_CASE("factor subcommand") {
    Run c = run({"factor", "--code", "circular", "--order", data("order_012.txt")});
    REQUIRE(c.code == cli::exit_ok);
    KConfig image = parse_kconfig(c.out);
    CHECK(image.tuple_count() == 6);
    CHECK(image({0, 1, 2}) == 1);
    CHECK(c.out.find("0 1 2 : +1\n") != std::string::npos);
    CHECK(c.err.find("alternating: yes") != std::string::npos);
    CHECK(c.err.find("circular-realizable: yes") != std::string::npos);

    auto path = scratch("sign4.txt");
    Run s = run({"factor", "--code", "sign-4", "--order", data("order_increasing4.txt"), "--out", path.string()});
    REQUIRE(s.code == cli::exit_ok);
    KConfig four = parse_kconfig(slurp(path));
    CHECK(four({3, 5, 8, 13}) == 1);
    CHECK(four.tuple_count() == 24);
    CHECK(s.out.find("alternating: yes") != std::string::npos);

    Run bad = run({"factor", "--code", "circular", "--order", data("malformed_order.txt")});
    CHECK(bad.code == cli::exit_usage);
    CHECK(bad.err.find("line 3") != std::string::npos);

    CHECK(run({"factor", "--code", "sign-4", "--order", data("order_012.txt")}).code == cli::exit_usage);
    CHECK(run({"factor", "--code", "wavy", "--order", data("order_012.txt")}).code == cli::exit_usage);
}

TEST_CASE("identical run configs give byte-identical output across worker counts") {
    Run a = run({"frequencies", "--trials", "40000", "--seed", "3", "--workers", "1"});
    Run b = run({"frequencies", "--trials", "40000", "--seed", "3", "--workers", "6"});
    CHECK(a.code == cli::exit_ok);
    CHECK(a.out == b.out);
    Run w1 = run({"witness", "proximality", "--ground", "256", "--window", "4", "--seed", "9"});
    Run w2 = run({"witness", "proximality", "--ground", "256", "--window", "4", "--seed", "9"});
    CHECK(w1.out == w2.out);
}

} // TEST_SUITE
