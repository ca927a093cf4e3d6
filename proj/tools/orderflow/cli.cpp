#include "orderflow/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace orderflow::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if(!in) fail(ErrorCode::invalid_argument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const RunConfig& rc, const std::string& payload, std::ostream& out) {
    if(rc.out.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(rc.out, std::ios::binary | std::ios::trunc);
    if(!f) fail(ErrorCode::invalid_argument, "cannot write '" + rc.out + "'");
    f << payload;
}

int cmd_verify(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    if(rc.max_window < 2 || rc.max_window > 7) {
        err << "error: --max-window must lie in [2, 7]\n";
        return exit_usage;
    }
    auto results = run_invariant_suite(rc);
    std::string report;
    for(const auto& r : results) {
        report += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + r.params + ")\n";
    }
    const bool ok = !results.empty() && results.back().passed;
    report += ok ? "all invariants passed\n" : "first failure: " + results.back().name + "\n";
    emit(rc, report, out);
    if(!ok) err << "invariant failed: " << results.back().name << '\n';
    return ok ? exit_ok : exit_failure;
}

int cmd_frequencies(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    if(rc.trials == 0) {
        err << "error: --trials must be at least 1\n";
        return exit_usage;
    }
    if(rc.window < 1 || rc.window > 7) {
        err << "error: --window must lie in [1, 7]\n";
        return exit_usage;
    }
    if(rc.ground < rc.window) {
        err << "error: --ground must be at least --window (" << rc.window << ")\n";
        return exit_usage;
    }
    LinearOrder source = random_linear_order(Window::range(0, rc.ground), derive_seed(rc.seed, "frequencies/source", 0));
    SamplingOptions opts;
    opts.workers = rc.workers;
    auto stats = orbit_frequencies(source, Window::range(0, rc.window), rc.trials, rc.seed, opts);

    std::uint64_t hits = 0;
    for(const auto& s : stats) hits += s.hits;
    if(rc.format == "json") {
        emit(rc, pattern_stats_to_json(stats), out);
    } else if(rc.format == "csv") {
        emit(rc, pattern_stats_to_csv(stats), out);
    } else {
        emit(rc, pattern_stats_to_text(stats), out);
    }
    if(hits != rc.trials) {
        err << "frequencies do not sum to 1\n";
        return exit_failure;
    }
    return exit_ok;
}

int cmd_witness(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    const Window ground = Window::range(0, rc.ground);
    const Window target = Window::range(0, rc.window);
    std::string payload;
    bool verified = false;
    if(rc.kind == "minimality") {
        if(rc.ground < rc.window) {
            err << "GroundTooSmall: minimality needs ground >= " << rc.window << '\n';
            return exit_usage;
        }
        LinearOrder source = random_linear_order(ground, derive_seed(rc.seed, "witness/source", 0));
        LinearOrder pattern = random_linear_order(target, derive_seed(rc.seed, "witness/target", 0));
        Witness w = minimality_witness(source, pattern);
        verified = verify_minimality(w, source, pattern);
        payload = "# source=" + format_order(source) + "\n# target=" + format_order(pattern) + "\n" + format_witness(w);
    } else {
        if(rc.window >= 32 || rc.ground < ramsey_bound(rc.window)) {
            err << "GroundTooSmall: proximality on a window of " << rc.window << " needs ground >= "
                << (rc.window < 32 ? std::to_string(ramsey_bound(rc.window)) : std::string("2^(2|W|)")) << '\n';
            return exit_usage;
        }
        LinearOrder o1 = random_linear_order(ground, derive_seed(rc.seed, "witness/o1", 0));
        LinearOrder o2 = rc.reverse_pair ? reverse(o1) : random_linear_order(ground, derive_seed(rc.seed, "witness/o2", 0));
        Witness w = proximality_witness(o1, o2, target);
        verified = verify_proximality(w, o1, o2);
        payload = "# o1=" + format_order(o1) + "\n# o2=" + format_order(o2) + "\n" + format_witness(w);
    }
    emit(rc, payload, out);
    std::ostream& info = rc.out.empty() ? err : out;
    info << "verification: " << (verified ? "PASS" : "FAIL") << '\n';
    return verified ? exit_ok : exit_failure;
}

int cmd_factor(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    std::optional<LinearOrder> parsed;
    try {
        parsed = parse_order(read_file(rc.order_file));
    } catch(const ParseError& e) {
        err << rc.order_file << ": " << e.what() << '\n';
        return exit_usage;
    }
    const LinearOrder& order = *parsed;
    BlockCode code = sign_code(2);
    if(rc.code == "circular") {
        code = sign_code(3);
    } else if(rc.code.rfind("sign-", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(rc.code.substr(5));
        } catch(const std::exception&) {
            err << "error: unknown code '" << rc.code << "'\n";
            return exit_usage;
        }
        code = sign_code(k);
    } else {
        err << "error: unknown code '" << rc.code << "' (use sign-<k> or circular)\n";
        return exit_usage;
    }
    if(order.size() < static_cast<std::size_t>(code.arity())) {
        err << "WindowTooSmall: the order has " << order.size() << " elements, the code needs "
            << code.arity() << '\n';
        return exit_usage;
    }
    KConfig image = apply_code(code, order);
    emit(rc, format_kconfig(image), out);
    std::ostream& info = rc.out.empty() ? err : out;
    info << "alternating: " << (is_alternating(image) ? "yes" : "no") << '\n';
    if(code.arity() == 3) {
        if(order.size() <= default_realizability_bound) {
            info << "circular-realizable: " << (is_circular_realizable(image) ? "yes" : "no") << '\n';
        } else {
            info << "circular-realizable: skipped (window above " << default_realizability_bound << ")\n";
        }
    }
    return exit_ok;
}

} // namespace

std::string describe(const RunConfig& rc) {
    std::ostringstream os;
    os << "run_config: subcommand=" << rc.subcommand << " seed=" << rc.seed;
    if(rc.subcommand == "verify") {
        os << " max-window=" << rc.max_window;
        if(!rc.fixture.empty()) os << " fixture=" << rc.fixture;
    } else if(rc.subcommand == "frequencies") {
        os << " window=" << rc.window << " ground=" << rc.ground << " trials=" << rc.trials
           << " format=" << rc.format << " workers=" << rc.workers;
    } else if(rc.subcommand == "witness") {
        os << " kind=" << rc.kind << " window=" << rc.window << " ground=" << rc.ground;
        if(rc.reverse_pair) os << " reverse-pair";
    } else if(rc.subcommand == "factor") {
        os << " code=" << rc.code << " order=" << rc.order_file;
    }
    if(!rc.out.empty()) os << " out=" << rc.out;
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"orderflow: linear and circular order configurations under finite-support permutations"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--max-window", rc.max_window, "Largest window size checked exhaustively")->capture_default_str();
    verify->add_option("--fixture", rc.fixture, "KConfig file that must encode a linear order");

    auto* freq = app.add_subcommand("frequencies", "Orbit-average pattern frequencies against exact cylinder measures");
    freq->add_option("--window", rc.window, "Pattern window size")->capture_default_str();
    freq->add_option("--ground", rc.ground, "Ground size of the source order")->capture_default_str();
    freq->add_option("--trials", rc.trials, "Monte-Carlo trials")->capture_default_str();
    freq->add_option("--workers", rc.workers, "Worker threads (0 = hardware concurrency)")->capture_default_str();
    freq->add_option("--format", rc.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();

    auto* witness = app.add_subcommand("witness", "Construct and re-verify a minimality or proximality witness");
    witness->add_option("kind", rc.kind, "minimality or proximality")
        ->required()->check(CLI::IsMember({"minimality", "proximality"}));
    witness->add_option("--window", rc.window, "Checked window size")->capture_default_str();
    witness->add_option("--ground", rc.ground, "Ground size")->capture_default_str();
    witness->add_flag("--reverse-pair", rc.reverse_pair, "Proximality: use o2 = reverse(o1)");

    auto* factor = app.add_subcommand("factor", "Apply a block code to a linear order");
    factor->add_option("--code", rc.code, "sign-<k> or circular")->required();
    factor->add_option("--order", rc.order_file, "Order file: elements lowest first")->required();

    for(auto* sub : {verify, freq, witness, factor}) {
        sub->add_option("--seed", rc.seed, "Master seed")->capture_default_str();
        sub->add_option("--out", rc.out, "Output file (default: standard output)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch(const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch(const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    rc.subcommand = app.get_subcommands().front()->get_name();
    err << describe(rc) << '\n';

    try {
        if(rc.subcommand == "verify") return cmd_verify(rc, out, err);
        if(rc.subcommand == "frequencies") return cmd_frequencies(rc, out, err);
        if(rc.subcommand == "witness") return cmd_witness(rc, out, err);
        return cmd_factor(rc, out, err);
    } catch(const Error& e) {
        err << e.what() << '\n';
        switch(e.code()) {
            case ErrorCode::invalid_argument:
            case ErrorCode::parse_error:
            case ErrorCode::ground_too_small:
            case ErrorCode::window_too_small:
                return exit_usage;
            default:
                return exit_failure;
        }
    }
}

} // namespace orderflow::cli
