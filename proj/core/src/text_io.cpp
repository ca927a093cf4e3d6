#include "orderflow/text_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace orderflow {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if(b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while(!text.empty() || number == 0) {
        ++number;
        auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        std::string_view t = trim(raw);
        if(!t.empty() && t.front() != '#') out.push_back({number, t});
        if(nl == std::string_view::npos) break;
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while(true) {
        auto p = s.find(sep);
        out.push_back(trim(s.substr(0, p)));
        if(p == std::string_view::npos) break;
        s = s.substr(p + 1);
    }
    return out;
}

std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while(i < s.size()) {
        while(i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while(j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if(j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T parse_int(std::string_view s, std::size_t line) {
    T v{};
    if(!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if(ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
        throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
    }
    return v;
}

int parse_sign(std::string_view s, std::size_t line) {
    if(s == "+1") return 1;
    if(s == "-1") return -1;
    throw ParseError(line, "expected +1 or -1, got '" + std::string(s) + "'");
}

std::string join_points(std::span<const Point> pts, const char* sep) {
    std::string out;
    for(std::size_t i = 0; i < pts.size(); ++i) {
        if(i) out += sep;
        out += std::to_string(pts[i]);
    }
    return out;
}

Window parse_window_list(std::string_view s, std::size_t line) {
    std::vector<Point> pts;
    if(!trim(s).empty()) {
        for(auto tok : split(s, ',')) pts.push_back(parse_int<Point>(tok, line));
    }
    try {
        return Window(std::move(pts));
    } catch(const Error& e) {
        throw ParseError(line, e.what());
    }
}

// "key=value" with the expected key
std::string_view expect_field(std::string_view tok, std::string_view key, std::size_t line) {
    if(tok.size() < key.size() + 1 || tok.substr(0, key.size()) != key || tok[key.size()] != '=') {
        throw ParseError(line, "expected '" + std::string(key) + "=...', got '" + std::string(tok) + "'");
    }
    return tok.substr(key.size() + 1);
}

std::string format_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, p);
}

const char* sign_text(int v) { return v > 0 ? "+1" : "-1"; }

// Splits "lhs : rhs".
std::pair<std::string_view, std::string_view> split_colon(const Line& l) {
    auto c = l.text.find(':');
    if(c == std::string_view::npos) throw ParseError(l.number, "missing ':'");
    return {trim(l.text.substr(0, c)), trim(l.text.substr(c + 1))};
}

} // namespace

std::string format_kconfig(const KConfig& config) {
    std::ostringstream os;
    os << "k=" << config.arity() << " window=" << join_points(config.window().elements(), ",") << '\n';
    config.for_each([&](std::span<const std::size_t> ranks, int value) {
        for(std::size_t i = 0; i < ranks.size(); ++i) {
            if(i) os << ' ';
            os << config.window()[ranks[i]];
        }
        os << " : " << sign_text(value) << '\n';
    });
    return os.str();
}

KConfig parse_kconfig(std::string_view text) {
    auto lines = content_lines(text);
    if(lines.empty()) throw ParseError(1, "empty configuration");
    const Line& head = lines.front();
    auto fields = words(head.text);
    if(fields.empty() || fields.size() > 2) throw ParseError(head.number, "expected 'k=<k> window=<list>'");
    const int k = parse_int<int>(expect_field(fields[0], "k", head.number), head.number);
    Window window = parse_window_list(fields.size() == 2 ? expect_field(fields[1], "window", head.number)
                                                         : std::string_view{}, head.number);
    try {
        KConfig::check_arity(k, KConfig::default_max_arity);
    } catch(const Error& e) {
        throw ParseError(head.number, e.what());
    }

    const std::size_t expected = falling_factorial(window.size(), static_cast<std::size_t>(k));
    if(lines.size() - 1 != expected) {
        std::size_t where = lines.size() - 1 > expected ? lines[expected + 1].number : lines.back().number;
        throw ParseError(where, "expected " + std::to_string(expected) + " tuple lines, found " +
                         std::to_string(lines.size() - 1));
    }
    std::vector<KConfig::Value> values;
    values.reserve(expected);
    std::size_t next = 1;
    for_each_injective_tuple(window.size(), static_cast<std::size_t>(k), [&](std::span<const std::size_t> ranks) {
        const Line& l = lines[next++];
        auto [lhs, rhs] = split_colon(l);
        auto toks = words(lhs);
        if(toks.size() != ranks.size()) throw ParseError(l.number, "tuple has the wrong length");
        for(std::size_t i = 0; i < ranks.size(); ++i) {
            if(parse_int<Point>(toks[i], l.number) != window[ranks[i]]) {
                throw ParseError(l.number, "tuple out of lexicographic order or outside the window");
            }
        }
        values.push_back(static_cast<KConfig::Value>(parse_sign(rhs, l.number)));
    });
    return KConfig(k, std::move(window), std::move(values));
}

std::string format_finperm(const FinPerm& alpha) {
    std::string out;
    for(const auto& [s, t] : alpha.pairs()) {
        if(!out.empty()) out += ',';
        out += std::to_string(s) + "->" + std::to_string(t);
    }
    return out;
}

FinPerm parse_finperm(std::string_view text, std::size_t line) {
    text = trim(text);
    std::vector<FinPerm::Pair> pairs;
    if(!text.empty()) {
        for(auto tok : split(text, ',')) {
            auto arrow = tok.find("->");
            if(arrow == std::string_view::npos) throw ParseError(line, "expected 'a->b', got '" + std::string(tok) + "'");
            pairs.emplace_back(parse_int<Point>(trim(tok.substr(0, arrow)), line),
                               parse_int<Point>(trim(tok.substr(arrow + 2)), line));
        }
    }
    try {
        return FinPerm::from_pairs(std::move(pairs));
    } catch(const Error& e) {
        throw ParseError(line, e.what());
    }
}

std::string format_order(const LinearOrder& order) {
    return join_points(order.sequence(), " ");
}

LinearOrder parse_order(std::string_view text) {
    auto lines = content_lines(text);
    if(lines.empty()) throw ParseError(1, "empty order");
    if(lines.size() > 1) throw ParseError(lines[1].number, "an order occupies a single line");
    const Line& l = lines.front();
    std::vector<Point> seq;
    for(auto tok : words(l.text)) seq.push_back(parse_int<Point>(tok, l.number));
    try {
        return LinearOrder::from_sequence(std::move(seq));
    } catch(const Error& e) {
        throw ParseError(l.number, e.what());
    }
}

std::string format_code(const BlockCode& code) {
    std::ostringstream os;
    os << code.arity() << '\n';
    const std::size_t k = static_cast<std::size_t>(code.arity());
    for(std::size_t i = 0; i < code.table().size(); ++i) {
        OrderType sigma = OrderType::from_index(k, i);
        for(std::size_t j = 0; j < k; ++j) {
            if(j) os << ' ';
            os << sigma(j) + 1;
        }
        os << " : " << sign_text(code.table()[i]) << '\n';
    }
    return os.str();
}

BlockCode parse_code(std::string_view text) {
    auto lines = content_lines(text);
    if(lines.empty()) throw ParseError(1, "empty block code");
    const int k = parse_int<int>(lines.front().text, lines.front().number);
    try {
        KConfig::check_arity(k, KConfig::default_max_arity);
    } catch(const Error& e) {
        throw ParseError(lines.front().number, e.what());
    }
    const std::size_t n = factorial(static_cast<std::size_t>(k));
    if(lines.size() - 1 != n) {
        throw ParseError(lines.back().number, "expected " + std::to_string(n) + " order-type lines");
    }
    std::vector<std::int8_t> table;
    for(std::size_t i = 0; i < n; ++i) {
        const Line& l = lines[i + 1];
        auto [lhs, rhs] = split_colon(l);
        OrderType sigma = OrderType::from_index(static_cast<std::size_t>(k), i);
        auto toks = words(lhs);
        if(toks.size() != static_cast<std::size_t>(k)) throw ParseError(l.number, "permutation has the wrong length");
        for(std::size_t j = 0; j < toks.size(); ++j) {
            if(parse_int<std::size_t>(toks[j], l.number) != sigma(j) + 1) {
                throw ParseError(l.number, "order types must be listed in lexicographic order");
            }
        }
        table.push_back(static_cast<std::int8_t>(parse_sign(rhs, l.number)));
    }
    return BlockCode(k, std::move(table));
}

std::string format_witness(const Witness& w) {
    std::string out;
    out += "kind=" + std::string(to_string(w.kind)) + '\n';
    out += "window=" + join_points(w.checked_window.elements(), ",") + '\n';
    out += "alpha=" + format_finperm(w.alpha) + '\n';
    return out;
}

Witness parse_witness(std::string_view text) {
    auto lines = content_lines(text);
    if(lines.size() != 3) {
        throw ParseError(lines.empty() ? 1 : lines.back().number, "a witness has kind, window and alpha lines");
    }
    Witness w;
    try {
        w.kind = witness_kind_from_string(expect_field(lines[0].text, "kind", lines[0].number));
    } catch(const ParseError&) {
        throw;
    } catch(const Error& e) {
        throw ParseError(lines[0].number, e.what());
    }
    w.checked_window = parse_window_list(expect_field(lines[1].text, "window", lines[1].number), lines[1].number);
    w.alpha = parse_finperm(expect_field(lines[2].text, "alpha", lines[2].number), lines[2].number);
    return w;
}

std::string pattern_stats_to_json(const std::vector<PatternStat>& stats) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for(const auto& s : stats) {
        nlohmann::ordered_json j;
        j["pattern"] = std::vector<Point>(s.pattern.sequence().begin(), s.pattern.sequence().end());
        j["window"] = std::vector<Point>(s.pattern.window().elements().begin(), s.pattern.window().elements().end());
        j["exact_num"] = boost::multiprecision::numerator(s.exact).str();
        j["exact_den"] = boost::multiprecision::denominator(s.exact).str();
        j["empirical"] = s.empirical;
        j["trials"] = s.trials;
        j["seed"] = s.seed;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + '\n';
}

std::vector<PatternStat> parse_pattern_stats_json(std::string_view text) {
    std::vector<PatternStat> out;
    try {
        auto arr = nlohmann::json::parse(text);
        if(!arr.is_array()) throw ParseError(1, "expected a JSON array");
        for(const auto& j : arr) {
            auto pattern = LinearOrder::from_sequence(j.at("pattern").get<std::vector<Point>>());
            Window window(j.at("window").get<std::vector<Point>>());
            if(window != pattern.window()) throw ParseError(1, "pattern does not match its window");
            Rational exact(BigInt(j.at("exact_num").get<std::string>()), BigInt(j.at("exact_den").get<std::string>()));
            const auto trials = j.at("trials").get<std::uint64_t>();
            const double empirical = j.at("empirical").get<double>();
            const auto hits = static_cast<std::uint64_t>(std::llround(empirical * static_cast<double>(trials)));
            out.push_back(PatternStat{std::move(pattern), exact, empirical, hits, trials, j.at("seed").get<std::uint64_t>()});
        }
    } catch(const nlohmann::json::exception& e) {
        throw ParseError(1, e.what());
    }
    return out;
}

std::string pattern_stats_to_csv(const std::vector<PatternStat>& stats) {
    std::string out = "pattern,window,exact_num,exact_den,empirical,trials,seed\n";
    for(const auto& s : stats) {
        out += join_points(s.pattern.sequence(), " ") + ',' + join_points(s.pattern.window().elements(), " ") + ',' +
               boost::multiprecision::numerator(s.exact).str() + ',' +
               boost::multiprecision::denominator(s.exact).str() + ',' + format_double(s.empirical) + ',' +
               std::to_string(s.trials) + ',' + std::to_string(s.seed) + '\n';
    }
    return out;
}

std::string pattern_stats_to_text(const std::vector<PatternStat>& stats) {
    std::string out;
    for(const auto& s : stats) {
        out += "pattern " + format_order(s.pattern) + "  exact " + s.exact.str() + "  empirical " +
               format_double(s.empirical) + "  trials " + std::to_string(s.trials) + "  seed " +
               std::to_string(s.seed) + '\n';
    }
    return out;
}

} // namespace orderflow
