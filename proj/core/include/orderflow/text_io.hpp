#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orderflow/codes.hpp"
#include "orderflow/config.hpp"
#include "orderflow/ergodic.hpp"
#include "orderflow/orders.hpp"
#include "orderflow/perm.hpp"
#include "orderflow/ramsey.hpp"

// Text formats. Parsers skip blank lines and lines starting with '#', and throw ParseError
// carrying the 1-based line number of the offending input.

namespace orderflow {

/// "k=<k> window=<a,b,...>" then one "i1 ... ik : +1|-1" line per tuple, lexicographic in ranks.
std::string format_kconfig(const KConfig& config);
KConfig parse_kconfig(std::string_view text);

/// "a->b" pairs, comma-separated, sorted by source. The identity is the empty string.
std::string format_finperm(const FinPerm& alpha);
FinPerm parse_finperm(std::string_view text, std::size_t line = 1);

/// Window elements lowest first, space-separated.
std::string format_order(const LinearOrder& order);
LinearOrder parse_order(std::string_view text);

/// k on the first line, then "s1 ... sk : +1|-1" per order type (1-based one-line
/// notation), lexicographic in permutations.
std::string format_code(const BlockCode& code);
BlockCode parse_code(std::string_view text);

/// "kind=<kind>", "window=<a,b,...>", "alpha=<finperm>" lines.
std::string format_witness(const Witness& w);
Witness parse_witness(std::string_view text);

/// [{pattern, window, exact_num, exact_den, empirical, trials, seed}, ...]
std::string pattern_stats_to_json(const std::vector<PatternStat>& stats);
std::vector<PatternStat> parse_pattern_stats_json(std::string_view text);
/// Header row then one row per stat; list-valued columns are space-separated.
std::string pattern_stats_to_csv(const std::vector<PatternStat>& stats);
std::string pattern_stats_to_text(const std::vector<PatternStat>& stats);

} // namespace orderflow
