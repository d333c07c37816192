#pragma once

#include <momenta/polynomial.hpp>
#include <momenta/rational.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cli {

using Json = nlohmann::ordered_json;

/// Shared run configuration. Every knob resolves through the same precedence
/// chain: command-line flag > MOMENTA_* environment variable > config file
/// entry > built-in default.
struct Config {
    unsigned D = 8;             ///< truncation degree for series/identity work
    std::size_t N = 200000;     ///< Monte Carlo sample count
    std::uint64_t seed = 0;     ///< base seed for every pseudo-random draw
    double tolerance = 4.0;     ///< z-score band for sampled comparisons
    std::string format = "json";  ///< "json" or "table"
};

/// Raw flag values captured by the parser; `*_set` records whether the flag
/// was given so that absent flags fall back to the other sources.
struct ConfigFlags {
    unsigned D = 0;
    bool D_set = false;
    std::size_t N = 0;
    bool N_set = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double tolerance = 0.0;
    bool tolerance_set = false;
    std::string format;
    bool format_set = false;
    std::string config_file;
    bool config_file_set = false;
};

/// Malformed values from the environment or a config file; mapped to the
/// usage exit code because the invocation, not the mathematics, is at fault.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Apply the precedence chain and validate the result (N >= 1,
/// tolerance > 0, format in {json, table}).
Config resolve_config(const ConfigFlags& flags);

/// "p", "-p/q", ... comma-separated; spaces around commas are accepted.
std::vector<momenta::Rat> parse_rat_list(const std::string& text);

/// Comma-separated non-negative integers.
std::vector<unsigned> parse_uint_list(const std::string& text);

/// Values argument of `moments convert`: either a comma-separated list or
/// "-", which reads a JSON array (of "p/q" strings or integers) from stdin.
std::vector<momenta::Rat> parse_values_arg(const std::string& arg);

/// %.17g, the shortest form that round-trips any double.
std::string float17(double x);

/// Canonical text form of a sparse polynomial: terms in the fixed key order
/// of the underlying map, monomials as x1^2*x3, signs folded into the
/// joining operator. The zero polynomial prints "0", constants print bare.
std::string poly_to_string(const momenta::SparsePoly& p);

/// Print a result object in the configured format. JSON is compact on one
/// line; `pretty` selects two-space indentation (used by verify reports).
/// The table format prints one "key  value" row per top-level entry and
/// expands arrays of check rows.
void emit(const Json& doc, const Config& cfg, bool pretty = false);

}  // namespace cli
