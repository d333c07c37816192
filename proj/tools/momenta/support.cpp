#include "support.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cli {

using momenta::Rat;

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) out.push_back(trim(piece));
    if (!text.empty() && text.back() == ',') out.push_back("");
    return out;
}

const char* env(const char* name) { return std::getenv(name); }

unsigned long long parse_env_uint(const char* name, const char* value) {
    try {
        std::size_t used = 0;
        const unsigned long long parsed = std::stoull(value, &used);
        if (used != std::string(value).size()) throw std::invalid_argument("trailing text");
        return parsed;
    } catch (const std::exception&) {
        throw UsageError(std::string(name) + ": expected a non-negative integer, got '" +
                         value + "'");
    }
}

double parse_env_double(const char* name, const char* value) {
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != std::string(value).size()) throw std::invalid_argument("trailing text");
        return parsed;
    } catch (const std::exception&) {
        throw UsageError(std::string(name) + ": expected a number, got '" + value + "'");
    }
}

/// Config file: a JSON object with any of the keys D, N, seed, tolerance,
/// format. Unknown keys are rejected to catch typos.
void apply_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError("config file '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw UsageError("config file '" + path + "': expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "D") {
                cfg.D = value.get<unsigned>();
            } else if (key == "N") {
                cfg.N = value.get<std::size_t>();
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else if (key == "tolerance") {
                cfg.tolerance = value.get<double>();
            } else if (key == "format") {
                cfg.format = value.get<std::string>();
            } else {
                throw UsageError("config file '" + path + "': unknown key '" + key + "'");
            }
        } catch (const Json::exception&) {
            throw UsageError("config file '" + path + "': bad value for '" + key + "'");
        }
    }
}

void apply_environment(Config& cfg) {
    if (const char* v = env("MOMENTA_D")) cfg.D = static_cast<unsigned>(parse_env_uint("MOMENTA_D", v));
    if (const char* v = env("MOMENTA_N")) cfg.N = static_cast<std::size_t>(parse_env_uint("MOMENTA_N", v));
    if (const char* v = env("MOMENTA_SEED")) cfg.seed = parse_env_uint("MOMENTA_SEED", v);
    if (const char* v = env("MOMENTA_TOLERANCE")) cfg.tolerance = parse_env_double("MOMENTA_TOLERANCE", v);
    if (const char* v = env("MOMENTA_FORMAT")) cfg.format = v;
}

void print_table_value(const std::string& key, const Json& value) {
    std::string text;
    if (value.is_string()) {
        text = value.get<std::string>();
    } else {
        text = value.dump();
    }
    std::printf("%-14s %s\n", key.c_str(), text.c_str());
}

}  // namespace

Config resolve_config(const ConfigFlags& flags) {
    Config cfg;
    std::string config_path;
    if (flags.config_file_set) {
        config_path = flags.config_file;
    } else if (const char* v = env("MOMENTA_CONFIG")) {
        config_path = v;
    }
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    apply_environment(cfg);
    if (flags.D_set) cfg.D = flags.D;
    if (flags.N_set) cfg.N = flags.N;
    if (flags.seed_set) cfg.seed = flags.seed;
    if (flags.tolerance_set) cfg.tolerance = flags.tolerance;
    if (flags.format_set) cfg.format = flags.format;

    if (cfg.N < 1) throw UsageError("N must be at least 1");
    if (!(cfg.tolerance > 0.0)) throw UsageError("tolerance must be positive");
    if (cfg.format != "json" && cfg.format != "table")
        throw UsageError("format must be 'json' or 'table'");
    return cfg;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    if (trim(text).empty()) return out;
    for (const std::string& piece : split_commas(text)) out.push_back(momenta::parse_rat(piece));
    return out;
}

std::vector<unsigned> parse_uint_list(const std::string& text) {
    std::vector<unsigned> out;
    if (trim(text).empty()) return out;
    for (const std::string& piece : split_commas(text)) {
        std::size_t used = 0;
        unsigned long parsed = 0;
        try {
            parsed = std::stoul(piece, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("expected a non-negative integer, got '" + piece + "'");
        }
        if (used != piece.size())
            throw std::invalid_argument("expected a non-negative integer, got '" + piece + "'");
        out.push_back(static_cast<unsigned>(parsed));
    }
    return out;
}

std::vector<Rat> parse_values_arg(const std::string& arg) {
    if (arg != "-") return parse_rat_list(arg);
    Json doc;
    try {
        doc = Json::parse(std::cin);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("stdin: ") + e.what());
    }
    if (!doc.is_array()) throw std::invalid_argument("stdin: expected a JSON array");
    std::vector<Rat> out;
    out.reserve(doc.size());
    for (const Json& entry : doc) {
        if (entry.is_string()) {
            out.push_back(momenta::parse_rat(entry.get<std::string>()));
        } else if (entry.is_number_integer()) {
            out.push_back(momenta::rat(entry.get<long>()));
        } else {
            throw std::invalid_argument(
                "stdin: array entries must be integers or 'p/q' strings");
        }
    }
    return out;
}

std::string float17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string poly_to_string(const momenta::SparsePoly& p) {
    if (p.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exponents, coeff] : p.terms()) {
        Rat c = coeff;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (exponents[i] > 1) mono += "^" + std::to_string(exponents[i]);
        }
        if (mono.empty()) {
            out += momenta::rat_to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += momenta::rat_to_string(c) + "*" + mono;
        }
    }
    return out;
}

void emit(const Json& doc, const Config& cfg, bool pretty) {
    if (cfg.format == "json") {
        std::fputs(doc.dump(pretty ? 2 : -1).c_str(), stdout);
        std::fputc('\n', stdout);
        return;
    }
    // Table format: flat keys become aligned rows; an array of objects (the
    // verify checks) becomes one row per entry.
    for (const auto& [key, value] : doc.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            for (const Json& row : value) {
                std::string line;
                for (const auto& [k, v] : row.items()) {
                    if (!line.empty()) line += "  ";
                    line += v.is_string() ? v.get<std::string>() : v.dump();
                }
                std::printf("%s\n", line.c_str());
            }
        } else {
            print_table_value(key, value);
        }
    }
}

}  // namespace cli
