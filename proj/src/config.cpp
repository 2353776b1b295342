// SPDX-License-Identifier: Apache-2.0

#include "irsrelay/config.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <variant>

namespace irsrelay {
namespace {

using Field = std::variant<double SystemParams::*, double Geometry::*, int SystemParams::*, Bits SystemParams::*,
                           bool SystemParams::*>;

struct Entry {
    const char* key;
    Field field;
};

// Canonical key order, shared by config_entries().
const std::array<Entry, 30> kEntries{{
    {"ps_dbm", &SystemParams::ps_dbm},
    {"pr_dbm", &SystemParams::pr_dbm},
    {"sigma_r_dbm", &SystemParams::sigma_r_dbm},
    {"sigma_d_dbm", &SystemParams::sigma_d_dbm},
    {"n_elements", &SystemParams::n_elements},
    {"m_elements", &SystemParams::m_elements},
    {"k1_bits", &SystemParams::k1_bits},
    {"k2_bits", &SystemParams::k2_bits},
    {"alpha_sr", &SystemParams::alpha_sr},
    {"alpha_si", &SystemParams::alpha_si},
    {"alpha_ir", &SystemParams::alpha_ir},
    {"alpha_ri", &SystemParams::alpha_ri},
    {"alpha_id", &SystemParams::alpha_id},
    {"alpha_rd", &SystemParams::alpha_rd},
    {"normalized_relay", &SystemParams::normalized_relay},
    {"d_si", &Geometry::d_si},
    {"d_ri", &Geometry::d_ri},
    {"d_sr", &Geometry::d_sr},
    {"d_rd", &Geometry::d_rd},
    {"theta_si", &Geometry::theta_si},
    {"theta_ri", &Geometry::theta_ri},
    {"theta_sr", &Geometry::theta_sr},
    {"theta_rd", &Geometry::theta_rd},
    {"gamma_sr", &Geometry::gamma_sr},
    {"gamma_si", &Geometry::gamma_si},
    {"gamma_ir", &Geometry::gamma_ir},
    {"gamma_ri", &Geometry::gamma_ri},
    {"gamma_id", &Geometry::gamma_id},
    {"gamma_rd", &Geometry::gamma_rd},
    {"pl0_db", &Geometry::pl0_db},
}};

constexpr std::size_t kCanonicalCount = std::tuple_size_v<decltype(kEntries)>;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(std::string(key),
                          "invalid value for '" + std::string(key) + "': expected a number, got '" +
                              std::string(text) + "'");
    }
    return v;
}

int parse_int(std::string_view key, std::string_view text) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(std::string(key),
                          "invalid value for '" + std::string(key) + "': expected an integer, got '" +
                              std::string(text) + "'");
    }
    return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ConfigError(std::string(key),
                      "invalid value for '" + std::string(key) + "': expected true/false, got '" + std::string(text) +
                          "'");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void apply_setting(SystemParams& p, std::string_view key, std::string_view value) {
    value = trim(value);
    for (const Entry& e : kEntries) {
        if (key != e.key) {
            continue;
        }
        std::visit(
            [&](auto member) {
                using M = decltype(member);
                if constexpr (std::is_same_v<M, double SystemParams::*>) {
                    p.*member = parse_double(key, value);
                } else if constexpr (std::is_same_v<M, double Geometry::*>) {
                    p.geometry.*member = parse_double(key, value);
                } else if constexpr (std::is_same_v<M, int SystemParams::*>) {
                    p.*member = parse_int(key, value);
                } else if constexpr (std::is_same_v<M, bool SystemParams::*>) {
                    p.*member = parse_bool(key, value);
                } else {
                    try {
                        p.*member = Bits::parse(value);
                    } catch (const InvalidParameter&) {
                        throw ConfigError(std::string(key), "invalid value for '" + std::string(key) +
                                                                "': expected a positive integer or 'inf', got '" +
                                                                std::string(value) + "'");
                    }
                }
            },
            e.field);
        return;
    }
    throw ConfigError(std::string(key), "unknown config key '" + std::string(key) + "'");
}

SystemParams parse_config(std::string_view text, SystemParams base) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            const std::string key(trim(line));
            throw ConfigError(key, "line " + std::to_string(line_no) + ": missing '=' after key '" + key + "'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        try {
            apply_setting(base, key, line.substr(eq + 1));
        } catch (const ConfigError& ex) {
            throw ConfigError(ex.key(), "line " + std::to_string(line_no) + ": " + ex.what());
        }
    }
    try {
        base.validate();
    } catch (const InvalidParameter& ex) {
        throw ConfigError(ex.key(), std::string("invalid parameter ") + ex.what());
    }
    return base;
}

SystemParams load_config(const std::filesystem::path& path, SystemParams base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot read config file '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

std::vector<std::pair<std::string, std::string>> config_entries(const SystemParams& p) {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(kCanonicalCount);
    for (std::size_t i = 0; i < kCanonicalCount; ++i) {
        const Entry& e = kEntries[i];
        std::string value = std::visit(
            [&](auto member) -> std::string {
                using M = decltype(member);
                if constexpr (std::is_same_v<M, double SystemParams::*>) {
                    return format_double(p.*member);
                } else if constexpr (std::is_same_v<M, double Geometry::*>) {
                    return format_double(p.geometry.*member);
                } else if constexpr (std::is_same_v<M, int SystemParams::*>) {
                    return std::to_string(p.*member);
                } else if constexpr (std::is_same_v<M, bool SystemParams::*>) {
                    return p.*member ? "true" : "false";
                } else {
                    return (p.*member).to_string();
                }
            },
            e.field);
        out.emplace_back(e.key, std::move(value));
    }
    return out;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < kCanonicalCount; ++i) {
        out.emplace_back(kEntries[i].key);
    }
    return out;
}

} // namespace irsrelay
