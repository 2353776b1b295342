// SPDX-License-Identifier: Apache-2.0
//
// Flat `key = value` configuration files. Keys are the SystemParams and
// Geometry field names; '#' starts a comment. Unknown keys and malformed
// values raise ConfigError naming the key (and the line, when parsing text).

#pragma once

#include "irsrelay/params.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace irsrelay {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Environment variable consulted for the default config path.
inline constexpr const char* kConfigEnvVar = "IRSRELAY_CONFIG";

/// Sets one field by name. Throws ConfigError for unknown keys or values
/// that do not parse; range checks are left to SystemParams::validate().
void apply_setting(SystemParams& p, std::string_view key, std::string_view value);

/// Parses config text on top of `base` and validates the result.
SystemParams parse_config(std::string_view text, SystemParams base = {});

SystemParams load_config(const std::filesystem::path& path, SystemParams base = {});

/// Every configurable key with its current value, in canonical order,
/// formatted so that parse_config(join(lines)) reproduces `p`.
std::vector<std::pair<std::string, std::string>> config_entries(const SystemParams& p);

std::vector<std::string> config_keys();

} // namespace irsrelay
