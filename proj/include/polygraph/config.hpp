#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polygraph {

// Line-oriented "key = value" files with dotted keys. '#' starts a comment.
// Ordered map so serialized echoes are stable.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_config_text(const std::string& text, const std::string& origin = "<config>");
KeyValues parse_config_file(const std::filesystem::path& path);
std::string serialize_config(const KeyValues& kv);

// Typed getters; throw ConfigError on unparseable values.
std::optional<std::string> get_string(const KeyValues& kv, const std::string& key);
double get_double(const KeyValues& kv, const std::string& key, double fallback);
std::int64_t get_int(const KeyValues& kv, const std::string& key, std::int64_t fallback);
bool get_bool(const KeyValues& kv, const std::string& key, bool fallback);
std::vector<double> parse_double_list(const std::string& text, const std::string& key);

std::string format_double(double v);  // 17 significant digits, round-trip exact

}  // namespace polygraph
