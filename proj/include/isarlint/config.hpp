#pragma once

// Run configuration and the optional `key = value` configuration file.
// Command-line flags take precedence over file values; the file is where
// rule-set constants can be recalibrated.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "isarlint/lint.hpp"
#include "isarlint/rule_sets.hpp"

namespace isarlint {

enum class OutputFormat { Text, Json, Xml };

inline std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "xml") return OutputFormat::Xml;
  return std::nullopt;
}

struct RunConfig {
  std::vector<std::string> inputs;
  std::vector<std::string> bundles;
  std::vector<std::string> enable;
  std::vector<std::string> disable;
  OutputFormat format = OutputFormat::Text;
  std::optional<Severity> fail_level = Severity::Error;  // nullopt: never fail
  bool stats = false;
  bool keep_going = false;
  std::string keywords_file;
  std::size_t threads = 1;
  RuleSets rule_sets;
};

struct ConfigValues {
  std::optional<std::vector<std::string>> bundles;
  std::optional<std::vector<std::string>> enable;
  std::optional<std::vector<std::string>> disable;
  std::optional<std::string> fail_level;
  std::map<std::string, std::vector<std::string>> rule_set_words;
  std::optional<std::size_t> apply_chain_threshold;
};

namespace config_detail {

inline std::string trim(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  std::size_t last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

inline std::vector<std::string> split_words(const std::string& value) {
  std::vector<std::string> words;
  std::stringstream stream(value);
  std::string word;
  while (std::getline(stream, word, ',')) {
    word = trim(word);
    if (!word.empty()) words.push_back(word);
  }
  return words;
}

inline const std::vector<std::string>& rule_set_keys() {
  static const std::vector<std::string> keys = {
      "tactic_methods",          "low_level_methods",
      "simplifier_methods",      "bad_style_commands",
      "counterexample_commands", "proof_finder_commands",
      "diagnostic_commands",     "transforming_attributes"};
  return keys;
}

}  // namespace config_detail

// `key = value` lines; `#` starts a comment; list values are
// comma-separated. Throws on unknown keys or malformed lines.
inline ConfigValues load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  ConfigValues values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const std::string trimmed = config_detail::trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    const auto fail = [&](const std::string& what) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                               what);
    };
    if (eq == std::string::npos) fail("expected `key = value`");
    const std::string key = config_detail::trim(trimmed.substr(0, eq));
    const std::string value = config_detail::trim(trimmed.substr(eq + 1));
    if (key == "bundles") {
      values.bundles = config_detail::split_words(value);
    } else if (key == "enable") {
      values.enable = config_detail::split_words(value);
    } else if (key == "disable") {
      values.disable = config_detail::split_words(value);
    } else if (key == "fail_level") {
      values.fail_level = value;
    } else if (key == "apply_chain_threshold") {
      try {
        values.apply_chain_threshold = std::stoul(value);
      } catch (const std::exception&) {
        fail("apply_chain_threshold expects a number");
      }
    } else {
      bool known = false;
      for (const std::string& candidate : config_detail::rule_set_keys())
        if (key == candidate) {
          values.rule_set_words[key] = config_detail::split_words(value);
          known = true;
          break;
        }
      if (!known) fail("unknown key `" + key + "`");
    }
  }
  return values;
}

inline void apply_rule_set_overrides(RuleSets& sets,
                                     const ConfigValues& values) {
  const auto as_set = [](const std::vector<std::string>& words) {
    return std::set<std::string>(words.begin(), words.end());
  };
  for (const auto& [key, words] : values.rule_set_words) {
    if (key == "tactic_methods") sets.tactic_methods = as_set(words);
    if (key == "low_level_methods") sets.low_level_methods = as_set(words);
    if (key == "simplifier_methods") sets.simplifier_methods = as_set(words);
    if (key == "bad_style_commands") sets.bad_style_commands = as_set(words);
    if (key == "counterexample_commands")
      sets.counterexample_commands = as_set(words);
    if (key == "proof_finder_commands")
      sets.proof_finder_commands = as_set(words);
    if (key == "diagnostic_commands") sets.diagnostic_commands = as_set(words);
    if (key == "transforming_attributes")
      sets.transforming_attributes = as_set(words);
  }
  if (values.apply_chain_threshold)
    sets.apply_chain_threshold = *values.apply_chain_threshold;
}

}  // namespace isarlint
