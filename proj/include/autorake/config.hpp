#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "autorake/corpus.hpp"
#include "autorake/error.hpp"
#include "autorake/tokenizer.hpp"

namespace autorake {

/// Settings shared by every CLI subcommand, read from an INI file:
///
///     [tokenizer]
///     numbers_as_words = true          ; true|false|yes|no|1|0
///
///     [ingestion]
///     extensions = .txt, .text         ; comma-separated, empty = all files
///     recursive = true
///     mode = auto                      ; auto|directory|lines
///
/// Unknown sections or keys are rejected.
struct ToolConfig {
  TokenizerConfig tokenizer;
  IngestionConfig ingestion;
};

namespace detail {

inline std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

inline bool parse_bool(const std::string& key, std::string value) {
  value = trim(std::move(value));
  std::transform(value.begin(), value.end(), value.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw ConfigError("'" + key + "' expects a boolean, got '" + value + "'");
}

inline std::vector<std::string> parse_list(const std::string& value) {
  std::vector<std::string> items;
  std::string::size_type start = 0;
  while (start <= value.size()) {
    const auto comma = value.find(',', start);
    std::string item = trim(value.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!item.empty()) items.push_back(std::move(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

}  // namespace detail

inline ToolConfig parse_config(std::istream& in, const std::string& name = "<config>") {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(name + ":" + std::to_string(e.line()) + ": " + e.message());
  }

  ToolConfig config;
  for (const auto& [section, body] : tree) {
    if (!body.data().empty()) throw ConfigError(name + ": key '" + section + "' outside of a section");
    for (const auto& [key, node] : body) {
      const std::string qualified = section + "." + key;
      const std::string value = node.get_value<std::string>();
      if (qualified == "tokenizer.numbers_as_words") {
        config.tokenizer.numbers_as_words = detail::parse_bool(qualified, value);
      } else if (qualified == "ingestion.extensions") {
        config.ingestion.extensions = detail::parse_list(value);
      } else if (qualified == "ingestion.recursive") {
        config.ingestion.recursive = detail::parse_bool(qualified, value);
      } else if (qualified == "ingestion.mode") {
        const std::string mode = detail::trim(value);
        if (mode == "auto") config.ingestion.mode = SourceMode::automatic;
        else if (mode == "directory") config.ingestion.mode = SourceMode::directory;
        else if (mode == "lines") config.ingestion.mode = SourceMode::lines;
        else throw ConfigError(name + ": 'ingestion.mode' must be auto, directory or lines");
      } else {
        throw ConfigError(name + ": unknown key '" + qualified + "'");
      }
    }
  }
  return config;
}

inline ToolConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  return parse_config(in, path.string());
}

}  // namespace autorake
