#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "autorake/error.hpp"
#include "autorake/termstats.hpp"
#include "autorake/tokenizer.hpp"
#include "autorake/utf8.hpp"

namespace autorake {

struct StoplistConfig {
  /// Words with expected_df / df strictly below this are stopwords.
  double threshold = 1.6;
  /// Minimum document frequency; the default 11 means "more than ten".
  std::size_t min_df = 11;

  void validate() const {
    if (!(threshold > 0) || !std::isfinite(threshold)) throw ConfigError("stoplist threshold must be positive");
    if (min_df < 1) throw ConfigError("stoplist min_df must be at least 1");
  }

  friend bool operator==(const StoplistConfig&, const StoplistConfig&) = default;
};

/// Where a stoplist came from. External lists carry no statistics.
struct StoplistProvenance {
  bool external = true;
  std::optional<StoplistConfig> config;
  std::string model;
  std::size_t documents = 0;
  std::size_t vocabulary = 0;

  friend bool operator==(const StoplistProvenance&, const StoplistProvenance&) = default;
};

/// A set of normalized words acting as phrase boundaries for RAKE.
class Stoplist {
 public:
  using Words = std::set<std::string, std::less<>>;

  Stoplist() = default;

  /// Words are normalized on insertion.
  explicit Stoplist(const std::vector<std::string>& words, StoplistProvenance provenance = {})
      : provenance_(std::move(provenance)) {
    for (const auto& w : words) insert(w);
  }

  /// Returns false if the (normalized) word was already present.
  bool insert(std::string_view word) { return words_.insert(normalize(word)).second; }

  bool contains(std::string_view normal) const { return words_.find(normal) != words_.end(); }

  const Words& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  const StoplistProvenance& provenance() const noexcept { return provenance_; }
  void set_provenance(StoplistProvenance p) { provenance_ = std::move(p); }

 private:
  Words words_;
  StoplistProvenance provenance_;
};

/// Stopwords are the words scattered like random noise: randomness ratio
/// below the threshold, seen in at least min_df documents.
inline Stoplist generate_stoplist(const TermStatsTable& stats, const OccurrenceModel& model,
                                  const StoplistConfig& config = {}) {
  config.validate();
  if (model.documents() != stats.documents()) {
    throw ConsistencyError("model built for N=" + std::to_string(model.documents()) +
                           " but term statistics have N=" + std::to_string(stats.documents()));
  }
  Stoplist list;
  for (const auto& [word, s] : stats.entries()) {
    if (s.df >= config.min_df && randomness_ratio(s, model) < config.threshold) list.insert(word);
  }
  list.set_provenance({false, config, model.describe(), stats.documents(), stats.size()});
  return list;
}

namespace detail {

inline std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string_view trim_view(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace detail

/// Writes the stoplist: '#' header lines describing provenance, then one
/// word per line in byte order, LF endings.
inline void write_stoplist(std::ostream& out, const Stoplist& list) {
  const auto& p = list.provenance();
  out << "# autorake stoplist\n";
  out << "# source: " << (p.external ? "external" : "generated") << '\n';
  if (!p.external) {
    if (p.config) {
      out << "# threshold: " << detail::format_shortest(p.config->threshold) << '\n';
      out << "# min_df: " << p.config->min_df << '\n';
    }
    out << "# model: " << p.model << '\n';
    out << "# documents: " << p.documents << '\n';
    out << "# vocabulary: " << p.vocabulary << '\n';
  }
  out << "# words: " << list.size() << '\n';
  for (const auto& w : list.words()) out << w << '\n';
}

inline void save_stoplist(const Stoplist& list, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write stoplist " + path.string());
  write_stoplist(out, list);
  out.flush();
  if (!out) throw Error("error writing stoplist " + path.string());
}

struct LoadedStoplist {
  Stoplist stoplist;
  /// Lines whose normalized word was already present.
  std::size_t duplicates = 0;
};

/// Reads a stoplist in the format written by write_stoplist, or any plain
/// one-word-per-line list. Words are normalized; blank lines and '#' lines
/// are skipped. A line holding more than one word is a FormatError. Lists
/// without a "# source: generated" header get external provenance.
inline LoadedStoplist parse_stoplist(std::istream& in, const std::string& name = "<stoplist>") {
  LoadedStoplist result;
  StoplistProvenance prov;
  StoplistConfig config;
  bool has_config = false;
  std::vector<std::string> words;
  std::string line;
  std::size_t line_no = 0;

  const auto parse_size = [&](std::string_view v) {
    std::size_t n = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), n);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) throw FormatError(name, line_no, "bad number in header");
    return n;
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view raw = detail::trim_view(line);
    if (raw.empty()) continue;
    if (raw.front() == '#') {
      const std::string_view body = detail::trim_view(raw.substr(1));
      const auto colon = body.find(':');
      if (colon == std::string_view::npos) continue;
      const std::string_view key = detail::trim_view(body.substr(0, colon));
      const std::string_view value = detail::trim_view(body.substr(colon + 1));
      if (key == "source") {
        prov.external = value != "generated";
      } else if (key == "threshold") {
        double t = 0;
        const auto res = std::from_chars(value.data(), value.data() + value.size(), t);
        if (res.ec != std::errc{}) throw FormatError(name, line_no, "bad threshold in header");
        config.threshold = t;
        has_config = true;
      } else if (key == "min_df") {
        config.min_df = parse_size(value);
        has_config = true;
      } else if (key == "model") {
        prov.model = std::string(value);
      } else if (key == "documents") {
        prov.documents = parse_size(value);
      } else if (key == "vocabulary") {
        prov.vocabulary = parse_size(value);
      }
      continue;
    }
    if (!utf8::is_valid(raw)) throw FormatError(name, line_no, "invalid UTF-8");
    if (raw.find_first_of(" \t\f\v") != std::string_view::npos) {
      throw FormatError(name, line_no, "expected one word per line, got '" + std::string(raw) + "'");
    }
    if (!result.stoplist.insert(raw)) ++result.duplicates;
  }
  if (in.bad()) throw Error("error reading " + name);

  if (prov.external) {
    prov = StoplistProvenance{};
  } else if (has_config) {
    prov.config = config;
  }
  result.stoplist.set_provenance(std::move(prov));
  return result;
}

inline LoadedStoplist load_stoplist(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read stoplist " + path.string());
  return parse_stoplist(in, path.string());
}

}  // namespace autorake
