#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "autorake/error.hpp"
#include "autorake/utf8.hpp"

namespace autorake {

struct Document {
  std::string doc_id;
  std::string text;

  friend bool operator==(const Document&, const Document&) = default;
};

/// A document that could not be ingested, with the reason.
struct SkippedDocument {
  std::string doc_id;
  std::string reason;
};

enum class SourceMode { automatic, directory, lines };

struct IngestionConfig {
  /// Accepted file extensions in directory mode, including the dot. Empty
  /// accepts every regular file.
  std::vector<std::string> extensions{".txt"};
  bool recursive = true;
  /// automatic picks directory mode for directories, lines mode otherwise.
  SourceMode mode = SourceMode::automatic;
};

/// Ordered document collection. Documents are kept sorted by doc_id so that
/// everything computed downstream is independent of how they were supplied.
class Corpus {
 public:
  Corpus() = default;

  explicit Corpus(std::vector<Document> documents, std::vector<SkippedDocument> skipped = {})
      : documents_(std::move(documents)), skipped_(std::move(skipped)) {
    std::sort(documents_.begin(), documents_.end(),
              [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
    const auto dup = std::adjacent_find(
        documents_.begin(), documents_.end(),
        [](const Document& a, const Document& b) { return a.doc_id == b.doc_id; });
    if (dup != documents_.end()) throw IngestionError("duplicate doc_id '" + dup->doc_id + "'");
  }

  const std::vector<Document>& documents() const noexcept { return documents_; }
  const std::vector<SkippedDocument>& skipped() const noexcept { return skipped_; }
  std::size_t size() const noexcept { return documents_.size(); }
  bool empty() const noexcept { return documents_.empty(); }

  auto begin() const noexcept { return documents_.begin(); }
  auto end() const noexcept { return documents_.end(); }

 private:
  std::vector<Document> documents_;
  std::vector<SkippedDocument> skipped_;
};

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot read " + path.string());
  std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IngestionError("error reading " + path.string());
  return data;
}

inline void strip_bom(std::string& text) {
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);
}

inline bool has_extension(const std::filesystem::path& path, const std::vector<std::string>& exts) {
  if (exts.empty()) return true;
  const std::string ext = path.extension().string();
  return std::find(exts.begin(), exts.end(), ext) != exts.end();
}

inline void admit(std::string doc_id, std::string text, std::vector<Document>& docs,
                  std::vector<SkippedDocument>& skipped) {
  strip_bom(text);
  if (const auto bad = utf8::first_invalid(text)) {
    skipped.push_back({std::move(doc_id), "invalid UTF-8 at byte " + std::to_string(*bad)});
    return;
  }
  docs.push_back({std::move(doc_id), std::move(text)});
}

template <typename Iterator>
void collect_files(Iterator it, const std::filesystem::path& root, const IngestionConfig& config,
                   std::vector<Document>& docs, std::vector<SkippedDocument>& skipped) {
  for (const auto& entry : it) {
    if (!entry.is_regular_file() || !has_extension(entry.path(), config.extensions)) continue;
    admit(entry.path().lexically_relative(root).generic_string(), read_file(entry.path()), docs,
          skipped);
  }
}

/// "rec-000042" for line 42; wider when the file has more lines.
inline std::string record_id(std::size_t line_no, std::size_t width) {
  std::string digits = std::to_string(line_no);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return "rec-" + digits;
}

}  // namespace detail

/// Loads a corpus from a directory of text files (doc_id = path relative
/// to the directory, '/'-separated) or from a file with one document per
/// line (doc_id = "rec-" + zero-padded 1-based line number; empty lines are
/// not documents). Documents that are not valid UTF-8 are skipped and
/// listed in Corpus::skipped().
inline Corpus load_corpus(const std::filesystem::path& source, const IngestionConfig& config = {}) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const auto status = fs::status(source, ec);
  if (ec || !fs::exists(status)) throw IngestionError("cannot read " + source.string() + ": no such file or directory");

  SourceMode mode = config.mode;
  if (mode == SourceMode::automatic) {
    mode = fs::is_directory(status) ? SourceMode::directory : SourceMode::lines;
  }

  std::vector<Document> docs;
  std::vector<SkippedDocument> skipped;
  if (mode == SourceMode::directory) {
    if (!fs::is_directory(status)) throw IngestionError(source.string() + " is not a directory");
    try {
      if (config.recursive) {
        detail::collect_files(fs::recursive_directory_iterator(source), source, config, docs, skipped);
      } else {
        detail::collect_files(fs::directory_iterator(source), source, config, docs, skipped);
      }
    } catch (const fs::filesystem_error& e) {
      throw IngestionError("cannot read " + source.string() + ": " + e.code().message());
    }
  } else {
    if (fs::is_directory(status)) throw IngestionError(source.string() + " is a directory, expected a file");
    const std::string data = detail::read_file(source);
    std::vector<std::string_view> lines;
    std::string_view rest = data;
    while (!rest.empty()) {
      const auto nl = rest.find('\n');
      lines.push_back(rest.substr(0, nl));
      rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    }
    const std::size_t width = std::max<std::size_t>(6, std::to_string(lines.size()).size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
      std::string_view line = lines[i];
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty()) continue;
      detail::admit(detail::record_id(i + 1, width), std::string(line), docs, skipped);
    }
  }

  if (docs.empty()) {
    std::string msg = "no documents found in " + source.string();
    if (!skipped.empty()) msg += " (" + std::to_string(skipped.size()) + " skipped)";
    throw IngestionError(msg);
  }
  std::sort(skipped.begin(), skipped.end(),
            [](const SkippedDocument& a, const SkippedDocument& b) { return a.doc_id < b.doc_id; });
  return Corpus(std::move(docs), std::move(skipped));
}

}  // namespace autorake
