#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "autorake/corpus.hpp"
#include "autorake/stoplist.hpp"
#include "autorake/tokenizer.hpp"

namespace autorake {

struct PhraseWord {
  std::string surface;
  std::string normal;

  friend bool operator==(const PhraseWord&, const PhraseWord&) = default;
};

/// Maximal run of consecutive non-stopword words. `position` is the index
/// of the first word in the token stream; the words occupy consecutive
/// stream items.
struct CandidatePhrase {
  std::vector<PhraseWord> words;
  std::string doc_id;
  std::size_t position = 0;

  std::size_t size() const noexcept { return words.size(); }

  std::string normal() const {
    std::string out;
    for (const auto& w : words) {
      if (!out.empty()) out += ' ';
      out += w.normal;
    }
    return out;
  }

  std::string surface() const {
    std::string out;
    for (const auto& w : words) {
      if (!out.empty()) out += ' ';
      out += w.surface;
    }
    return out;
  }

  friend bool operator==(const CandidatePhrase&, const CandidatePhrase&) = default;
};

/// Splits the stream at delimiters and stopwords. Adjoining candidates are
/// never merged, even across a single interior stopword.
inline std::vector<CandidatePhrase> extract_candidates(const TokenStream& stream, const Stoplist& stoplist,
                                                       std::string_view doc_id = {}) {
  std::vector<CandidatePhrase> out;
  std::optional<CandidatePhrase> current;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const Token& t = stream[i];
    if (t.is_word() && !stoplist.contains(t.normal)) {
      if (!current) current = CandidatePhrase{{}, std::string(doc_id), i};
      current->words.push_back({t.surface, t.normal});
    } else if (current) {
      out.push_back(std::move(*current));
      current.reset();
    }
  }
  if (current) out.push_back(std::move(*current));
  return out;
}

/// Word co-occurrence statistics of one document's candidates. An
/// occurrence of w inside a candidate of length L adds 1 to freq(w) and L
/// to deg(w).
struct WordCooccurrence {
  std::size_t freq = 0;
  std::size_t deg = 0;
};

class CooccurrenceGraph {
 public:
  void add(const CandidatePhrase& phrase) {
    const std::size_t len = phrase.size();
    for (const auto& w : phrase.words) {
      auto& node = nodes_[w.normal];
      node.freq += 1;
      node.deg += len;
    }
  }

  std::size_t freq(std::string_view normal) const { return lookup(normal).freq; }
  std::size_t deg(std::string_view normal) const { return lookup(normal).deg; }

  /// deg(w) / freq(w), the RAKE word score.
  double word_score(std::string_view normal) const {
    const auto& n = lookup(normal);
    return n.freq == 0 ? 0.0 : static_cast<double>(n.deg) / static_cast<double>(n.freq);
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  const std::unordered_map<std::string, WordCooccurrence>& nodes() const noexcept { return nodes_; }

 private:
  const WordCooccurrence& lookup(std::string_view normal) const {
    static const WordCooccurrence none{};
    const auto it = nodes_.find(std::string(normal));
    return it == nodes_.end() ? none : it->second;
  }

  std::unordered_map<std::string, WordCooccurrence> nodes_;
};

inline CooccurrenceGraph build_graph(const std::vector<CandidatePhrase>& candidates) {
  CooccurrenceGraph graph;
  for (const auto& c : candidates) graph.add(c);
  return graph;
}

struct ScoredKeyword {
  /// Member surface words of the first occurrence, joined by single spaces.
  std::string surface;
  std::string normal;
  double score = 0;
  std::size_t token_count = 0;
  /// How many candidates in the document share this normal form.
  std::size_t occurrences = 0;

  friend bool operator==(const ScoredKeyword&, const ScoredKeyword&) = default;
};

/// One keyword per distinct normal form, scored as the sum of deg/freq of
/// its words, sorted by descending score with ties broken by normal form.
inline std::vector<ScoredKeyword> score_keywords(const std::vector<CandidatePhrase>& candidates,
                                                 const CooccurrenceGraph& graph) {
  std::vector<ScoredKeyword> out;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& c : candidates) {
    std::string normal = c.normal();
    const auto [it, inserted] = index.try_emplace(normal, out.size());
    if (!inserted) {
      ++out[it->second].occurrences;
      continue;
    }
    double score = 0;
    for (const auto& w : c.words) score += graph.word_score(w.normal);
    out.push_back({c.surface(), std::move(normal), score, c.size(), 1});
  }
  std::sort(out.begin(), out.end(), [](const ScoredKeyword& a, const ScoredKeyword& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.normal < b.normal;
  });
  return out;
}

struct ExtractOptions {
  /// Keep only the best top_k keywords.
  std::optional<std::size_t> top_k;
  /// Drop keywords with more tokens than this. Applied after scoring, so
  /// long candidates still contribute to the co-occurrence graph.
  std::optional<std::size_t> max_phrase_len;
};

/// Keywords of a single document; the co-occurrence graph is built from this
/// document's candidates alone.
inline std::vector<ScoredKeyword> extract_keywords(const Document& doc, const Stoplist& stoplist,
                                                   const TokenizerConfig& tokenizer = {},
                                                   const ExtractOptions& options = {}) {
  const auto candidates = extract_candidates(tokenize(doc.text, tokenizer), stoplist, doc.doc_id);
  auto keywords = score_keywords(candidates, build_graph(candidates));
  if (options.max_phrase_len) {
    std::erase_if(keywords, [&](const ScoredKeyword& k) { return k.token_count > *options.max_phrase_len; });
  }
  if (options.top_k && keywords.size() > *options.top_k) keywords.resize(*options.top_k);
  return keywords;
}

}  // namespace autorake
