#pragma once

// Naive RAKE used as an oracle. Works on a token stream, but shares no code
// with autorake/rake.hpp: candidates come from scanning for run starts, and
// word statistics are recounted from scratch for every member word
// (quadratic in the number of candidates).

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "autorake/tokenizer.hpp"

namespace autorake::test {

struct RefCandidate {
  std::size_t position;
  std::vector<std::string> surfaces;
  std::vector<std::string> normals;
};

struct RefKeyword {
  std::string surface;
  std::string normal;
  double score;
  std::size_t tokens;
};

inline std::vector<RefCandidate> reference_candidates(const TokenStream& stream, const std::set<std::string>& stop) {
  const auto content = [&](std::size_t i) { return stream[i].is_word() && stop.count(stream[i].normal) == 0; };
  std::vector<RefCandidate> out;
  for (std::size_t s = 0; s < stream.size(); ++s) {
    if (!content(s) || (s > 0 && content(s - 1))) continue;
    RefCandidate c{s, {}, {}};
    for (std::size_t j = s; j < stream.size() && content(j); ++j) {
      c.surfaces.push_back(stream[j].surface);
      c.normals.push_back(stream[j].normal);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
  return s;
}

inline std::vector<RefKeyword> reference_keywords(const std::vector<RefCandidate>& cands) {
  const auto word_score = [&](const std::string& w) {
    double freq = 0, deg = 0;
    for (const auto& c : cands) {
      const auto n = static_cast<double>(std::count(c.normals.begin(), c.normals.end(), w));
      freq += n;
      deg += n * static_cast<double>(c.normals.size());
    }
    return deg / freq;
  };
  std::vector<RefKeyword> out;
  for (const auto& c : cands) {
    const std::string normal = join(c.normals);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const RefKeyword& k) { return k.normal == normal; });
    if (seen) continue;
    double score = 0;
    for (const auto& w : c.normals) score += word_score(w);
    out.push_back({join(c.surfaces), normal, score, c.normals.size()});
  }
  std::sort(out.begin(), out.end(), [](const RefKeyword& a, const RefKeyword& b) {
    return a.score != b.score ? a.score > b.score : a.normal < b.normal;
  });
  return out;
}

}  // namespace autorake::test
