#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "autorake/corpus.hpp"
#include "autorake/csv.hpp"
#include "autorake/error.hpp"
#include "autorake/parallel.hpp"
#include "autorake/rake.hpp"
#include "autorake/stoplist.hpp"
#include "autorake/termstats.hpp"

namespace autorake {

enum class CountMode {
  /// Number of documents in which the phrase was extracted.
  presence,
  /// Number of candidate occurrences over the whole corpus.
  occurrences,
};

struct ReportConfig {
  TokenizerConfig tokenizer;
  CountMode count = CountMode::presence;
  std::optional<std::size_t> max_phrase_len;
  std::size_t threads = 1;
};

struct KeywordFrequencyRow {
  std::string normal;
  /// Most common surface variant across documents, ties to the earliest
  /// document.
  std::string surface;
  std::size_t doc_count = 0;
  std::size_t occurrences = 0;
  std::size_t token_count = 0;

  friend bool operator==(const KeywordFrequencyRow&, const KeywordFrequencyRow&) = default;
};

struct KeywordFrequencies {
  std::vector<KeywordFrequencyRow> rows;
  /// Documents that failed extraction, as "doc_id: reason".
  std::vector<std::string> warnings;
};

/// Corpus-wide keyword ranking: extracts keywords from every document (no
/// top-k cut) and ranks phrases by the configured count, descending, ties by
/// normal form.
inline KeywordFrequencies corpus_keyword_frequencies(const Corpus& corpus, const Stoplist& stoplist,
                                                     const ReportConfig& config = {}) {
  const auto& docs = corpus.documents();
  std::vector<std::vector<ScoredKeyword>> per_doc(docs.size());
  std::vector<std::optional<std::string>> failures(docs.size());
  ExtractOptions options;
  options.max_phrase_len = config.max_phrase_len;
  parallel_chunks(docs.size(), config.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        per_doc[i] = extract_keywords(docs[i], stoplist, config.tokenizer, options);
      } catch (const Error& e) {
        failures[i] = docs[i].doc_id + ": " + e.what();
      }
    }
  });

  struct Variant {
    std::size_t count = 0;
    std::size_t first_doc = 0;
  };
  struct Aggregate {
    KeywordFrequencyRow row;
    std::map<std::string, Variant> surfaces;
  };
  std::map<std::string, Aggregate> agg;
  KeywordFrequencies result;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (failures[i]) result.warnings.push_back(*failures[i]);
    for (const auto& k : per_doc[i]) {
      auto& a = agg[k.normal];
      a.row.normal = k.normal;
      a.row.token_count = k.token_count;
      a.row.doc_count += 1;
      a.row.occurrences += k.occurrences;
      auto [it, inserted] = a.surfaces.try_emplace(k.surface, Variant{0, i});
      it->second.count += 1;
    }
  }

  result.rows.reserve(agg.size());
  for (auto& [normal, a] : agg) {
    const auto best = std::min_element(a.surfaces.begin(), a.surfaces.end(), [](const auto& x, const auto& y) {
      if (x.second.count != y.second.count) return x.second.count > y.second.count;
      return x.second.first_doc < y.second.first_doc;
    });
    a.row.surface = best->first;
    result.rows.push_back(std::move(a.row));
  }
  const auto key = [&](const KeywordFrequencyRow& r) {
    return config.count == CountMode::presence ? r.doc_count : r.occurrences;
  };
  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [&](const KeywordFrequencyRow& a, const KeywordFrequencyRow& b) { return key(a) > key(b); });
  return result;
}

/// Rows with exactly n tokens, rank order preserved.
inline std::vector<KeywordFrequencyRow> filter_by_token_count(const std::vector<KeywordFrequencyRow>& rows,
                                                              std::size_t n) {
  if (n < 1) throw DomainError("token count filter needs n >= 1");
  std::vector<KeywordFrequencyRow> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
               [n](const KeywordFrequencyRow& r) { return r.token_count == n; });
  return out;
}

/// Picks at most one Poisson and one negative binomial model from the list,
/// all of which must be built for `documents`.
struct ModelPair {
  std::optional<OccurrenceModel> poisson;
  std::optional<OccurrenceModel> negbin;
};

inline ModelPair split_models(const std::vector<OccurrenceModel>& models, std::size_t documents) {
  ModelPair pair;
  for (const auto& m : models) {
    if (m.documents() != documents) {
      throw ConsistencyError("model " + m.describe() + " built for N=" + std::to_string(m.documents()) +
                             ", statistics have N=" + std::to_string(documents));
    }
    auto& slot = m.kind() == ModelKind::poisson ? pair.poisson : pair.negbin;
    if (slot) throw ConsistencyError("more than one " + m.describe() + " model given");
    slot = m;
  }
  return pair;
}

/// `word,cf,df`, descending cf then word.
inline void write_term_stats_csv(std::ostream& out, const TermStatsTable& stats) {
  csv::write_row(out, {"word", "cf", "df"});
  for (const auto& s : stats.sorted_by_cf()) {
    csv::write_row(out, {s.word, std::to_string(s.cf), std::to_string(s.df)});
  }
}

/// Per-word scatter data with a column per supplied model:
/// `word,cf,df[,df_poisson][,df_negbin,ratio_negbin]`.
inline void write_scatter_csv(std::ostream& out, const TermStatsTable& stats,
                              const std::vector<OccurrenceModel>& models) {
  const ModelPair pair = split_models(models, stats.documents());
  std::vector<std::string> header{"word", "cf", "df"};
  if (pair.poisson) header.emplace_back("df_poisson");
  if (pair.negbin) {
    header.emplace_back("df_negbin");
    header.emplace_back("ratio_negbin");
  }
  csv::write_row(out, header);
  for (const auto& s : stats.sorted_by_cf()) {
    std::vector<std::string> row{s.word, std::to_string(s.cf), std::to_string(s.df)};
    const double cf = static_cast<double>(s.cf);
    if (pair.poisson) row.push_back(csv::number(expected_df(*pair.poisson, cf)));
    if (pair.negbin) {
      row.push_back(csv::number(expected_df(*pair.negbin, cf)));
      row.push_back(csv::number(randomness_ratio(s, *pair.negbin)));
    }
    csv::write_row(out, row);
  }
}

struct CurvePoint {
  double cf;
  std::optional<double> df_poisson;
  std::optional<double> df_negbin;
};

/// Model curves at `points` cf values spaced log-uniformly over [1, max_cf].
inline std::vector<CurvePoint> model_curve(const std::vector<OccurrenceModel>& models, std::size_t documents,
                                           double max_cf, std::size_t points = 200) {
  const ModelPair pair = split_models(models, documents);
  max_cf = std::max(max_cf, 1.0);
  std::vector<CurvePoint> curve;
  curve.reserve(points);
  const double span = std::log(max_cf);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    const double cf = i + 1 == points ? max_cf : std::exp(span * t);
    CurvePoint p{cf, std::nullopt, std::nullopt};
    if (pair.poisson) p.df_poisson = expected_df(*pair.poisson, cf);
    if (pair.negbin) p.df_negbin = expected_df(*pair.negbin, cf);
    curve.push_back(p);
  }
  return curve;
}

/// `cf[,df_poisson][,df_negbin]` for the curve of model_curve.
inline void write_curve_csv(std::ostream& out, const std::vector<OccurrenceModel>& models, std::size_t documents,
                            double max_cf, std::size_t points = 200) {
  const auto curve = model_curve(models, documents, max_cf, points);
  const ModelPair pair = split_models(models, documents);
  std::vector<std::string> header{"cf"};
  if (pair.poisson) header.emplace_back("df_poisson");
  if (pair.negbin) header.emplace_back("df_negbin");
  csv::write_row(out, header);
  for (const auto& p : curve) {
    std::vector<std::string> row{csv::number(p.cf)};
    if (p.df_poisson) row.push_back(csv::number(*p.df_poisson));
    if (p.df_negbin) row.push_back(csv::number(*p.df_negbin));
    csv::write_row(out, row);
  }
}

namespace detail {

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  writer(out);
  out.flush();
  if (!out) throw Error("error writing " + path.string());
}

}  // namespace detail

/// Default location of the curve file next to a scatter file:
/// "scatter.csv" -> "scatter_curve.csv".
inline std::filesystem::path curve_path_for(const std::filesystem::path& scatter_path) {
  auto p = scatter_path;
  p.replace_filename(scatter_path.stem().string() + "_curve" + scatter_path.extension().string());
  return p;
}

/// Writes the scatter CSV and, when at least one model is given, the dense
/// curve CSV (to curve_path, or next to the scatter file).
inline void export_scatter(const TermStatsTable& stats, const std::vector<OccurrenceModel>& models,
                           const std::filesystem::path& scatter_path,
                           std::optional<std::filesystem::path> curve_path = std::nullopt) {
  split_models(models, stats.documents());
  detail::write_file(scatter_path, [&](std::ostream& out) { write_scatter_csv(out, stats, models); });
  if (models.empty()) return;
  const auto path = curve_path.value_or(curve_path_for(scatter_path));
  detail::write_file(path, [&](std::ostream& out) {
    write_curve_csv(out, models, stats.documents(), static_cast<double>(stats.max_cf()));
  });
}

}  // namespace autorake
