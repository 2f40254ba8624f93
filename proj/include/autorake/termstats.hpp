#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "autorake/corpus.hpp"
#include "autorake/error.hpp"
#include "autorake/optimize.hpp"
#include "autorake/parallel.hpp"
#include "autorake/tokenizer.hpp"

namespace autorake {

/// Collection frequency (total occurrences) and document frequency (number
/// of documents containing the word) of one normalized word.
struct TermStats {
  std::string word;
  std::uint64_t cf = 0;
  std::uint64_t df = 0;

  friend bool operator==(const TermStats&, const TermStats&) = default;
};

/// Per-word (cf, df) over a corpus of `documents()` documents. Entries are
/// keyed and iterated in byte order of the normalized word.
class TermStatsTable {
 public:
  using Entries = std::map<std::string, TermStats, std::less<>>;

  TermStatsTable() = default;

  /// Builds a table from explicit counts; rejects entries that violate
  /// 1 <= df <= cf and df <= documents, and duplicate words.
  TermStatsTable(std::size_t documents, const std::vector<TermStats>& entries) : documents_(documents) {
    for (const auto& e : entries) {
      if (e.df < 1 || e.df > e.cf || e.df > documents) {
        throw ConsistencyError("invalid counts for '" + e.word + "': cf=" + std::to_string(e.cf) +
                               " df=" + std::to_string(e.df) + " N=" + std::to_string(documents));
      }
      if (!entries_.emplace(e.word, e).second) throw ConsistencyError("duplicate word '" + e.word + "'");
    }
  }

  /// Counts one document's words. Empty documents still count towards N.
  void add_document(const TokenStream& tokens) {
    std::unordered_map<std::string_view, std::uint64_t> counts;
    for (const auto& t : tokens) {
      if (t.is_word()) ++counts[t.normal];
    }
    for (const auto& [word, n] : counts) {
      auto it = entries_.find(word);
      if (it == entries_.end()) it = entries_.emplace(std::string(word), TermStats{std::string(word), 0, 0}).first;
      it->second.cf += n;
      it->second.df += 1;
    }
    ++documents_;
  }

  /// Adds another table's counts as if its documents had been added here.
  void merge(const TermStatsTable& other) {
    for (const auto& [word, s] : other.entries_) {
      auto [it, inserted] = entries_.try_emplace(word, TermStats{word, 0, 0});
      it->second.cf += s.cf;
      it->second.df += s.df;
    }
    documents_ += other.documents_;
  }

  std::size_t documents() const noexcept { return documents_; }
  const Entries& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const TermStats* find(std::string_view word) const {
    const auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::uint64_t total_occurrences() const noexcept {
    std::uint64_t total = 0;
    for (const auto& [_, s] : entries_) total += s.cf;
    return total;
  }

  std::uint64_t max_cf() const noexcept {
    std::uint64_t m = 0;
    for (const auto& [_, s] : entries_) m = std::max(m, s.cf);
    return m;
  }

  /// Entries by descending cf, ties by word.
  std::vector<TermStats> sorted_by_cf() const {
    std::vector<TermStats> rows;
    rows.reserve(entries_.size());
    for (const auto& [_, s] : entries_) rows.push_back(s);
    std::stable_sort(rows.begin(), rows.end(),
                     [](const TermStats& a, const TermStats& b) { return a.cf > b.cf; });
    return rows;
  }

  friend bool operator==(const TermStatsTable&, const TermStatsTable&) = default;

 private:
  std::size_t documents_ = 0;
  Entries entries_;
};

/// Counts every document of the corpus, splitting the work over `threads`
/// workers (0 = all cores). The result does not depend on the thread count.
inline TermStatsTable compute_term_stats(const Corpus& corpus, const TokenizerConfig& config = {},
                                         std::size_t threads = 1) {
  const auto& docs = corpus.documents();
  const std::size_t workers = resolve_threads(threads, docs.size());
  std::vector<TermStatsTable> partial(workers);
  parallel_chunks(docs.size(), workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) partial[w].add_document(tokenize(docs[i].text, config));
  });
  TermStatsTable table = std::move(partial.front());
  for (std::size_t w = 1; w < partial.size(); ++w) table.merge(partial[w]);
  return table;
}

enum class ModelKind { poisson, negative_binomial };

/// Random-occurrence model giving the expected document frequency of a word
/// from its collection frequency. The mean per-document rate is cf / N; the
/// negative binomial adds a dispersion r (smaller r = burstier, r -> infinity
/// recovers Poisson).
class OccurrenceModel {
 public:
  static OccurrenceModel poisson(std::size_t documents) {
    check_documents(documents);
    return OccurrenceModel(ModelKind::poisson, documents, std::nullopt);
  }

  static OccurrenceModel negative_binomial(std::size_t documents, double r) {
    check_documents(documents);
    if (!(r > 0) || !std::isfinite(r)) throw DomainError("negative binomial r must be positive and finite");
    return OccurrenceModel(ModelKind::negative_binomial, documents, r);
  }

  ModelKind kind() const noexcept { return kind_; }
  std::size_t documents() const noexcept { return documents_; }
  /// r for the negative binomial, nullopt for Poisson.
  std::optional<double> dispersion() const noexcept { return r_; }

  std::string describe() const {
    if (kind_ == ModelKind::poisson) return "poisson";
    std::ostringstream os;
    os.precision(17);
    os << "negbin r=" << *r_;
    return os.str();
  }

  friend bool operator==(const OccurrenceModel&, const OccurrenceModel&) = default;

 private:
  OccurrenceModel(ModelKind kind, std::size_t documents, std::optional<double> r)
      : kind_(kind), documents_(documents), r_(r) {}

  static void check_documents(std::size_t documents) {
    if (documents < 1) throw DomainError("occurrence model needs at least one document");
  }

  ModelKind kind_;
  std::size_t documents_;
  std::optional<double> r_;
};

/// Expected number of documents containing a word that occurs cf times in
/// total: N * (1 - P(0 occurrences | mean cf/N)). Evaluated through expm1 /
/// log1p so that small rates and huge r keep full relative precision. The
/// result lies in [0, min(cf, N)].
inline double expected_df(const OccurrenceModel& model, double cf) {
  if (!(cf >= 0)) throw DomainError("expected_df: cf must be non-negative");
  if (cf == 0) return 0.0;
  const double n = static_cast<double>(model.documents());
  const double mu = cf / n;
  double df = 0;
  if (model.kind() == ModelKind::poisson) {
    df = -n * std::expm1(-mu);
  } else {
    const double r = *model.dispersion();
    df = -n * std::expm1(-r * std::log1p(mu / r));
  }
  return std::min(df, std::min(cf, n));
}

/// Expected over observed document frequency. Values near 1 mean the word is
/// scattered like the model predicts; clustered content words score high.
inline double randomness_ratio(const TermStats& entry, const OccurrenceModel& model) {
  if (entry.df == 0) throw DomainError("randomness_ratio: df must be at least 1");
  return expected_df(model, static_cast<double>(entry.cf)) / static_cast<double>(entry.df);
}

struct FitOptions {
  double r_min = 1e-3;
  double r_max = 1e3;
  /// Relative precision of r.
  double rel_tol = 1e-6;
};

struct NegBinFit {
  OccurrenceModel model;
  /// Sum of squared log residuals at the returned r.
  double objective;
  /// r lies on (within tolerance of) a bracket end.
  bool at_boundary;
  /// The objective varied by less than 1e-12 (absolute, or relative when
  /// larger than 1) over the bracket; r is r_max.
  bool flat;
};

/// Sum over vocabulary words of (log expected_df(cf; r) - log df)^2.
inline double negbin_log_residual(const TermStatsTable& stats, double r) {
  const auto model = OccurrenceModel::negative_binomial(stats.documents(), r);
  double sum = 0;
  for (const auto& [_, s] : stats.entries()) {
    const double d = std::log(expected_df(model, static_cast<double>(s.cf))) - std::log(static_cast<double>(s.df));
    sum += d * d;
  }
  return sum;
}

/// Fits the negative binomial dispersion r to the (cf, df) scatter by
/// least squares on log df, one residual per vocabulary word. The search
/// runs golden-section over log r inside [r_min, r_max].
inline NegBinFit fit_negbin_r(const TermStatsTable& stats, const FitOptions& options = {}) {
  if (stats.empty()) throw FitError("cannot fit r: term statistics are empty");
  if (stats.documents() < 1) throw FitError("cannot fit r: no documents");
  if (!(options.r_min > 0 && options.r_min < options.r_max && std::isfinite(options.r_max))) {
    throw FitError("cannot fit r: invalid search bracket");
  }
  if (!(options.rel_tol > 0)) throw FitError("cannot fit r: tolerance must be positive");

  const double lo = std::log(options.r_min);
  const double hi = std::log(options.r_max);
  const auto objective = [&](double log_r) { return negbin_log_residual(stats, std::exp(log_r)); };
  const auto make = [&](double r, double value, bool boundary, bool flat) {
    r = std::clamp(r, options.r_min, options.r_max);
    return NegBinFit{OccurrenceModel::negative_binomial(stats.documents(), r), value, boundary, flat};
  };

  const double f_lo = objective(lo);
  const double f_hi = objective(hi);
  const double f_mid = objective(0.5 * (lo + hi));
  const double scale = std::max({f_lo, f_hi, f_mid, 1.0});
  if (std::max({f_lo, f_hi, f_mid}) - std::min({f_lo, f_hi, f_mid}) <= 1e-12 * scale) {
    return make(options.r_max, f_hi, true, true);
  }

  const double tol = std::log1p(options.rel_tol);
  const MinimizeResult best = golden_section_minimize(objective, lo, hi, tol);
  // The interior optimum loses to an end point when the objective is
  // monotone over the bracket (e.g. Poisson-like data, best r = infinity).
  if (f_hi <= best.fx && f_hi <= f_lo) return make(options.r_max, f_hi, true, false);
  if (f_lo <= best.fx) return make(options.r_min, f_lo, true, false);
  const bool boundary = (best.x - lo) <= tol || (hi - best.x) <= tol;
  return make(std::exp(best.x), best.fx, boundary, false);
}

}  // namespace autorake
