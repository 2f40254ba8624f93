// autorake command-line tool: corpus statistics, stoplist generation and
// RAKE keyword extraction.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autorake/autorake.hpp"

namespace {

using namespace autorake;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct CommonOptions {
  std::string corpus;
  std::string config;
  std::size_t threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--corpus", opts.corpus, "Directory of .txt files or a one-document-per-line file")->required();
  cmd->add_option("--config", opts.config, "INI config file ([tokenizer], [ingestion] sections)");
  cmd->add_option("--threads", opts.threads, "Worker threads, 0 = all cores")->capture_default_str();
}

ToolConfig read_config(const CommonOptions& opts) {
  return opts.config.empty() ? ToolConfig{} : load_config(opts.config);
}

Corpus read_corpus(const CommonOptions& opts, const ToolConfig& config) {
  Corpus corpus = load_corpus(opts.corpus, config.ingestion);
  for (const auto& s : corpus.skipped()) std::cerr << "warning: skipped " << s.doc_id << ": " << s.reason << '\n';
  return corpus;
}

/// Output stream for an optional --out path; stdout when empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw Error("cannot write " + path);
    path_ = path;
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void close() {
    stream().flush();
    if (!stream()) throw Error("error writing " + (path_.empty() ? std::string("stdout") : path_));
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

OccurrenceModel fitted_negbin(const TermStatsTable& stats, std::optional<double> fixed_r) {
  if (fixed_r) return OccurrenceModel::negative_binomial(stats.documents(), *fixed_r);
  const NegBinFit fit = fit_negbin_r(stats);
  if (fit.flat) std::cerr << "warning: fit objective is flat, r set to the upper bound\n";
  else if (fit.at_boundary) std::cerr << "warning: fitted r lies on the search boundary\n";
  return fit.model;
}

Stoplist read_stoplist(const std::string& path) {
  if (path.empty()) return Stoplist{};
  LoadedStoplist loaded = load_stoplist(path);
  if (loaded.duplicates) std::cerr << "note: " << loaded.duplicates << " duplicate stoplist entries collapsed\n";
  return std::move(loaded.stoplist);
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void write_keywords_json(std::ostream& out, const Document& doc, const std::vector<ScoredKeyword>& keywords) {
  out << "{\"doc_id\":" << nlohmann::json(doc.doc_id).dump() << ",\"keywords\":[";
  for (std::size_t i = 0; i < keywords.size(); ++i) {
    const auto& k = keywords[i];
    if (i) out << ',';
    out << "{\"surface\":" << nlohmann::json(k.surface).dump() << ",\"score\":" << fixed4(k.score)
        << ",\"tokens\":" << k.token_count << '}';
  }
  out << "]}\n";
}

void write_frequency_table(std::ostream& out, const std::vector<KeywordFrequencyRow>& rows, std::size_t k,
                           CountMode mode) {
  const bool presence = mode == CountMode::presence;
  csv::write_row(out, {"phrase", presence ? "doc_count" : "occurrences"});
  for (std::size_t i = 0; i < rows.size() && i < k; ++i) {
    csv::write_row(out, {rows[i].surface, std::to_string(presence ? rows[i].doc_count : rows[i].occurrences)});
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus-adaptive stoplists and RAKE keyword extraction"};
  app.require_subcommand(1);

  // ingest-check
  CommonOptions ingest_opts;
  auto* ingest = app.add_subcommand("ingest-check", "Load the corpus and report what was ingested");
  add_common(ingest, ingest_opts);

  // stats
  CommonOptions stats_opts;
  std::string stats_out;
  auto* stats_cmd = app.add_subcommand("stats", "Write word,cf,df CSV");
  add_common(stats_cmd, stats_opts);
  stats_cmd->add_option("--out", stats_out, "Output CSV (default stdout)");

  // fit
  CommonOptions fit_opts;
  std::string fit_curve;
  auto* fit_cmd = app.add_subcommand("fit", "Fit the negative binomial r and print it");
  add_common(fit_cmd, fit_opts);
  fit_cmd->add_option("--curve", fit_curve, "Also write cf,df_poisson,df_negbin model curve CSV");

  // stoplist generate
  auto* stoplist_cmd = app.add_subcommand("stoplist", "Stoplist operations");
  stoplist_cmd->require_subcommand(1);
  CommonOptions gen_opts;
  StoplistConfig gen_config;
  std::string gen_model = "negbin";
  std::optional<double> gen_r;
  std::string gen_out;
  auto* gen_cmd = stoplist_cmd->add_subcommand("generate", "Generate a stoplist from corpus statistics");
  add_common(gen_cmd, gen_opts);
  gen_cmd->add_option("--threshold", gen_config.threshold, "Randomness ratio cut-off")->capture_default_str();
  gen_cmd->add_option("--min-df", gen_config.min_df, "Minimum document frequency")->capture_default_str();
  gen_cmd->add_option("--model", gen_model, "Occurrence model")
      ->check(CLI::IsMember({"negbin", "poisson"}))
      ->capture_default_str();
  gen_cmd->add_option("--r", gen_r, "Use this r instead of fitting it (negbin only)");
  gen_cmd->add_option("--out", gen_out, "Output stoplist file (default stdout)");

  // extract
  CommonOptions ex_opts;
  std::string ex_stoplist, ex_format = "json", ex_out;
  std::optional<std::size_t> ex_top_k, ex_max_len;
  std::vector<std::string> ex_docs;
  auto* ex_cmd = app.add_subcommand("extract", "Extract keywords per document");
  add_common(ex_cmd, ex_opts);
  ex_cmd->add_option("--stoplist", ex_stoplist, "Stoplist file (default: empty stoplist)");
  ex_cmd->add_option("--top-k", ex_top_k, "Keep the best n keywords per document");
  ex_cmd->add_option("--max-phrase-len", ex_max_len, "Drop keywords with more tokens");
  ex_cmd->add_option("--format", ex_format, "json (one object per line) or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  ex_cmd->add_option("--doc", ex_docs, "Only these doc_ids (repeatable)");
  ex_cmd->add_option("--out", ex_out, "Output file (default stdout)");

  // report top / by-len
  auto* report_cmd = app.add_subcommand("report", "Corpus-level keyword reports");
  report_cmd->require_subcommand(1);
  CommonOptions rep_opts;
  std::string rep_stoplist, rep_count = "presence", rep_out;
  std::size_t rep_k = 20, rep_tokens = 0;
  std::optional<std::size_t> rep_max_len;
  const auto add_report_options = [&](CLI::App* cmd) {
    add_common(cmd, rep_opts);
    cmd->add_option("--stoplist", rep_stoplist, "Stoplist file (default: empty stoplist)");
    cmd->add_option("--k", rep_k, "Number of rows")->capture_default_str();
    cmd->add_option("--count", rep_count, "Rank by documents or total occurrences")
        ->check(CLI::IsMember({"presence", "occurrences"}))
        ->capture_default_str();
    cmd->add_option("--max-phrase-len", rep_max_len, "Ignore keywords with more tokens");
    cmd->add_option("--out", rep_out, "Output file (default stdout)");
  };
  auto* top_cmd = report_cmd->add_subcommand("top", "Most frequent keywords in the corpus");
  add_report_options(top_cmd);
  auto* bylen_cmd = report_cmd->add_subcommand("by-len", "Most frequent keywords with a given token count");
  add_report_options(bylen_cmd);
  bylen_cmd->add_option("--tokens", rep_tokens, "Token count")->required()->check(CLI::PositiveNumber);

  // export scatter
  auto* export_cmd = app.add_subcommand("export", "Data export");
  export_cmd->require_subcommand(1);
  CommonOptions sc_opts;
  std::string sc_out, sc_curve;
  std::vector<std::string> sc_models{"poisson", "negbin"};
  std::optional<double> sc_r;
  auto* scatter_cmd = export_cmd->add_subcommand("scatter", "Write df-vs-cf scatter and model curve CSVs");
  add_common(scatter_cmd, sc_opts);
  scatter_cmd->add_option("--out", sc_out, "Scatter CSV path")->required();
  scatter_cmd->add_option("--curve-out", sc_curve, "Curve CSV path (default <out>_curve.csv)");
  scatter_cmd->add_option("--model", sc_models, "Models to include (repeatable; poisson, negbin, none)")
      ->check(CLI::IsMember({"poisson", "negbin", "none"}))
      ->capture_default_str();
  scatter_cmd->add_option("--r", sc_r, "Use this r instead of fitting it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*ingest) {
      const ToolConfig config = read_config(ingest_opts);
      const Corpus corpus = read_corpus(ingest_opts, config);
      const TermStatsTable stats = compute_term_stats(corpus, config.tokenizer, ingest_opts.threads);
      std::cout << "documents: " << corpus.size() << '\n'
                << "skipped: " << corpus.skipped().size() << '\n'
                << "word tokens: " << stats.total_occurrences() << '\n'
                << "vocabulary: " << stats.size() << '\n';
      return corpus.skipped().empty() ? 0 : kDataError;
    }

    if (*stats_cmd) {
      const ToolConfig config = read_config(stats_opts);
      const Corpus corpus = read_corpus(stats_opts, config);
      Output out(stats_out);
      write_term_stats_csv(out.stream(), compute_term_stats(corpus, config.tokenizer, stats_opts.threads));
      out.close();
      return 0;
    }

    if (*fit_cmd) {
      const ToolConfig config = read_config(fit_opts);
      const Corpus corpus = read_corpus(fit_opts, config);
      const TermStatsTable stats = compute_term_stats(corpus, config.tokenizer, fit_opts.threads);
      const OccurrenceModel model = fitted_negbin(stats, std::nullopt);
      std::cout << csv::number(*model.dispersion()) << '\n';
      if (!fit_curve.empty()) {
        Output out(fit_curve);
        write_curve_csv(out.stream(), {OccurrenceModel::poisson(stats.documents()), model}, stats.documents(),
                        static_cast<double>(stats.max_cf()));
        out.close();
      }
      return 0;
    }

    if (*gen_cmd) {
      gen_config.validate();
      if (gen_r && gen_model != "negbin") throw ConfigError("--r only applies to --model negbin");
      const ToolConfig config = read_config(gen_opts);
      const Corpus corpus = read_corpus(gen_opts, config);
      const TermStatsTable stats = compute_term_stats(corpus, config.tokenizer, gen_opts.threads);
      const OccurrenceModel model =
          gen_model == "poisson" ? OccurrenceModel::poisson(stats.documents()) : fitted_negbin(stats, gen_r);
      const Stoplist list = generate_stoplist(stats, model, gen_config);
      Output out(gen_out);
      write_stoplist(out.stream(), list);
      out.close();
      std::cerr << "stoplist: " << list.size() << " words (" << model.describe() << ")\n";
      return 0;
    }

    if (*ex_cmd) {
      const ToolConfig config = read_config(ex_opts);
      const Corpus corpus = read_corpus(ex_opts, config);
      const Stoplist stoplist = read_stoplist(ex_stoplist);
      const std::set<std::string> wanted(ex_docs.begin(), ex_docs.end());
      for (const auto& id : wanted) {
        const bool found = std::any_of(corpus.begin(), corpus.end(), [&](const Document& d) { return d.doc_id == id; });
        if (!found) throw Error("no document with doc_id '" + id + "'");
      }
      std::vector<const Document*> docs;
      for (const auto& d : corpus) {
        if (wanted.empty() || wanted.count(d.doc_id)) docs.push_back(&d);
      }
      std::vector<std::vector<ScoredKeyword>> results(docs.size());
      const ExtractOptions options{ex_top_k, ex_max_len};
      parallel_chunks(docs.size(), ex_opts.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          results[i] = extract_keywords(*docs[i], stoplist, config.tokenizer, options);
        }
      });
      Output out(ex_out);
      if (ex_format == "csv") csv::write_row(out.stream(), {"doc_id", "rank", "surface", "score", "tokens"});
      for (std::size_t i = 0; i < docs.size(); ++i) {
        if (ex_format == "json") {
          write_keywords_json(out.stream(), *docs[i], results[i]);
        } else {
          for (std::size_t r = 0; r < results[i].size(); ++r) {
            const auto& k = results[i][r];
            csv::write_row(out.stream(), {docs[i]->doc_id, std::to_string(r + 1), k.surface, fixed4(k.score),
                                          std::to_string(k.token_count)});
          }
        }
      }
      out.close();
      return 0;
    }

    if (*top_cmd || *bylen_cmd) {
      const ToolConfig config = read_config(rep_opts);
      const Corpus corpus = read_corpus(rep_opts, config);
      const Stoplist stoplist = read_stoplist(rep_stoplist);
      ReportConfig rc;
      rc.tokenizer = config.tokenizer;
      rc.count = rep_count == "presence" ? CountMode::presence : CountMode::occurrences;
      rc.max_phrase_len = rep_max_len;
      rc.threads = rep_opts.threads;
      KeywordFrequencies freq = corpus_keyword_frequencies(corpus, stoplist, rc);
      for (const auto& w : freq.warnings) std::cerr << "warning: " << w << '\n';
      auto rows = *bylen_cmd ? filter_by_token_count(freq.rows, rep_tokens) : std::move(freq.rows);
      Output out(rep_out);
      write_frequency_table(out.stream(), rows, rep_k, rc.count);
      out.close();
      return 0;
    }

    if (*scatter_cmd) {
      const ToolConfig config = read_config(sc_opts);
      const Corpus corpus = read_corpus(sc_opts, config);
      const TermStatsTable stats = compute_term_stats(corpus, config.tokenizer, sc_opts.threads);
      const std::set<std::string> kinds(sc_models.begin(), sc_models.end());
      if (kinds.count("none") && kinds.size() > 1) throw ConfigError("--model none excludes other models");
      std::vector<OccurrenceModel> models;
      if (kinds.count("poisson")) models.push_back(OccurrenceModel::poisson(stats.documents()));
      if (kinds.count("negbin")) models.push_back(fitted_negbin(stats, sc_r));
      export_scatter(stats, models, sc_out,
                     sc_curve.empty() ? std::nullopt : std::optional<std::filesystem::path>(sc_curve));
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}
