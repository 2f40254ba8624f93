#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "autorake/utf8.hpp"

namespace autorake {

struct TokenizerConfig {
  /// Runs of decimal digits become words ("23 marca 2013 r."). When false
  /// they act as stop symbols.
  bool numbers_as_words = true;

  friend bool operator==(const TokenizerConfig&, const TokenizerConfig&) = default;
};

enum class TokenKind { word, sentence_separator, stop_symbol };

/// Item of a token stream. Words carry their normalized form; delimiters
/// keep the punctuation run they came from in `surface` and leave `normal`
/// empty.
struct Token {
  TokenKind kind = TokenKind::word;
  std::string surface;
  std::string normal;

  bool is_word() const noexcept { return kind == TokenKind::word; }
  bool is_delimiter() const noexcept { return kind != TokenKind::word; }

  friend bool operator==(const Token&, const Token&) = default;
};

using TokenStream = std::vector<Token>;

/// Word normalization: Unicode lowercasing, nothing else.
inline std::string normalize(std::string_view word) { return utf8::to_lower(word); }

inline bool is_sentence_punctuation(UChar32 c) noexcept {
  return c == '.' || c == '!' || c == '?' || c == ';' || c == ':';
}

namespace detail {

enum class RunKind { none, letters, digits, delimiters };

class StreamBuilder {
 public:
  explicit StreamBuilder(TokenStream& out) : out_(out) {}

  void extend(RunKind kind, std::string_view bytes, bool sentence) {
    if (kind != run_) flush();
    run_ = kind;
    buffer_.append(bytes);
    sentence_ = sentence_ || sentence;
  }

  void flush() {
    if (run_ == RunKind::letters || run_ == RunKind::digits) {
      std::string normal = normalize(buffer_);
      out_.push_back({TokenKind::word, std::move(buffer_), std::move(normal)});
    } else if (run_ == RunKind::delimiters) {
      out_.push_back({sentence_ ? TokenKind::sentence_separator : TokenKind::stop_symbol,
                      std::move(buffer_), {}});
    }
    buffer_.clear();
    run_ = RunKind::none;
    sentence_ = false;
  }

  RunKind run() const noexcept { return run_; }

 private:
  TokenStream& out_;
  std::string buffer_;
  RunKind run_ = RunKind::none;
  bool sentence_ = false;
};

}  // namespace detail

/// Splits text into words and delimiters.
///
/// A word is a maximal run of Unicode letters (combining marks attached to
/// a letter stay in the run) or, with numbers_as_words, a maximal run of
/// decimal digits. Whitespace separates items without producing one. Any
/// other run of characters becomes a single delimiter, which is a sentence
/// separator if it contains one of `. ! ? ; :` and a stop symbol otherwise.
/// Hyphens and apostrophes are stop symbols. Ill-formed UTF-8 bytes are
/// treated as stop symbols.
inline TokenStream tokenize(std::string_view text, const TokenizerConfig& config = {}) {
  using detail::RunKind;
  TokenStream out;
  detail::StreamBuilder builder(out);
  utf8::Decoder dec(text);
  while (!dec.done()) {
    const utf8::CodePoint cp = dec.next();
    const std::string_view bytes = text.substr(cp.begin, cp.end - cp.begin);
    const UChar32 c = cp.value;
    if (cp.valid && utf8::is_letter(c)) {
      builder.extend(RunKind::letters, bytes, false);
    } else if (cp.valid && utf8::is_mark(c) && builder.run() == RunKind::letters) {
      builder.extend(RunKind::letters, bytes, false);
    } else if (cp.valid && config.numbers_as_words && utf8::is_digit(c)) {
      builder.extend(RunKind::digits, bytes, false);
    } else if (cp.valid && utf8::is_space(c)) {
      builder.flush();
    } else {
      builder.extend(RunKind::delimiters, bytes, cp.valid && is_sentence_punctuation(c));
    }
  }
  builder.flush();
  return out;
}

}  // namespace autorake
