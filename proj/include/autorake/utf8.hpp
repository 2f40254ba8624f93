#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "autorake/error.hpp"

namespace autorake::utf8 {

/// One decoded scalar value and the byte range it occupied. Ill-formed
/// sequences decode to U+FFFD with valid == false.
struct CodePoint {
  UChar32 value;
  std::size_t begin;
  std::size_t end;
  bool valid;
};

/// Forward decoder over a UTF-8 byte string. Inputs larger than 2 GiB are
/// rejected because ICU's macros index with int32_t.
class Decoder {
 public:
  explicit Decoder(std::string_view text) : text_(text) {
    if (text.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
      throw DomainError("text exceeds 2 GiB");
    }
  }

  bool done() const noexcept { return pos_ >= static_cast<std::int32_t>(text_.size()); }

  CodePoint next() noexcept {
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(text_.data());
    const auto length = static_cast<std::int32_t>(text_.size());
    const std::int32_t begin = pos_;
    UChar32 c = 0;
    U8_NEXT(bytes, pos_, length, c);
    if (c < 0) {
      return {0xFFFD, static_cast<std::size_t>(begin), static_cast<std::size_t>(pos_), false};
    }
    return {c, static_cast<std::size_t>(begin), static_cast<std::size_t>(pos_), true};
  }

 private:
  std::string_view text_;
  std::int32_t pos_ = 0;
};

/// Byte offset of the first ill-formed sequence, or nullopt for valid UTF-8.
inline std::optional<std::size_t> first_invalid(std::string_view text) {
  Decoder dec(text);
  while (!dec.done()) {
    const CodePoint cp = dec.next();
    if (!cp.valid) return cp.begin;
  }
  return std::nullopt;
}

inline bool is_valid(std::string_view text) { return !first_invalid(text).has_value(); }

inline void append(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  std::int32_t n = 0;
  U8_APPEND_UNSAFE(buf, n, c);
  out.append(buf, static_cast<std::size_t>(n));
}

/// Unicode simple lowercase mapping, code point by code point.
inline std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  Decoder dec(text);
  while (!dec.done()) append(out, u_tolower(dec.next().value));
  return out;
}

inline bool is_letter(UChar32 c) noexcept { return (U_GET_GC_MASK(c) & U_GC_L_MASK) != 0; }
inline bool is_mark(UChar32 c) noexcept { return (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0; }
inline bool is_digit(UChar32 c) noexcept { return (U_GET_GC_MASK(c) & U_GC_ND_MASK) != 0; }
inline bool is_space(UChar32 c) noexcept { return u_isUWhiteSpace(c) != 0; }

}  // namespace autorake::utf8
