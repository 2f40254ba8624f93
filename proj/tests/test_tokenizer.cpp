#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "autorake/tokenizer.hpp"
#include "support/properties.hpp"

using namespace autorake;

namespace {

Token word(const std::string& surface, const std::string& normal) { return {TokenKind::word, surface, normal}; }

std::vector<std::string> words_of(const TokenStream& s) {
  std::vector<std::string> out;
  for (const auto& t : s) {
    if (t.is_word()) out.push_back(t.surface);
  }
  return out;
}

}  // namespace

TEST(Tokenizer, PolishSentenceWithDiacritics) {
  const TokenStream s = tokenize("Krajowa Izba Odwoławcza.");
  const TokenStream expected{word("Krajowa", "krajowa"), word("Izba", "izba"), word("Odwoławcza", "odwoławcza"),
                             {TokenKind::sentence_separator, ".", ""}};
  EXPECT_EQ(s, expected);
}

TEST(Tokenizer, UppercasePolishLettersLowercase) {
  const TokenStream s = tokenize("ŁÓDŹ ŻÓŁW ĄĆĘŃŚŹ");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].normal, "łódź");
  EXPECT_EQ(s[1].normal, "żółw");
  EXPECT_EQ(s[2].normal, "ąćęńśź");
}

TEST(Tokenizer, NumbersAreWordsByDefault) {
  const TokenStream s = tokenize("23 marca 2013 r.");
  EXPECT_EQ(words_of(s), (std::vector<std::string>{"23", "marca", "2013", "r"}));
  ASSERT_EQ(s.size(), 5u);
  EXPECT_EQ(s.back().kind, TokenKind::sentence_separator);
}

TEST(Tokenizer, NumbersAsStopSymbolsWhenDisabled) {
  const TokenStream s = tokenize("23 marca 2013 r.", {false});
  ASSERT_EQ(s.size(), 5u);
  EXPECT_EQ(s[0].kind, TokenKind::stop_symbol);
  EXPECT_EQ(s[1], word("marca", "marca"));
  EXPECT_EQ(s[2].kind, TokenKind::stop_symbol);
  EXPECT_EQ(s[3], word("r", "r"));
  EXPECT_EQ(s[4].kind, TokenKind::sentence_separator);
}

TEST(Tokenizer, EmptyText) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize("   \n\t ").empty());
}

TEST(Tokenizer, HyphenAndApostropheBreakWords) {
  const TokenStream s = tokenize("biało-czerwony O'Neil");
  EXPECT_EQ(words_of(s), (std::vector<std::string>{"biało", "czerwony", "O", "Neil"}));
  EXPECT_EQ(s[1].kind, TokenKind::stop_symbol);
  EXPECT_EQ(s[4].kind, TokenKind::stop_symbol);
}

TEST(Tokenizer, LettersAndDigitsAreSeparateRuns) {
  EXPECT_EQ(words_of(tokenize("A4 nr12")), (std::vector<std::string>{"A", "4", "nr", "12"}));
}

TEST(Tokenizer, PunctuationRunIsOneDelimiter) {
  const TokenStream s = tokenize("a),. b \"c\"");
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s[1].surface, "),.");
  EXPECT_EQ(s[1].kind, TokenKind::sentence_separator);
  EXPECT_EQ(s[3].kind, TokenKind::stop_symbol);
}

TEST(Tokenizer, SentenceSeparators) {
  for (const char* p : {".", "!", "?", ";", ":"}) {
    const TokenStream s = tokenize(std::string("a") + p + "b");
    ASSERT_EQ(s.size(), 3u) << p;
    EXPECT_EQ(s[1].kind, TokenKind::sentence_separator) << p;
  }
}

TEST(Tokenizer, CombiningMarkStaysInWord) {
  // "o" followed by U+0301 COMBINING ACUTE ACCENT
  const TokenStream s = tokenize("dro\xCC\x81g");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].surface, "dro\xCC\x81g");
}

TEST(Tokenizer, OtherScriptsAreWords) {
  EXPECT_EQ(words_of(tokenize("Ωμέγα 漢字 ٣٤")), (std::vector<std::string>{"Ωμέγα", "漢字", "٣٤"}));
}

TEST(Tokenizer, InvalidBytesBecomeStopSymbols) {
  const TokenStream s = tokenize("ab\xFF" "cd");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[1].kind, TokenKind::stop_symbol);
  EXPECT_EQ(s[2].surface, "cd");
}

TEST(Tokenizer, ConcurrentTokenizationMatchesSequential) {
  test::Rng rng(11);
  std::vector<std::string> texts;
  for (int i = 0; i < 64; ++i) texts.push_back(test::random_text(rng, 200));
  std::vector<TokenStream> expected;
  for (const auto& t : texts) expected.push_back(tokenize(t));

  std::vector<TokenStream> got(texts.size());
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < 4; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < texts.size(); i += 4) got[i] = tokenize(texts[i]);
    });
  }
  pool.clear();
  EXPECT_EQ(got, expected);
}

TEST(TokenizerProperty, WordsAreTheMaximalLetterAndDigitRuns) {
  const auto r = test::check_tokenizer_partition(1234, 500);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(TokenizerProperty, NormalizationIsIdempotentOnEveryCodePoint) {
  const auto r = test::check_normalization_idempotent();
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_EQ(r.cases, 0x110000u - 0x800u);
}
