#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wtcensus {

enum class Step : std::uint8_t { Up, Down };  // x_i / y_i

struct Token {
  Step step;
  int weight;  // >= 1

  // memberwise order coincides with token_less: Up < Down, then weight
  auto operator<=>(const Token&) const = default;
};

// Token order used for canonical codes: Up < Down, then weight ascending.
bool token_less(const Token& a, const Token& b);

enum class WordFaultKind : std::uint8_t {
  Unbalanced,             // open steps left at end of word
  PrefixViolation,        // a prefix has more Down than Up steps
  CoupleWeightMismatch,   // matched Up/Down carry different weights
  BadWeight,              // token weight < 1
};

struct WordFault {
  WordFaultKind kind;
  std::size_t position = 0;        // PrefixViolation / BadWeight: offending token;
                                   // Unbalanced: one past the last token
  std::size_t open_position = 0;   // CoupleWeightMismatch only
  std::size_t close_position = 0;
  std::string message() const;
};

class WordError : public std::runtime_error {
 public:
  explicit WordError(const WordFault& fault);
  const WordFault& fault() const { return fault_; }

 private:
  WordFault fault_;
};

// Balanced word over {x_i, y_i} with weight-consistent couples. Immutable;
// the empty word encodes the single-vertex tree.
class WeightedDyckWord {
 public:
  WeightedDyckWord() = default;  // empty word

  // First violation wins; see WordFault for what is reported.
  static std::optional<WordFault> check(std::span<const Token> tokens);
  static WeightedDyckWord validate(std::vector<Token> tokens);  // throws WordError

  const std::vector<Token>& tokens() const { return tokens_; }
  bool empty() const { return tokens_.empty(); }
  std::size_t length() const { return tokens_.size(); }
  long long weight() const { return weight_; }  // sum over couples
  int edge_count() const { return couples_; }   // number of couples

  // partner[i] = index of the token coupled with token i
  std::vector<std::size_t> couple_match() const;
  // (open, close) pairs ordered by open position; the pair containing
  // position 0 corresponds to the root edge
  std::vector<std::pair<std::size_t, std::size_t>> couples() const;

  bool operator==(const WeightedDyckWord&) const = default;

 private:
  WeightedDyckWord(std::vector<Token> tokens, long long weight, int couples)
      : tokens_(std::move(tokens)), weight_(weight), couples_(couples) {}

  std::vector<Token> tokens_;
  long long weight_ = 0;
  int couples_ = 0;
};

// Length-then-lexicographic order under token_less; total on all words.
bool word_less(const WeightedDyckWord& a, const WeightedDyckWord& b);

// First-return factorization w = x_i u y_i v of a non-empty word.
struct Decomposition {
  int root_weight;          // i
  WeightedDyckWord inner;   // u: traversal past the white end of the root edge
  WeightedDyckWord tail;    // v: remaining traversal at the black root
};

Decomposition decompose(const WeightedDyckWord& w);  // rejects the empty word
WeightedDyckWord compose(int root_weight, const WeightedDyckWord& inner,
                         const WeightedDyckWord& tail);

// All words of weight n, streamed in the documented deterministic order:
// root weight i = 1..n, then inner weight k = 0..n-i, then inner words in
// this same order, then tail words in this same order.
void for_each_word(int n, const std::function<void(const WeightedDyckWord&)>& sink);
std::vector<WeightedDyckWord> enumerate_words(int n);

// Restriction of for_each_word to words with exactly m couples.
void for_each_word_with_edges(int n, int m,
                              const std::function<void(const WeightedDyckWord&)>& sink);
std::vector<WeightedDyckWord> enumerate_words_with_edges(int n, int m);

// Text codec. Grammar (bit-exact on output):
//   word   := couple*
//   couple := '(' INT word ')'
// Tokens are separated by one ASCII space on output; parsing accepts any
// whitespace. The empty word renders as the empty string.
class TextParseError : public std::runtime_error {
 public:
  TextParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

WeightedDyckWord parse_text(std::string_view text);
std::string render_text(const WeightedDyckWord& w);

}  // namespace wtcensus
