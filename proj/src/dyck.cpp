#include "wtcensus/dyck.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

namespace wtcensus {

bool token_less(const Token& a, const Token& b) {
  if (a.step != b.step) return a.step == Step::Up;
  return a.weight < b.weight;
}

std::string WordFault::message() const {
  switch (kind) {
    case WordFaultKind::Unbalanced:
      return "unbalanced word: " + std::to_string(position) + " tokens, open steps remain";
    case WordFaultKind::PrefixViolation:
      return "prefix dips below zero at token " + std::to_string(position);
    case WordFaultKind::CoupleWeightMismatch:
      return "couple weight mismatch between tokens " + std::to_string(open_position) + " and " +
             std::to_string(close_position);
    case WordFaultKind::BadWeight:
      return "token " + std::to_string(position) + " has weight < 1";
  }
  return "unknown fault";
}

WordError::WordError(const WordFault& fault) : std::runtime_error(fault.message()), fault_(fault) {}

std::optional<WordFault> WeightedDyckWord::check(std::span<const Token> tokens) {
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.weight < 1) return WordFault{WordFaultKind::BadWeight, i};
    if (t.step == Step::Up) {
      stack.push_back(i);
    } else {
      if (stack.empty()) return WordFault{WordFaultKind::PrefixViolation, i};
      std::size_t open = stack.back();
      stack.pop_back();
      if (tokens[open].weight != t.weight)
        return WordFault{WordFaultKind::CoupleWeightMismatch, 0, open, i};
    }
  }
  if (!stack.empty()) return WordFault{WordFaultKind::Unbalanced, tokens.size()};
  return std::nullopt;
}

WeightedDyckWord WeightedDyckWord::validate(std::vector<Token> tokens) {
  if (auto fault = check(tokens)) throw WordError(*fault);
  long long weight = 0;
  int couples = 0;
  for (const Token& t : tokens) {
    if (t.step == Step::Up) {
      weight += t.weight;
      ++couples;
    }
  }
  return WeightedDyckWord(std::move(tokens), weight, couples);
}

std::vector<std::size_t> WeightedDyckWord::couple_match() const {
  std::vector<std::size_t> partner(tokens_.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].step == Step::Up) {
      stack.push_back(i);
    } else {
      std::size_t open = stack.back();
      stack.pop_back();
      partner[open] = i;
      partner[i] = open;
    }
  }
  return partner;
}

std::vector<std::pair<std::size_t, std::size_t>> WeightedDyckWord::couples() const {
  auto partner = couple_match();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(static_cast<std::size_t>(couples_));
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    if (tokens_[i].step == Step::Up) out.emplace_back(i, partner[i]);
  return out;
}

bool word_less(const WeightedDyckWord& a, const WeightedDyckWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return std::lexicographical_compare(a.tokens().begin(), a.tokens().end(), b.tokens().begin(),
                                      b.tokens().end(), token_less);
}

Decomposition decompose(const WeightedDyckWord& w) {
  if (w.empty()) throw std::invalid_argument("decompose: empty word");
  const auto& toks = w.tokens();
  // first return: the Down coupled with token 0
  int depth = 0;
  std::size_t close = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    depth += toks[i].step == Step::Up ? 1 : -1;
    if (depth == 0) {
      close = i;
      break;
    }
  }
  std::vector<Token> inner(toks.begin() + 1, toks.begin() + static_cast<std::ptrdiff_t>(close));
  std::vector<Token> tail(toks.begin() + static_cast<std::ptrdiff_t>(close) + 1, toks.end());
  return Decomposition{toks[0].weight, WeightedDyckWord::validate(std::move(inner)),
                       WeightedDyckWord::validate(std::move(tail))};
}

WeightedDyckWord compose(int root_weight, const WeightedDyckWord& inner,
                         const WeightedDyckWord& tail) {
  if (root_weight < 1) throw std::invalid_argument("compose: root weight must be >= 1");
  std::vector<Token> toks;
  toks.reserve(inner.length() + tail.length() + 2);
  toks.push_back(Token{Step::Up, root_weight});
  toks.insert(toks.end(), inner.tokens().begin(), inner.tokens().end());
  toks.push_back(Token{Step::Down, root_weight});
  toks.insert(toks.end(), tail.tokens().begin(), tail.tokens().end());
  return WeightedDyckWord::validate(std::move(toks));
}

namespace {

// Appends every word of weight n to buf, calling cont once per completed
// word. Continuation-passing keeps the enumeration lazy: memory stays
// O(word length) no matter how many words there are.
void gen_words(int n, std::vector<Token>& buf, const std::function<void()>& cont) {
  if (n == 0) {
    cont();
    return;
  }
  for (int i = 1; i <= n; ++i) {
    buf.push_back(Token{Step::Up, i});
    for (int k = 0; k + i <= n; ++k) {
      gen_words(k, buf, [&buf, &cont, n, i, k] {
        buf.push_back(Token{Step::Down, i});
        gen_words(n - i - k, buf, cont);
        buf.pop_back();
      });
    }
    buf.pop_back();
  }
}

}  // namespace

void for_each_word(int n, const std::function<void(const WeightedDyckWord&)>& sink) {
  if (n < 0) throw std::domain_error("for_each_word: weight must be >= 0");
  std::vector<Token> buf;
  buf.reserve(static_cast<std::size_t>(2 * n));
  gen_words(n, buf, [&] { sink(WeightedDyckWord::validate(buf)); });
}

std::vector<WeightedDyckWord> enumerate_words(int n) {
  std::vector<WeightedDyckWord> out;
  for_each_word(n, [&](const WeightedDyckWord& w) { out.push_back(w); });
  return out;
}

void for_each_word_with_edges(int n, int m,
                              const std::function<void(const WeightedDyckWord&)>& sink) {
  if (m < 1 || m > n) throw std::domain_error("for_each_word_with_edges: need 1 <= m <= n");
  for_each_word(n, [&](const WeightedDyckWord& w) {
    if (w.edge_count() == m) sink(w);
  });
}

std::vector<WeightedDyckWord> enumerate_words_with_edges(int n, int m) {
  std::vector<WeightedDyckWord> out;
  for_each_word_with_edges(n, m, [&](const WeightedDyckWord& w) { out.push_back(w); });
  return out;
}

TextParseError::TextParseError(std::size_t offset, const std::string& what)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

WeightedDyckWord parse_text(std::string_view text) {
  std::vector<Token> toks;
  std::vector<int> open_weights;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  };
  while (true) {
    skip_ws();
    if (i == n) break;
    if (text[i] == '(') {
      ++i;
      skip_ws();
      std::size_t digits_at = i;
      long long weight = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + n, weight);
      if (ec == std::errc::invalid_argument || ptr == text.data() + i)
        throw TextParseError(digits_at, "expected couple weight after '('");
      if (ec == std::errc::result_out_of_range || weight < 1 || weight > INT32_MAX)
        throw TextParseError(digits_at, "couple weight out of range");
      i = static_cast<std::size_t>(ptr - text.data());
      toks.push_back(Token{Step::Up, static_cast<int>(weight)});
      open_weights.push_back(static_cast<int>(weight));
    } else if (text[i] == ')') {
      if (open_weights.empty()) throw TextParseError(i, "unmatched ')'");
      toks.push_back(Token{Step::Down, open_weights.back()});
      open_weights.pop_back();
      ++i;
    } else {
      throw TextParseError(i, std::string("unexpected character '") + text[i] + "'");
    }
  }
  if (!open_weights.empty())
    throw TextParseError(n, std::to_string(open_weights.size()) + " unclosed '(' at end of input");
  return WeightedDyckWord::validate(std::move(toks));
}

std::string render_text(const WeightedDyckWord& w) {
  std::string out;
  for (const Token& t : w.tokens()) {
    if (!out.empty()) out += ' ';
    if (t.step == Step::Up) {
      out += '(';
      out += std::to_string(t.weight);
    } else {
      out += ')';
    }
  }
  return out;
}

}  // namespace wtcensus
