#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtcensus/numbers.hpp"

namespace wtcensus {

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

class FixtureExhausted : public std::runtime_error {
 public:
  explicit FixtureExhausted(long long last_index);
  long long last_index() const { return last_index_; }

 private:
  long long last_index_;
};

// OEIS b-file: one "index value" pair per line; '#' comments and blank lines
// are skipped. Indices may arrive in any order; duplicates with conflicting
// values are a parse error.
struct BFile {
  std::vector<std::pair<long long, BigInt>> entries;  // sorted by index

  // values at indices 0..max; throws FixtureExhausted naming the last index
  // of the contiguous prefix when the file does not reach max
  std::vector<BigInt> prefix(int max) const;
};

BFile parse_b_file(std::istream& in);
BFile load_b_file(const std::string& path);  // runtime_error when unreadable

struct SequenceCheck {
  bool match;
  int compared;        // indices 0..compared-1 were compared
  int first_mismatch;  // -1 when match
  std::string detail;
};

// computed[n] vs the b-file values at indices 0..computed.size()-1
SequenceCheck compare_sequence(const std::vector<BigInt>& computed, const BFile& reference);

inline constexpr const char* kA002212BFileUrl = "https://oeis.org/A002212/b002212.txt";

// Fetches the A002212 b-file over HTTPS, caching the body under cache_dir
// (reused on later calls). Returns the text, or nullopt with the reason in
// error. Compiled out to a graceful failure when TLS support is unavailable.
std::optional<std::string> fetch_a002212(const std::string& cache_dir, std::string& error);

}  // namespace wtcensus
