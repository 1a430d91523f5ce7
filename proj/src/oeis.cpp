#include "wtcensus/oeis.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef WTCENSUS_HAVE_TLS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

namespace wtcensus {

BFileParseError::BFileParseError(int line, const std::string& what)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}

FixtureExhausted::FixtureExhausted(long long last_index)
    : std::runtime_error("fixture exhausted at " + std::to_string(last_index)),
      last_index_(last_index) {}

std::vector<BigInt> BFile::prefix(int max) const {
  std::vector<BigInt> out;
  if (max < 0) return out;
  out.reserve(static_cast<std::size_t>(max) + 1);
  long long expect = 0;
  for (const auto& [index, value] : entries) {
    if (index != expect) break;
    out.push_back(value);
    if (expect == max) return out;
    ++expect;
  }
  throw FixtureExhausted(expect - 1);
}

BFile parse_b_file(std::istream& in) {
  BFile file;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    long long index;
    std::string value_text, extra;
    if (!(fields >> index >> value_text) || (fields >> extra))
      throw BFileParseError(lineno, "expected 'index value', got '" + line + "'");
    BigInt value;
    try {
      value = BigInt(value_text);
    } catch (const std::exception&) {
      throw BFileParseError(lineno, "bad integer '" + value_text + "'");
    }
    file.entries.emplace_back(index, value);
  }
  std::sort(file.entries.begin(), file.entries.end());
  for (std::size_t i = 1; i < file.entries.size(); ++i)
    if (file.entries[i].first == file.entries[i - 1].first &&
        file.entries[i].second != file.entries[i - 1].second)
      throw BFileParseError(0, "conflicting values for index " +
                                   std::to_string(file.entries[i].first));
  file.entries.erase(std::unique(file.entries.begin(), file.entries.end()), file.entries.end());
  return file;
}

BFile load_b_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open b-file: " + path);
  return parse_b_file(in);
}

SequenceCheck compare_sequence(const std::vector<BigInt>& computed, const BFile& reference) {
  const int max = static_cast<int>(computed.size()) - 1;
  auto ref = reference.prefix(max);  // FixtureExhausted propagates
  for (int n = 0; n <= max; ++n) {
    if (computed[static_cast<std::size_t>(n)] != ref[static_cast<std::size_t>(n)]) {
      return SequenceCheck{false, n + 1, n,
                           "mismatch at index " + std::to_string(n) + ": computed " +
                               to_string(computed[static_cast<std::size_t>(n)]) + ", reference " +
                               to_string(ref[static_cast<std::size_t>(n)])};
    }
  }
  return SequenceCheck{true, max + 1, -1,
                       "rows 0.." + std::to_string(max) + " agree with the reference"};
}

std::optional<std::string> fetch_a002212(const std::string& cache_dir, std::string& error) {
  namespace fs = std::filesystem;
  fs::path cache_file;
  if (!cache_dir.empty()) {
    cache_file = fs::path(cache_dir) / "b002212.txt";
    std::ifstream cached(cache_file);
    if (cached) {
      std::ostringstream body;
      body << cached.rdbuf();
      return body.str();
    }
  }
#ifdef WTCENSUS_HAVE_TLS
  httplib::SSLClient client("oeis.org");
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get("/A002212/b002212.txt");
  if (!res) {
    error = "request failed: " + httplib::to_string(res.error());
    return std::nullopt;
  }
  if (res->status != 200) {
    error = "HTTP status " + std::to_string(res->status);
    return std::nullopt;
  }
  if (!cache_file.empty()) {
    std::error_code ec;
    fs::create_directories(cache_file.parent_path(), ec);
    std::ofstream out(cache_file);
    if (out) out << res->body;
  }
  return res->body;
#else
  error = "built without TLS support";
  return std::nullopt;
#endif
}

}  // namespace wtcensus
