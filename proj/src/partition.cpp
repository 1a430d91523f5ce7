#include "wtcensus/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wtcensus {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be >= 1, got " + std::to_string(p));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::map<int, int, std::greater<int>> Partition::power_notation() const {
  std::map<int, int, std::greater<int>> d;
  for (int p : parts_) ++d[p];
  return d;
}

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::str_power() const {
  std::string s;
  for (const auto& [part, mult] : power_notation()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(part) + "^" + std::to_string(mult);
  }
  return s;
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  const bool power_form = text.find('^') != std::string::npos;
  std::istringstream in(text);
  if (power_form) {
    std::string tok;
    while (in >> tok) {
      auto caret = tok.find('^');
      if (caret == std::string::npos || caret == 0 || caret + 1 == tok.size())
        throw std::invalid_argument("bad power-form token: '" + tok + "'");
      int part = std::stoi(tok.substr(0, caret));
      int mult = std::stoi(tok.substr(caret + 1));
      if (mult < 0) throw std::invalid_argument("negative multiplicity in '" + tok + "'");
      for (int i = 0; i < mult; ++i) parts.push_back(part);
    }
  } else {
    std::string tok;
    while (std::getline(in, tok, ',')) {
      // tolerate surrounding whitespace
      size_t b = tok.find_first_not_of(" \t");
      if (b == std::string::npos) {
        if (parts.empty() && text.find_first_not_of(" \t") == std::string::npos) break;
        throw std::invalid_argument("empty part in partition text");
      }
      size_t e = tok.find_last_not_of(" \t");
      parts.push_back(std::stoi(tok.substr(b, e - b + 1)));
    }
  }
  return Partition(std::move(parts));
}

BigRat big_n(const Partition& p) {
  if (p.size() == 0) throw std::domain_error("big_n: undefined for the empty partition");
  BigInt den = 1;
  for (const auto& [part, mult] : p.power_notation()) den *= factorial(static_cast<unsigned>(mult));
  return BigRat(factorial(static_cast<unsigned>(p.size() - 1)), den);
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    const std::function<void(const Partition&)>& sink) {
  if (remaining == 0) {
    sink(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, sink);
    acc.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& sink) {
  if (n < 0) throw std::domain_error("for_each_partition: n must be >= 0");
  std::vector<int> acc;
  gen_partitions(n, n, acc, sink);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Passport::Passport(Partition a, Partition b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.total() != beta.total())
    throw std::invalid_argument("passport halves must have equal total weight: " + alpha.str() +
                                " vs " + beta.str());
}

std::string Passport::str() const { return "(" + alpha.str() + " | " + beta.str() + ")"; }

}  // namespace wtcensus
