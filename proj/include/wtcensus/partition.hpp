#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wtcensus/numbers.hpp"

namespace wtcensus {

// Integer partition: weakly decreasing positive parts. The empty partition
// (of 0) is allowed as the weight-0 edge case.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts; rejects parts < 1

  const std::vector<int>& parts() const { return parts_; }
  long long total() const { return total_; }        // n
  int size() const { return static_cast<int>(parts_.size()); }  // k

  // part size -> multiplicity d_i, largest part first; satisfies
  // sum(d_i) = k and sum(i*d_i) = n
  std::map<int, int, std::greater<int>> power_notation() const;

  std::string str() const;        // "5,5,3,1"; empty partition -> ""
  std::string str_power() const;  // "5^2 3^1 1^1"

  // accepts both the comma form "5,5,3,1" and the power form "5^2 3^1 1^1"
  static Partition parse(const std::string& text);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  long long total_ = 0;
};

// (k-1)! / (d_1! d_2! ... d_n!), as an exact rational. The value need not be
// an integer (for 1^n it is 1/n); only the products in the passport-count
// formulas are whole numbers. Rejects the empty partition.
BigRat big_n(const Partition& p);

// All partitions of n in reverse-lexicographic order: (4),(3,1),(2,2),...
void for_each_partition(int n, const std::function<void(const Partition&)>& sink);
std::vector<Partition> partitions_of(int n);

// Pair of partitions of the same total weight: black degrees, white degrees.
struct Passport {
  Partition alpha;
  Partition beta;

  Passport(Partition a, Partition b);  // rejects mismatched totals
  long long total() const { return alpha.total(); }
  std::string str() const;  // "(5,1 | 3,3)"

  auto operator<=>(const Passport&) const = default;
};

}  // namespace wtcensus
