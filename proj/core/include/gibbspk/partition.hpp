#ifndef GIBBSPK_PARTITION_HPP
#define GIBBSPK_PARTITION_HPP

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gibbspk/logspace.hpp"

namespace gibbspk {

// Unordered composition (n_1,...,n_k) of n: the block sizes of a partition,
// stored non-increasing. Equality is multiset equality.
class PartitionShape {
public:
  explicit PartitionShape(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int k() const { return static_cast<int>(parts_.size()); }

  std::string to_string() const;                    // "3,2,1"
  static PartitionShape parse(std::string_view s);  // inverse of to_string

  auto operator<=>(const PartitionShape& o) const { return parts_ <=> o.parts_; }
  bool operator==(const PartitionShape& o) const { return parts_ == o.parts_; }

private:
  std::vector<int> parts_;
  int n_;
};

// Partition of {1,...,n} into disjoint non-empty blocks. Canonical form:
// blocks ordered by least element, elements ascending within a block.
class SetPartition {
public:
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int n() const { return n_; }
  int k() const { return static_cast<int>(blocks_.size()); }
  PartitionShape shape() const;

  std::string to_string() const;  // "{1,3}{2}"

  bool operator==(const SetPartition& o) const { return blocks_ == o.blocks_; }

private:
  std::vector<std::vector<int>> blocks_;
  int n_;
};

inline PartitionShape shape_of(const SetPartition& p) { return p.shape(); }

// Bell numbers grow fast; enumeration is refused above this ceiling unless
// the caller raises it explicitly.
inline constexpr int kEnumerationCeiling = 13;

// Visit every set partition of {1,...,n} exactly once, by recursion over
// restricted-growth strings. The callback receives the block index of each
// element (rgs[i] = block of element i+1, blocks numbered from 0 in order of
// appearance). Throws std::out_of_range if n < 1 or n > ceiling.
void for_each_restricted_growth_string(
    int n, const std::function<void(std::span<const int>)>& visit,
    int ceiling = kEnumerationCeiling);

void for_each_set_partition(int n,
                            const std::function<void(const SetPartition&)>& visit,
                            int ceiling = kEnumerationCeiling);

std::vector<SetPartition> enumerate_set_partitions(int n,
                                                   int ceiling = kEnumerationCeiling);

SetPartition set_partition_from_rgs(std::span<const int> rgs);
PartitionShape shape_from_rgs(std::span<const int> rgs);

// Number of set partitions of [n] carrying each shape, by enumeration.
std::map<PartitionShape, long long> shape_multiplicities(int n,
                                                         int ceiling = kEnumerationCeiling);

// Every shape of n (the integer partitions of n, parts non-increasing).
std::vector<PartitionShape> all_shapes(int n);

// Generalized rising factorial prod_{i=0}^{n-1} (x + i*step); n = 0 gives 1.
// The log-domain variant tracks sign so negative or zero factors (alpha < 0
// weight tables) are representable.
double rising_factorial(double x, int n, double step = 1.0);
SignedLog log_rising_factorial(double x, int n, double step = 1.0);

// Decimal digits lost to cancellation in the worst factor of the product,
// roughly log10(scale/|factor|). Used to flag near-degenerate parameters.
double rising_factorial_cancellation_digits(double x, int n, double step = 1.0);

}  // namespace gibbspk

#endif  // GIBBSPK_PARTITION_HPP
