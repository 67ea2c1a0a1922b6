#include "gibbspk/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gibbspk {

PartitionShape::PartitionShape(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("PartitionShape: needs at least one part");
  n_ = 0;
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("PartitionShape: parts must be >= 1");
    n_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

std::string PartitionShape::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

PartitionShape PartitionShape::parse(std::string_view s) {
  std::vector<int> parts;
  const char* p = s.data();
  const char* end = s.data() + s.size();
  while (p < end) {
    int v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc()) throw std::invalid_argument("PartitionShape::parse: bad part in '" + std::string(s) + "'");
    parts.push_back(v);
    p = next;
    if (p < end) {
      if (*p != ',') throw std::invalid_argument("PartitionShape::parse: expected ',' in '" + std::string(s) + "'");
      ++p;
    }
  }
  return PartitionShape(std::move(parts));
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("SetPartition: needs at least one block");
  n_ = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    n_ += static_cast<int>(b.size());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  // blocks must partition {1,...,n}
  std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
  for (const auto& b : blocks_) {
    for (int e : b) {
      if (e < 1 || e > n_ || seen[static_cast<size_t>(e)])
        throw std::invalid_argument("SetPartition: blocks must partition {1,...,n}");
      seen[static_cast<size_t>(e)] = 1;
    }
  }
}

PartitionShape SetPartition::shape() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return PartitionShape(std::move(sizes));
}

std::string SetPartition::to_string() const {
  std::string out;
  for (const auto& b : blocks_) {
    out += '{';
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i]);
    }
    out += '}';
  }
  return out;
}

namespace {

void rgs_recurse(int n, int depth, int next_block, std::vector<int>& rgs,
                 const std::function<void(std::span<const int>)>& visit) {
  if (depth == n) {
    visit(std::span<const int>(rgs));
    return;
  }
  for (int c = 0; c <= next_block; ++c) {
    rgs[static_cast<size_t>(depth)] = c;
    rgs_recurse(n, depth + 1, std::max(next_block, c + 1), rgs, visit);
  }
}

}  // namespace

void for_each_restricted_growth_string(
    int n, const std::function<void(std::span<const int>)>& visit, int ceiling) {
  if (n < 1 || n > ceiling)
    throw std::out_of_range("set-partition enumeration: n = " + std::to_string(n) +
                            " outside [1, " + std::to_string(ceiling) + "]");
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  rgs_recurse(n, 1, 1, rgs, visit);  // element 1 always opens block 0
}

SetPartition set_partition_from_rgs(std::span<const int> rgs) {
  int k = 0;
  for (int b : rgs) k = std::max(k, b + 1);
  std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
  for (size_t i = 0; i < rgs.size(); ++i)
    blocks[static_cast<size_t>(rgs[i])].push_back(static_cast<int>(i) + 1);
  return SetPartition(std::move(blocks));
}

PartitionShape shape_from_rgs(std::span<const int> rgs) {
  int k = 0;
  for (int b : rgs) k = std::max(k, b + 1);
  std::vector<int> sizes(static_cast<size_t>(k), 0);
  for (int b : rgs) ++sizes[static_cast<size_t>(b)];
  return PartitionShape(std::move(sizes));
}

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit,
                            int ceiling) {
  for_each_restricted_growth_string(
      n, [&](std::span<const int> rgs) { visit(set_partition_from_rgs(rgs)); }, ceiling);
}

std::vector<SetPartition> enumerate_set_partitions(int n, int ceiling) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); }, ceiling);
  return out;
}

std::map<PartitionShape, long long> shape_multiplicities(int n, int ceiling) {
  std::map<PartitionShape, long long> counts;
  for_each_restricted_growth_string(
      n, [&](std::span<const int> rgs) { ++counts[shape_from_rgs(rgs)]; }, ceiling);
  return counts;
}

namespace {

void shapes_recurse(int remaining, int max_part, std::vector<int>& current,
                    std::vector<PartitionShape>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    shapes_recurse(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<PartitionShape> all_shapes(int n) {
  if (n < 1) throw std::out_of_range("all_shapes: n must be >= 1");
  std::vector<PartitionShape> out;
  std::vector<int> current;
  shapes_recurse(n, n, current, out);
  return out;
}

double rising_factorial(double x, int n, double step) {
  if (n < 0) throw std::invalid_argument("rising_factorial: n must be >= 0");
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x + i * step;
  return r;
}

SignedLog log_rising_factorial(double x, int n, double step) {
  if (n < 0) throw std::invalid_argument("log_rising_factorial: n must be >= 0");
  SignedLog r{0.0, 1};
  for (int i = 0; i < n; ++i) {
    const double f = x + i * step;
    if (f == 0.0) return {kNegInf, 0};
    r.log_abs += std::log(std::abs(f));
    if (f < 0.0) r.sign = -r.sign;
  }
  return r;
}

double rising_factorial_cancellation_digits(double x, int n, double step) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double f = x + i * step;
    const double scale = std::abs(x) + std::abs(i * step);
    if (scale == 0.0) continue;
    if (f == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::log10(scale / std::abs(f)));
  }
  return worst;
}

}  // namespace gibbspk
