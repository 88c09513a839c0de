#pragma once

#include <climits>
#include <compare>
#include <string>
#include <vector>

namespace hlvir {

/// An integer partition lambda_1 >= lambda_2 >= ... >= lambda_l > 0.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int size() const;
  [[nodiscard]] int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  /// m_k: how many parts equal k.
  [[nodiscard]] int multiplicity(int k) const;
  /// n(lambda) = sum_i (i-1) lambda_i.
  [[nodiscard]] int n_statistic() const;
  /// Whether the Young diagram of `other` fits inside this one.
  [[nodiscard]] bool contains(const Partition& other) const;
  [[nodiscard]] bool is_hook() const;
  [[nodiscard]] std::string to_string() const;

  static bool is_partition(const std::vector<int>& parts);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n with at most `max_length` parts, each at most `max_part`,
/// in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n, int max_length = INT_MAX, int max_part = INT_MAX);

/// All partitions of every size 0..max_size with at most `max_length` parts.
std::vector<Partition> partitions_up_to(int max_size, int max_length = INT_MAX);

}  // namespace hlvir
