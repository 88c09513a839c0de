#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hlvir/partition.hpp"

namespace hlvir {

/// A label lambda in Z^l for Q_lambda: any finite integer sequence, possibly
/// negative or unsorted.
class LambdaVector {
 public:
  LambdaVector() = default;
  explicit LambdaVector(std::vector<int> parts) : parts_(std::move(parts)) {}
  LambdaVector(std::initializer_list<int> parts) : parts_(parts) {}
  explicit LambdaVector(const Partition& p) : parts_(p.parts()) {}

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int weight() const;

  /// lambda + a * epsilon_i, with i counted from 1.
  [[nodiscard]] LambdaVector plus_at(int i, int a) const;
  /// (lambda, other): concatenation.
  [[nodiscard]] LambdaVector concat(const LambdaVector& other) const;
  /// Drops the first part.
  [[nodiscard]] LambdaVector tail() const;

  /// True when some tail sum lambda_j + ... + lambda_l is negative, which forces Q_lambda = 0.
  [[nodiscard]] bool has_negative_tail_sum() const;
  [[nodiscard]] bool is_partition() const { return Partition::is_partition(parts_); }

  /// "[2,-1,1]"
  [[nodiscard]] std::string to_string() const;
  /// Parses a comma-separated list ("2,-1,1", optionally bracketed); "" is the empty vector.
  static LambdaVector parse(std::string_view text);

  friend bool operator==(const LambdaVector&, const LambdaVector&) = default;
  friend auto operator<=>(const LambdaVector&, const LambdaVector&) = default;

 private:
  std::vector<int> parts_;
};

/// Display order for labels in a combination: lexicographically descending.
struct LabelOrder {
  bool operator()(const LambdaVector& a, const LambdaVector& b) const { return b < a; }
};

struct LambdaHash {
  std::size_t operator()(const LambdaVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int p : v.parts()) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(p))) * 0x100000001b3ULL;
    return h ^ v.parts().size();
  }
};

/// (k, 1^j)
LambdaVector hook(int k, int j);

/// Every vector of length <= max_length with parts in [lo, hi], shortest first.
std::vector<LambdaVector> all_integer_vectors(int max_length, int lo, int hi);

}  // namespace hlvir
