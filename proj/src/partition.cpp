#include "hlvir/partition.hpp"

#include <algorithm>
#include <numeric>

#include "hlvir/errors.hpp"

namespace hlvir {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_partition(parts_)) throw InvalidArgument("not a partition: " + to_string());
}

bool Partition::is_partition(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

int Partition::n_statistic() const {
  int n = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) n += static_cast<int>(i) * parts_[i];
  return n;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other[i] > (*this)[i]) return false;
  }
  return true;
}

bool Partition::is_hook() const {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] != 1) return false;
  }
  return !parts_.empty();
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

namespace {

void generate(int remaining, int max_part, int max_length, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (static_cast<int>(current.size()) >= max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, max_length, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  generate(n, max_part, max_length, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = partitions_of(n, max_length);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace hlvir
