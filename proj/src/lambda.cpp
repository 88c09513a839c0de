#include "hlvir/lambda.hpp"

#include <numeric>

#include "hlvir/errors.hpp"
#include "hlvir/text.hpp"

namespace hlvir {

int LambdaVector::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

LambdaVector LambdaVector::plus_at(int i, int a) const {
  if (i < 1 || i > length()) throw InvalidArgument("plus_at: index out of range");
  LambdaVector v = *this;
  v.parts_[static_cast<std::size_t>(i - 1)] += a;
  return v;
}

LambdaVector LambdaVector::concat(const LambdaVector& other) const {
  LambdaVector v = *this;
  v.parts_.insert(v.parts_.end(), other.parts_.begin(), other.parts_.end());
  return v;
}

LambdaVector LambdaVector::tail() const {
  if (parts_.empty()) throw InvalidArgument("tail of an empty label");
  return LambdaVector(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

bool LambdaVector::has_negative_tail_sum() const {
  int sum = 0;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    sum += *it;
    if (sum < 0) return true;
  }
  return false;
}

std::string LambdaVector::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

LambdaVector LambdaVector::parse(std::string_view input) {
  input = text::trim(input);
  if (!input.empty() && (input.front() == '[' || input.front() == '(')) {
    const char close = input.front() == '[' ? ']' : ')';
    if (input.back() != close) throw InvalidArgument("unbalanced brackets in label '" + std::string(input) + "'");
    input = text::trim(input.substr(1, input.size() - 2));
  }
  std::vector<int> parts;
  if (input.empty()) return LambdaVector(parts);
  for (const auto& item : text::split_top_level(input, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed label entry '" + item + "'");
    }
    if (used != item.size()) throw InvalidArgument("malformed label entry '" + item + "'");
    parts.push_back(value);
  }
  return LambdaVector(std::move(parts));
}

LambdaVector hook(int k, int j) {
  std::vector<int> parts{k};
  parts.insert(parts.end(), static_cast<std::size_t>(j), 1);
  return LambdaVector(std::move(parts));
}

std::vector<LambdaVector> all_integer_vectors(int max_length, int lo, int hi) {
  std::vector<LambdaVector> out{LambdaVector()};
  std::vector<LambdaVector> frontier{LambdaVector()};
  for (int l = 1; l <= max_length; ++l) {
    std::vector<LambdaVector> next;
    for (const auto& v : frontier) {
      for (int a = lo; a <= hi; ++a) next.push_back(v.concat(LambdaVector{a}));
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace hlvir
