#pragma once

#include <map>
#include <string>
#include <utility>

#include "hlvir/lambda.hpp"
#include "hlvir/text.hpp"

namespace hlvir {

/// A formal linear combination sum_lambda c_lambda Q_lambda over labels in Z^l.
/// Zero coefficients are never stored; labels iterate in descending lexicographic order.
template <class F>
class QCombination {
 public:
  using Terms = std::map<LambdaVector, F, LabelOrder>;

  QCombination() = default;
  static QCombination single(const LambdaVector& label, const F& c) {
    QCombination q;
    q.add(label, c);
    return q;
  }

  void add(const LambdaVector& label, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(label, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  /// this += c * other
  void add_scaled(const QCombination& other, const F& c) {
    if (c.is_zero()) return;
    for (const auto& [label, a] : other.terms_) add(label, a * c);
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const F* find(const LambdaVector& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? nullptr : &it->second;
  }
  [[nodiscard]] bool supported_on_partitions() const {
    for (const auto& [label, c] : terms_) {
      if (!label.is_partition()) return false;
    }
    return true;
  }

  QCombination& operator+=(const QCombination& rhs) {
    for (const auto& [label, c] : rhs.terms_) add(label, c);
    return *this;
  }
  QCombination& operator-=(const QCombination& rhs) {
    for (const auto& [label, c] : rhs.terms_) add(label, -c);
    return *this;
  }
  friend QCombination operator+(QCombination a, const QCombination& b) { return a += b; }
  friend QCombination operator-(QCombination a, const QCombination& b) { return a -= b; }
  friend bool operator==(const QCombination& a, const QCombination& b) { return a.terms_ == b.terms_; }

  /// "c1*Q[2,1] + c2*Q[1,1,1]"; "0" when empty.
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [label, c] : terms_) text::append_term(out, c.to_string(), "Q" + label.to_string());
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace hlvir
