#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hlvir {

/// A monomial t_1^{e_1} t_2^{e_2} ... in the graded ring Q[t_1, t_2, ...], deg t_r = r.
/// Stored as the exponent vector (e_1, e_2, ...) with trailing zeros removed, so the
/// empty vector is the unit monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  /// t_index^power
  static Monomial variable(int index, int power = 1);
  /// t_{parts[0]} t_{parts[1]} ... (the t_lambda basis element).
  static Monomial from_parts(const std::vector<int>& parts);

  [[nodiscard]] int exponent(int index) const {
    return index >= 1 && index <= static_cast<int>(exps_.size()) ? exps_[static_cast<std::size_t>(index - 1)] : 0;
  }
  [[nodiscard]] const std::vector<int>& exponents() const { return exps_; }
  /// Weighted degree sum_r r * e_r.
  [[nodiscard]] int degree() const { return degree_; }
  /// Largest variable index present (0 for the unit monomial).
  [[nodiscard]] int max_variable() const { return static_cast<int>(exps_.size()); }
  [[nodiscard]] bool is_one() const { return exps_.empty(); }
  /// Parts of the partition whose t_lambda this is, weakly decreasing.
  [[nodiscard]] std::vector<int> to_parts() const;

  /// Product with t_index^power (power may be negative as long as the result stays valid).
  [[nodiscard]] Monomial times_variable(int index, int power = 1) const;
  [[nodiscard]] Monomial operator*(const Monomial& other) const;

  /// "t1^2*t3"; empty string for the unit monomial.
  [[nodiscard]] std::string to_string() const;
  /// Inverse of to_string; also accepts "1".
  static Monomial parse(std::string_view text);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  void trim_and_grade();
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Canonical term order: higher degree first, then exponent vectors read from
/// t_1 upward in descending lexicographic order.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return b.exponents() < a.exponents();
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
    return h;
  }
};

/// All monomials of weighted degree exactly d (one per partition of d).
std::vector<Monomial> monomials_of_degree(int d);
/// All monomials of weighted degree at most d, in canonical order.
std::vector<Monomial> monomials_up_to_degree(int d);

}  // namespace hlvir
