#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "hlvir/errors.hpp"
#include "hlvir/field.hpp"

namespace hlvir {

/// Which value of the parameter rho a computation uses.
class RhoSpec {
 public:
  struct Generic {
    friend bool operator==(const Generic&, const Generic&) = default;
  };
  struct RootOfUnity {
    int order;
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  };
  using Value = std::variant<Rational, RootOfUnity, Generic>;

  static RhoSpec generic() { return RhoSpec(Generic{}); }
  static RhoSpec rational(Rational r) { return RhoSpec(std::move(r)); }
  /// rho = xi_n; requires n >= 2.
  static RhoSpec root_of_unity(int n);

  /// Parses "generic", "xi:<n>", or a rational "p/q". Orders above `max_order` are rejected.
  static RhoSpec parse(std::string_view text, int max_order = 64);

  [[nodiscard]] const Value& value() const { return value_; }
  [[nodiscard]] bool is_generic() const { return std::holds_alternative<Generic>(value_); }
  [[nodiscard]] bool is_root_of_unity() const { return std::holds_alternative<RootOfUnity>(value_); }
  [[nodiscard]] bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  /// The order n when rho = xi_n, otherwise 0.
  [[nodiscard]] int order() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const RhoSpec&, const RhoSpec&) = default;

 private:
  explicit RhoSpec(Value v) : value_(std::move(v)) {}
  Value value_;
};

/// Calls fn(field) with the coefficient field matching `rho`.
template <class Fn>
decltype(auto) with_field(const RhoSpec& rho, Fn&& fn) {
  return std::visit(
      [&](const auto& v) -> decltype(auto) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Rational>) {
          return fn(RationalField(v));
        } else if constexpr (std::is_same_v<V, RhoSpec::RootOfUnity>) {
          return fn(CyclotomicField(v.order));
        } else {
          return fn(RationalFunctionField());
        }
      },
      rho.value());
}

}  // namespace hlvir
